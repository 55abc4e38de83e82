#pragma once

#include <iosfwd>
#include <string>

#include "d2dsim/harness.hpp"

namespace d2dsim {

/// One row per sweep point per algorithm:
/// axis_value,algorithm,mean_sum_rate,stderr,trials,excluded_trials,mean_energy
void write_sweep_csv(std::ostream& os, const SweepReport& report);

/// Self-contained SVG: mean sum-rate vs axis for both algorithms with
/// 1-stderr error bars. `log_x` renders the axis on a log2 scale (budgets).
void write_sweep_svg(std::ostream& os, const SweepReport& report, const std::string& title,
                     bool log_x = false);

/// "cue,cluster,p_c,p_d_1.." rows for every matched pair of a run.
void write_allocation_csv(std::ostream& os, const AllocationResult& result);

} // namespace d2dsim
