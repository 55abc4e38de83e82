#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2dsim/clustering.hpp"
#include "d2dsim/config.hpp"
#include "d2dsim/power_control.hpp"
#include "d2dsim/quantization.hpp"
#include "d2dsim/rate_matching.hpp"
#include "d2dsim/scenario.hpp"

namespace d2dsim {

struct MatchedPair {
    int cue = -1;
    int cluster = -1;
    PowerAllocation powers;
    double rate = 0.0;
};

/// Composed outcome of one allocation run on one drop.
struct AllocationResult {
    ResolutionProfile profile;
    ClusterAssignment clusters;
    std::vector<MatchedPair> matched;
    std::vector<int> unmatched_cues; // no feasible partner (contribute rate 0)
    double sum_rate = 0.0;           // bits/s/Hz, sum over matched CUEs
    double energy = 0.0;
    int infeasible_pairs = 0;        // over all (CUE, cluster) combinations
};

/// Four-step allocation: resolution profile search, DUE clustering,
/// per-pair power control, maximum-weight spectrum matching.
/// Deterministic given (drop, config); InfeasibleError from the profile
/// search propagates.
AllocationResult run_4sa(const ScenarioDrop& drop, const SystemConfig& config);

/// Baseline: all-1-bit profile, same clustering and power control, CUEs
/// mapped to clusters by a seeded uniformly random permutation.
AllocationResult run_ra_baseline(const ScenarioDrop& drop, const SystemConfig& config);

enum class SweepAxis { speed, budget, antennas, outage };

std::string axis_name(SweepAxis axis);
/// Returns a copy of `config` with the axis value applied (speed_kmh, j, nr
/// or p0). The resolved c0 is kept as-is so antenna sweeps share one energy
/// scale.
SystemConfig apply_axis(const SystemConfig& config, SweepAxis axis, double value);

struct SweepPointStats {
    double mean_sum_rate = 0.0;
    double sem = 0.0; // standard error of the mean
    double mean_energy = 0.0;
};

struct SweepPoint {
    double value = 0.0;
    SweepPointStats fourstep;
    SweepPointStats ra;
    int trials = 0;   // attempted
    int excluded = 0; // infeasible budget or singular pathologies
};

struct SweepReport {
    SweepAxis axis = SweepAxis::speed;
    std::vector<SweepPoint> points;
};

/// Runs `config.trials` independent drops per axis value (trial seeds derived
/// from config.seed, point index and trial index) and aggregates both
/// algorithms. Trials run in parallel; the report is a pure function of
/// (config, values) regardless of thread count.
SweepReport monte_carlo_sweep(const SystemConfig& config, SweepAxis axis,
                              const std::vector<double>& values, int threads = 0);

/// Per-DUE empirical outage probability of one allocated (CUE, cluster) pair
/// under i.i.d. unit-power Rayleigh fading on every involved link.
std::vector<double> empirical_outage(const ScenarioDrop& drop, int cue,
                                     const std::vector<int>& members,
                                     const PowerAllocation& powers, double gamma0_d,
                                     double sigma2, int fading_trials, std::uint64_t seed);

/// Monte-Carlo ergodic rate of a CUE under the quantized receive model:
/// samples Rayleigh channel vectors, applies the per-antenna gains and the
/// matching quantization-noise covariance, MRC-combines and averages
/// log2(1 + SIQNR). Used to validate the closed-form rate.
double mc_ergodic_rate(const ResolutionProfile& profile, double p_c, double cue_bs_gain,
                       const std::vector<double>& p_d, const std::vector<double>& due_bs_gains,
                       double sigma2, int trials, std::uint64_t seed);

} // namespace d2dsim
