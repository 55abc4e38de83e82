#pragma once

#include <functional>

#include "d2dsim/quantization.hpp"

namespace d2dsim {

/// Decremental search for the resolution profile: starts from all antennas at
/// bmax and repeatedly moves one antenna from the current top level x to the
/// highest lower level that brings the energy within budget, parking it at
/// x-1 otherwise; the first in-budget profile ends the search. If the
/// all-bmax profile already fits it is returned unchanged.
/// Throws InfeasibleError when even the all-1-bit profile exceeds j.
ResolutionProfile decremental_search(int nr, int bmax, double c0, double c1, double j);

/// Enumerates every composition of nr antennas into bmax levels and returns
/// the in-budget profile maximizing rate_eval (first found wins ties).
/// Test-scale oracle: throws ScaleError when nr > 10 or bmax > 4.
ResolutionProfile exhaustive_profile_oracle(
    int nr, int bmax, double c0, double c1, double j,
    const std::function<double(const ResolutionProfile&)>& rate_eval);

} // namespace d2dsim
