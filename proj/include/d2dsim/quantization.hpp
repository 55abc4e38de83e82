#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace d2dsim {

/// Linear gain of the additive-quantization-noise model for a b-bit ADC.
/// b = 1..5 uses the tabulated minimum-MSE Gaussian quantizer values,
/// b = 6..12 the asymptotic law 1 - (pi*sqrt(3)/2) * 2^(-2b).
/// Strictly increasing in b; throws DomainError outside [1, 12].
double quant_coeff(int bits);

/// Antenna counts per ADC resolution level: counts[i] antennas run at
/// (i + 1)-bit resolution. sum(counts) equals the BS antenna count.
struct ResolutionProfile {
    std::vector<int> counts;

    int levels() const { return int(counts.size()); }
    int total_antennas() const;
    /// Throws DomainError if any count is negative, the level count is
    /// outside [1, 12], or (when expected_nr >= 0) the total mismatches.
    void validate(int expected_nr = -1) const;

    /// All antennas at the same resolution.
    static ResolutionProfile uniform(int nr, int bits, int bmax);

    std::string to_csv() const;  // "l_1,...,l_bmax"

    bool operator==(const ResolutionProfile&) const = default;
};

/// Receive-combining statistics (psi1, psi2) = (sum a_b, sum a_b^2) over all
/// antennas. `coeff` defaults to quant_coeff; tests may substitute ideal ADCs.
std::pair<double, double> psi_stats(const ResolutionProfile& profile,
                                    const std::function<double(int)>& coeff = quant_coeff);

/// BS energy c0 * sum(l_b * 2^b) + c1.
double bs_energy(const ResolutionProfile& profile, double c0, double c1);

} // namespace d2dsim
