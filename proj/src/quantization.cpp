#include "d2dsim/quantization.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "d2dsim/errors.hpp"

namespace d2dsim {

namespace {
// Minimum-MSE (Lloyd-Max) gains for a unit Gaussian input, 1..5 bits.
constexpr double kLloydMaxGain[5] = {0.6366, 0.8825, 0.96546, 0.990503, 0.997501};
} // namespace

double quant_coeff(int bits) {
    if (bits < 1 || bits > 12)
        throw DomainError("quant_coeff: bits must be in [1, 12], got " + std::to_string(bits));
    if (bits <= 5) return kLloydMaxGain[bits - 1];
    return 1.0 - (std::numbers::pi * std::numbers::sqrt3 / 2.0) * std::exp2(-2.0 * bits);
}

int ResolutionProfile::total_antennas() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

void ResolutionProfile::validate(int expected_nr) const {
    if (counts.empty() || counts.size() > 12)
        throw DomainError("profile: level count must be in [1, 12]");
    for (int c : counts)
        if (c < 0) throw DomainError("profile: negative antenna count");
    if (expected_nr >= 0 && total_antennas() != expected_nr)
        throw DomainError("profile: antenna total " + std::to_string(total_antennas()) +
                          " != " + std::to_string(expected_nr));
}

ResolutionProfile ResolutionProfile::uniform(int nr, int bits, int bmax) {
    if (bits < 1 || bits > bmax)
        throw DomainError("profile: bits out of [1, bmax]");
    ResolutionProfile p;
    p.counts.assign(bmax, 0);
    p.counts[bits - 1] = nr;
    return p;
}

std::string ResolutionProfile::to_csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ',';
        os << counts[i];
    }
    return os.str();
}

std::pair<double, double> psi_stats(const ResolutionProfile& profile,
                                    const std::function<double(int)>& coeff) {
    profile.validate();
    double psi1 = 0.0, psi2 = 0.0;
    for (int i = 0; i < profile.levels(); ++i) {
        if (profile.counts[i] == 0) continue;
        const double a = coeff(i + 1);
        psi1 += profile.counts[i] * a;
        psi2 += profile.counts[i] * a * a;
    }
    return {psi1, psi2};
}

double bs_energy(const ResolutionProfile& profile, double c0, double c1) {
    profile.validate();
    double sum = 0.0;
    for (int i = 0; i < profile.levels(); ++i)
        sum += profile.counts[i] * std::exp2(double(i + 1));
    return c0 * sum + c1;
}

} // namespace d2dsim
