#pragma once

#include <vector>

#include <Eigen/Dense>

#include "d2dsim/clustering.hpp"
#include "d2dsim/power_control.hpp"
#include "d2dsim/quantization.hpp"

namespace d2dsim {

/// Ergodic uplink rate of a CUE under quantized MRC reception,
/// log2(1 + p_c a^2 (psi1^2 + psi2) / (nu psi1 - 2 p_c a^2 psi2)) with
/// nu = sigma2 a + I a + 2 p_c a^2, a the CUE-BS gain and I the summed
/// received DUE interference power at the BS. Returns 0 when p_c = 0;
/// throws DomainError if the denominator is non-positive (requires
/// sigma2 = 0 plus degenerate psi stats).
double cue_rate_core(double p_c, double cue_bs_gain, double due_bs_interference,
                     double psi1, double psi2, double sigma2);

double cue_ergodic_rate(int cue, const std::vector<int>& members, const PowerAllocation& powers,
                        double psi1, double psi2, const ScenarioDrop& drop, double sigma2);

/// Per-(CUE, cluster) rates with the powers that produced them;
/// -inf marks power-infeasible pairs.
struct RateMatrix {
    Eigen::MatrixXd rates;                          // m x n
    std::vector<std::vector<PowerAllocation>> alloc; // [m][n]
};

RateMatrix build_rate_matrix(const ScenarioDrop& drop, const ClusterAssignment& clusters,
                             const ResolutionProfile& profile, const SystemConfig& config);

/// One-to-one spectrum assignment.
struct Matching {
    std::vector<int> cluster_of_cue; // -1 when the CUE ends up unmatched
    double total = 0.0;              // sum of the matched finite rates
};

/// Maximum-weight bipartite matching (shortest-augmenting-path Hungarian).
/// Rectangular inputs are padded internally; -inf entries are selected only
/// when no finite perfect matching exists, and such CUEs come back
/// unmatched. Among ties the lowest-index assignment is returned.
Matching hungarian_match(const Eigen::MatrixXd& rates);

/// Permutation enumeration oracle; throws ScaleError beyond 8x8 (padded).
Matching brute_force_match_oracle(const Eigen::MatrixXd& rates);

} // namespace d2dsim
