#pragma once

#include <vector>

#include <Eigen/Dense>

#include "d2dsim/config.hpp"
#include "d2dsim/scenario.hpp"

namespace d2dsim {

/// Outage-transformed SINR threshold gamma0 / (-ln(1 - p0)); the inverse CDF
/// of the unit-mean exponential fading power is analytic.
double gamma_bar(double gamma0_linear, double p0);

/// Linear system of the tight outage constraints for one DUE cluster:
/// phi(i,i) = alpha_i, phi(i,j) = -gamma_bar * alpha_{j,i}. CUE-independent,
/// so one PhiSystem serves every candidate CUE of the cluster.
struct PhiSystem {
    double gamma_bar = 0.0;
    Eigen::MatrixXd phi;
    Eigen::MatrixXd phi_inv;
    double rcond = 0.0; // smallest/largest singular value

    int size() const { return int(phi.rows()); }
};

/// Throws SingularSystemError when the reciprocal condition number falls
/// below 1e-12 (the system is diagonally dominant for sane inputs, so this
/// signals pathological gains).
PhiSystem build_phi_core(const Eigen::VectorXd& own_gain, const Eigen::MatrixXd& cross_gain,
                         double gamma_bar_value);
PhiSystem build_phi(const std::vector<int>& members, const ScenarioDrop& drop,
                    double gamma_bar_value);

/// Transmit powers for one (CUE, cluster) pair. When feasible, the outage
/// constraints hold with equality: phi * p_d = gamma_bar (p_c alpha_m + sigma2).
struct PowerAllocation {
    double p_c = 0.0;
    Eigen::VectorXd p_d; // ordered like the cluster member list
    bool feasible = false;
    double residual = 0.0; // relative equality residual of the solved system
};

/// Closed-form optimum: p_c is the largest power keeping every member's
/// equality power under its cap (and under p_max_c), p_d solves the tight
/// system. Infeasibility is reported through the flag, not an exception.
PowerAllocation allocate_powers_core(const PhiSystem& system, const Eigen::VectorXd& cue_due_gain,
                                     double sigma2, double p_max_c, double p_max_d);
PowerAllocation allocate_powers(int cue, const std::vector<int>& members, const ScenarioDrop& drop,
                                const SystemConfig& config);

} // namespace d2dsim
