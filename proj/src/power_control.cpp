#include "d2dsim/power_control.hpp"

#include <cmath>
#include <string>

#include "d2dsim/errors.hpp"

namespace d2dsim {

double gamma_bar(double gamma0_linear, double p0) {
    if (!(p0 > 0.0 && p0 < 1.0)) throw DomainError("gamma_bar: p0 must be in (0, 1)");
    if (gamma0_linear < 0.0) throw DomainError("gamma_bar: gamma0 must be >= 0");
    return gamma0_linear / (-std::log1p(-p0));
}

PhiSystem build_phi_core(const Eigen::VectorXd& own_gain, const Eigen::MatrixXd& cross_gain,
                         double gamma_bar_value) {
    const int n = int(own_gain.size());
    if (n < 1) throw DomainError("build_phi: empty cluster");
    if (cross_gain.rows() != n || cross_gain.cols() != n)
        throw DomainError("build_phi: cross-gain matrix size mismatch");

    PhiSystem sys;
    sys.gamma_bar = gamma_bar_value;
    sys.phi.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int col = 0; col < n; ++col)
            sys.phi(i, col) = (i == col) ? own_gain(i) : -gamma_bar_value * cross_gain(col, i);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.phi);
    const auto& sv = svd.singularValues();
    sys.rcond = sv(sv.size() - 1) / sv(0);
    if (!(sys.rcond > 1e-12))
        throw SingularSystemError("build_phi: reciprocal condition " + std::to_string(sys.rcond));
    sys.phi_inv = sys.phi.inverse();
    return sys;
}

PhiSystem build_phi(const std::vector<int>& members, const ScenarioDrop& drop,
                    double gamma_bar_value) {
    const int n = int(members.size());
    Eigen::VectorXd own(n);
    Eigen::MatrixXd cross(n, n);
    for (int i = 0; i < n; ++i) {
        own(i) = drop.due_gain[members[i]];
        for (int col = 0; col < n; ++col)
            cross(i, col) = (i == col) ? 0.0
                                       : drop.due_cross_gain(members[i], members[col]);
    }
    return build_phi_core(own, cross, gamma_bar_value);
}

PowerAllocation allocate_powers_core(const PhiSystem& sys, const Eigen::VectorXd& cue_due_gain,
                                     double sigma2, double p_max_c, double p_max_d) {
    const int n = sys.size();
    if (cue_due_gain.size() != n) throw DomainError("allocate_powers: gain vector size mismatch");

    const double gb = sys.gamma_bar;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const Eigen::VectorXd inv_dot_one = sys.phi_inv * ones;        // phi_i^H 1
    const Eigen::VectorXd inv_dot_alpha = sys.phi_inv * cue_due_gain; // phi_i^H alpha_m

    PowerAllocation out;
    out.p_c = p_max_c;
    for (int i = 0; i < n; ++i) {
        const double denom = gb * inv_dot_alpha(i);
        // denom <= 0 means this row does not upper-bound p_c; the final
        // component-wise check below still vets the resulting p_d.
        if (denom > 0.0)
            out.p_c = std::min(out.p_c, (p_max_d - gb * sigma2 * inv_dot_one(i)) / denom);
    }

    const Eigen::VectorXd rhs = gb * (out.p_c * cue_due_gain + sigma2 * ones);
    out.p_d = sys.phi_inv * rhs;

    const double cap_slack = 1e-9 * p_max_d;
    bool ok = out.p_c >= 0.0 && out.p_c <= p_max_c;
    for (int i = 0; i < n && ok; ++i)
        ok = out.p_d(i) >= -cap_slack && out.p_d(i) <= p_max_d + cap_slack;
    out.feasible = ok;

    const double rhs_norm = rhs.norm();
    out.residual = rhs_norm > 0.0 ? (sys.phi * out.p_d - rhs).norm() / rhs_norm
                                  : (sys.phi * out.p_d).norm();
    return out;
}

PowerAllocation allocate_powers(int cue, const std::vector<int>& members, const ScenarioDrop& drop,
                                const SystemConfig& cfg) {
    PhiSystem sys = build_phi(members, drop, gamma_bar(cfg.gamma0_d, cfg.p0));
    Eigen::VectorXd alpha_m(int(members.size()));
    for (int i = 0; i < int(members.size()); ++i)
        alpha_m(i) = drop.cue_due_gain(cue, members[i]);
    return allocate_powers_core(sys, alpha_m, cfg.sigma2, cfg.p_max_c, cfg.p_max_d);
}

} // namespace d2dsim
