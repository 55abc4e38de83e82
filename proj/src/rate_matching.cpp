#include "d2dsim/rate_matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "d2dsim/errors.hpp"

namespace d2dsim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double cue_rate_core(double p_c, double cue_bs_gain, double due_bs_interference,
                     double psi1, double psi2, double sigma2) {
    if (p_c <= 0.0) return 0.0;
    const double a2 = cue_bs_gain * cue_bs_gain;
    const double num = p_c * a2 * (psi1 * psi1 + psi2);
    // nu psi1 - 2 p_c a^2 psi2 with nu = sigma2 a + I a + 2 p_c a^2, regrouped
    // into nonnegative terms (psi2 <= psi1) to avoid cancellation
    const double den = (sigma2 + due_bs_interference) * cue_bs_gain * psi1 +
                       2.0 * p_c * a2 * (psi1 - psi2);
    if (!(den > 0.0))
        throw DomainError("cue_rate_core: non-positive rate denominator");
    return std::log2(1.0 + num / den);
}

double cue_ergodic_rate(int cue, const std::vector<int>& members, const PowerAllocation& powers,
                        double psi1, double psi2, const ScenarioDrop& drop, double sigma2) {
    double interference = 0.0;
    for (int i = 0; i < int(members.size()); ++i)
        interference += powers.p_d(i) * drop.due_bs_gain[members[i]];
    return cue_rate_core(powers.p_c, drop.cue_bs_gain[cue], interference, psi1, psi2, sigma2);
}

RateMatrix build_rate_matrix(const ScenarioDrop& drop, const ClusterAssignment& clusters,
                             const ResolutionProfile& profile, const SystemConfig& cfg) {
    const int m = drop.num_cues();
    const int n = clusters.num_clusters();
    const auto [psi1, psi2] = psi_stats(profile);
    const double gb = gamma_bar(cfg.gamma0_d, cfg.p0);

    RateMatrix out;
    out.rates.resize(m, n);
    out.alloc.assign(m, std::vector<PowerAllocation>(n));
    for (int c = 0; c < n; ++c) {
        const auto& members = clusters.members[c];
        const PhiSystem sys = build_phi(members, drop, gb);
        for (int cue = 0; cue < m; ++cue) {
            Eigen::VectorXd alpha_m(int(members.size()));
            for (int i = 0; i < int(members.size()); ++i)
                alpha_m(i) = drop.cue_due_gain(cue, members[i]);
            PowerAllocation alloc =
                allocate_powers_core(sys, alpha_m, cfg.sigma2, cfg.p_max_c, cfg.p_max_d);
            out.rates(cue, c) =
                alloc.feasible
                    ? cue_ergodic_rate(cue, members, alloc, psi1, psi2, drop, cfg.sigma2)
                    : -kInf;
            out.alloc[cue][c] = std::move(alloc);
        }
    }
    return out;
}

namespace {

// A complete assignment is ranked by (number of forbidden/padded edges asc,
// finite weight sum desc); forbidden edges are only taken when unavoidable.
struct MatchValue {
    int forbidden = 0;
    double sum = 0.0;
};

bool value_reaches(const MatchValue& v, const MatchValue& target, double tol) {
    return v.forbidden == target.forbidden && v.sum >= target.sum - tol;
}

bool value_better(const MatchValue& a, const MatchValue& b) {
    if (a.forbidden != b.forbidden) return a.forbidden < b.forbidden;
    return a.sum > b.sum;
}

// Shortest-augmenting-path assignment on a square cost matrix (minimization).
std::vector<int> solve_min_cost(const Eigen::MatrixXd& cost) {
    const int n = int(cost.rows());
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            int j1 = 0;
            double delta = kInf;
            for (int col = 1; col <= n; ++col) {
                if (used[col]) continue;
                const double cur = cost(i0 - 1, col - 1) - u[i0] - v[col];
                if (cur < minv[col]) {
                    minv[col] = cur;
                    way[col] = j0;
                }
                if (minv[col] < delta) {
                    delta = minv[col];
                    j1 = col;
                }
            }
            for (int col = 0; col <= n; ++col) {
                if (used[col]) {
                    u[match[col]] += delta;
                    v[col] -= delta;
                } else {
                    minv[col] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int col = 1; col <= n; ++col)
        if (match[col] >= 1) row_to_col[match[col] - 1] = col - 1;
    return row_to_col;
}

// Square view of the (possibly rectangular) weight matrix: out-of-range or
// -inf entries are forbidden.
struct PaddedWeights {
    const Eigen::MatrixXd& w;
    int n;

    bool forbidden(int r, int c) const {
        return r >= w.rows() || c >= w.cols() || !std::isfinite(w(r, c));
    }
    double weight(int r, int c) const { return forbidden(r, c) ? 0.0 : w(r, c); }
};

Eigen::MatrixXd cost_matrix(const PaddedWeights& pw, const std::vector<int>& rows,
                            const std::vector<int>& cols, double big) {
    Eigen::MatrixXd cost(int(rows.size()), int(cols.size()));
    for (int r = 0; r < int(rows.size()); ++r)
        for (int c = 0; c < int(cols.size()); ++c)
            cost(r, c) = pw.forbidden(rows[r], cols[c]) ? big : -pw.w(rows[r], cols[c]);
    return cost;
}

MatchValue evaluate(const PaddedWeights& pw, const std::vector<int>& rows,
                    const std::vector<int>& cols, const std::vector<int>& row_to_col) {
    MatchValue v;
    for (int r = 0; r < int(rows.size()); ++r) {
        const int c = cols[row_to_col[r]];
        if (pw.forbidden(rows[r], c))
            ++v.forbidden;
        else
            v.sum += pw.w(rows[r], c);
    }
    return v;
}

MatchValue solve_value(const PaddedWeights& pw, const std::vector<int>& rows,
                       const std::vector<int>& cols, double big) {
    if (rows.empty()) return {};
    return evaluate(pw, rows, cols, solve_min_cost(cost_matrix(pw, rows, cols, big)));
}

Matching compose_matching(const Eigen::MatrixXd& rates, const std::vector<int>& row_to_col) {
    Matching out;
    out.cluster_of_cue.assign(rates.rows(), -1);
    for (int r = 0; r < int(rates.rows()); ++r) {
        const int c = row_to_col[r];
        if (c >= 0 && c < rates.cols() && std::isfinite(rates(r, c))) {
            out.cluster_of_cue[r] = c;
            out.total += rates(r, c);
        }
    }
    return out;
}

} // namespace

Matching hungarian_match(const Eigen::MatrixXd& rates) {
    const int n = int(std::max(rates.rows(), rates.cols()));
    if (n == 0) return {};
    PaddedWeights pw{rates, n};

    double big = 1.0;
    for (int r = 0; r < int(rates.rows()); ++r)
        for (int c = 0; c < int(rates.cols()); ++c)
            if (std::isfinite(rates(r, c))) big += std::abs(rates(r, c));

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const MatchValue opt = solve_value(pw, all, all, big);
    const double tol = 1e-9 * std::max(1.0, std::abs(opt.sum));

    // Fix rows in order, taking the lowest column that still reaches the
    // optimal value; this makes ties deterministic (lowest-index assignment).
    std::vector<int> cols(all), result(n, -1);
    MatchValue fixed;
    for (int r = 0; r < n; ++r) {
        std::vector<int> tail(all.begin() + r + 1, all.end());
        int best_c = -1;
        MatchValue best_total{std::numeric_limits<int>::max(), -kInf};
        for (int ci = 0; ci < int(cols.size()); ++ci) {
            const int c = cols[ci];
            std::vector<int> rest(cols);
            rest.erase(rest.begin() + ci);
            MatchValue total = solve_value(pw, tail, rest, big);
            total.forbidden += fixed.forbidden + (pw.forbidden(r, c) ? 1 : 0);
            total.sum += fixed.sum + pw.weight(r, c);
            if (value_reaches(total, opt, tol)) {
                best_c = c;
                break;
            }
            if (value_better(total, best_total)) {
                best_total = total;
                best_c = c;
            }
        }
        result[r] = best_c;
        fixed.forbidden += pw.forbidden(r, best_c) ? 1 : 0;
        fixed.sum += pw.weight(r, best_c);
        cols.erase(std::find(cols.begin(), cols.end(), best_c));
    }
    return compose_matching(rates, result);
}

Matching brute_force_match_oracle(const Eigen::MatrixXd& rates) {
    const int n = int(std::max(rates.rows(), rates.cols()));
    if (n > 8) throw ScaleError("brute_force_match_oracle: guarded to 8x8");
    if (n == 0) return {};
    PaddedWeights pw{rates, n};

    std::vector<int> perm(n), best;
    std::iota(perm.begin(), perm.end(), 0);
    MatchValue best_val{std::numeric_limits<int>::max(), -kInf};
    do {
        MatchValue v;
        for (int r = 0; r < n; ++r) {
            if (pw.forbidden(r, perm[r]))
                ++v.forbidden;
            else
                v.sum += pw.w(r, perm[r]);
        }
        if (value_better(v, best_val)) {
            best_val = v;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return compose_matching(rates, best);
}

} // namespace d2dsim
