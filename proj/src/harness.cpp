#include "d2dsim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <thread>

#include "d2dsim/adc_search.hpp"
#include "d2dsim/errors.hpp"
#include "d2dsim/rng.hpp"

namespace d2dsim {

namespace {

AllocationResult compose_result(const ScenarioDrop& drop, const SystemConfig& cfg,
                                ResolutionProfile profile, const Matching& matching,
                                RateMatrix&& rm, ClusterAssignment&& clusters) {
    AllocationResult out;
    out.profile = std::move(profile);
    out.clusters = std::move(clusters);
    out.energy = bs_energy(out.profile, cfg.c0, cfg.c1);
    for (int m = 0; m < drop.num_cues(); ++m) {
        const int n = matching.cluster_of_cue[m];
        if (n < 0) {
            out.unmatched_cues.push_back(m);
            continue;
        }
        out.matched.push_back({m, n, std::move(rm.alloc[m][n]), rm.rates(m, n)});
        out.sum_rate += rm.rates(m, n);
    }
    for (int m = 0; m < int(rm.rates.rows()); ++m)
        for (int n = 0; n < int(rm.rates.cols()); ++n)
            if (!std::isfinite(rm.rates(m, n))) ++out.infeasible_pairs;
    return out;
}

// Seeded uniformly random one-to-one CUE->cluster map.
Matching random_matching(const Eigen::MatrixXd& rates, std::uint64_t seed) {
    const int m = int(rates.rows()), n = int(rates.cols());
    std::vector<int> clusters(n);
    std::iota(clusters.begin(), clusters.end(), 0);
    auto engine = make_engine(seed);
    std::shuffle(clusters.begin(), clusters.end(), engine);

    std::vector<int> cues(m);
    std::iota(cues.begin(), cues.end(), 0);
    if (m > n) std::shuffle(cues.begin(), cues.end(), engine); // n of them get spectrum

    Matching out;
    out.cluster_of_cue.assign(m, -1);
    for (int i = 0; i < std::min(m, n); ++i) {
        const int cue = cues[i], cluster = clusters[i];
        if (std::isfinite(rates(cue, cluster))) {
            out.cluster_of_cue[cue] = cluster;
            out.total += rates(cue, cluster);
        }
    }
    return out;
}

} // namespace

AllocationResult run_4sa(const ScenarioDrop& drop, const SystemConfig& cfg) {
    cfg.validate();
    ResolutionProfile profile = decremental_search(cfg.nr, cfg.bmax, cfg.c0, cfg.c1, cfg.j);
    ClusterAssignment clusters = cluster_dues(build_interference_graph(drop), cfg.n);
    RateMatrix rm = build_rate_matrix(drop, clusters, profile, cfg);
    Matching matching = hungarian_match(rm.rates);
    return compose_result(drop, cfg, std::move(profile), matching, std::move(rm),
                          std::move(clusters));
}

AllocationResult run_ra_baseline(const ScenarioDrop& drop, const SystemConfig& cfg) {
    cfg.validate();
    ResolutionProfile profile = ResolutionProfile::uniform(cfg.nr, 1, cfg.bmax);
    if (bs_energy(profile, cfg.c0, cfg.c1) > cfg.j)
        throw InfeasibleError("run_ra_baseline: all-1-bit profile exceeds budget");
    ClusterAssignment clusters = cluster_dues(build_interference_graph(drop), cfg.n);
    RateMatrix rm = build_rate_matrix(drop, clusters, profile, cfg);
    Matching matching = random_matching(rm.rates, derive_seed(drop.drop_seed, 0x7261ULL)); // "ra"
    return compose_result(drop, cfg, std::move(profile), matching, std::move(rm),
                          std::move(clusters));
}

std::string axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::speed: return "speed_kmh";
    case SweepAxis::budget: return "j";
    case SweepAxis::antennas: return "nr";
    case SweepAxis::outage: return "p0";
    }
    return "?";
}

SystemConfig apply_axis(const SystemConfig& cfg, SweepAxis axis, double value) {
    SystemConfig out = cfg;
    switch (axis) {
    case SweepAxis::speed: out.speed_kmh = value; break;
    case SweepAxis::budget: out.j = value; break;
    case SweepAxis::antennas: out.nr = int(value); break;
    case SweepAxis::outage: out.p0 = value; break;
    }
    out.validate();
    return out;
}

namespace {

struct TrialOutcome {
    bool ok = false;
    double rate_4sa = 0.0, energy_4sa = 0.0;
    double rate_ra = 0.0, energy_ra = 0.0;
};

SweepPointStats aggregate(const std::vector<TrialOutcome>& outs, bool ra) {
    SweepPointStats s;
    int n = 0;
    double sum = 0.0, sum_energy = 0.0;
    for (const auto& t : outs) {
        if (!t.ok) continue;
        ++n;
        sum += ra ? t.rate_ra : t.rate_4sa;
        sum_energy += ra ? t.energy_ra : t.energy_4sa;
    }
    if (n == 0) return s;
    s.mean_sum_rate = sum / n;
    s.mean_energy = sum_energy / n;
    if (n > 1) {
        double ss = 0.0;
        for (const auto& t : outs) {
            if (!t.ok) continue;
            const double d = (ra ? t.rate_ra : t.rate_4sa) - s.mean_sum_rate;
            ss += d * d;
        }
        s.sem = std::sqrt(ss / (n - 1)) / std::sqrt(double(n));
    }
    return s;
}

} // namespace

SweepReport monte_carlo_sweep(const SystemConfig& cfg, SweepAxis axis,
                              const std::vector<double>& values, int threads) {
    cfg.validate();
    if (threads <= 0)
        threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));

    SweepReport report;
    report.axis = axis;
    for (int pi = 0; pi < int(values.size()); ++pi) {
        const SystemConfig point_cfg = apply_axis(cfg, axis, values[pi]);
        std::vector<TrialOutcome> outs(point_cfg.trials);

        auto worker = [&](int offset) {
            for (int t = offset; t < point_cfg.trials; t += threads) {
                const std::uint64_t seed =
                    derive_seed(cfg.seed, std::uint64_t(pi), std::uint64_t(t));
                try {
                    const ScenarioDrop drop = generate_drop(point_cfg, seed);
                    const AllocationResult four = run_4sa(drop, point_cfg);
                    const AllocationResult ra = run_ra_baseline(drop, point_cfg);
                    outs[t] = {true, four.sum_rate, four.energy, ra.sum_rate, ra.energy};
                } catch (const InfeasibleError&) {
                    outs[t].ok = false;
                } catch (const SingularSystemError&) {
                    outs[t].ok = false;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < threads; ++w) pool.emplace_back(worker, w);
        worker(0);
        for (auto& th : pool) th.join();

        SweepPoint point;
        point.value = values[pi];
        point.trials = point_cfg.trials;
        point.excluded = int(std::count_if(outs.begin(), outs.end(),
                                           [](const TrialOutcome& t) { return !t.ok; }));
        point.fourstep = aggregate(outs, false);
        point.ra = aggregate(outs, true);
        report.points.push_back(point);
    }
    return report;
}

std::vector<double> empirical_outage(const ScenarioDrop& drop, int cue,
                                     const std::vector<int>& members,
                                     const PowerAllocation& powers, double gamma0_d,
                                     double sigma2, int fading_trials, std::uint64_t seed) {
    const int n = int(members.size());
    auto engine = make_engine(derive_seed(seed, 0x6f757467ULL)); // "outg"
    std::exponential_distribution<double> fading(1.0);           // |g|^2, unit mean

    std::vector<int> outages(n, 0);
    for (int t = 0; t < fading_trials; ++t) {
        for (int i = 0; i < n; ++i) {
            const double own = powers.p_d(i) * drop.due_gain[members[i]] * fading(engine);
            double denom = sigma2;
            if (powers.p_c > 0.0)
                denom += powers.p_c * drop.cue_due_gain(cue, members[i]) * fading(engine);
            for (int other = 0; other < n; ++other) {
                if (other == i) continue;
                denom += powers.p_d(other) *
                         drop.due_cross_gain(members[other], members[i]) * fading(engine);
            }
            if (own / denom <= gamma0_d) ++outages[i];
        }
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = double(outages[i]) / fading_trials;
    return out;
}

double mc_ergodic_rate(const ResolutionProfile& profile, double p_c, double cue_bs_gain,
                       const std::vector<double>& p_d, const std::vector<double>& due_bs_gains,
                       double sigma2, int trials, std::uint64_t seed) {
    profile.validate();
    if (p_d.size() != due_bs_gains.size())
        throw DomainError("mc_ergodic_rate: interferer vectors must align");
    const int nr = profile.total_antennas();
    const int nk = int(p_d.size());

    // Per-antenna gains; ordering is irrelevant for the statistics.
    Eigen::VectorXd a(nr);
    int idx = 0;
    for (int level = 0; level < profile.levels(); ++level)
        for (int c = 0; c < profile.counts[level]; ++c) a(idx++) = quant_coeff(level + 1);

    auto engine = make_engine(derive_seed(seed, 0x6d637261ULL)); // "mcra"
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5)); // per real dimension

    Eigen::VectorXcd g_cue(nr);
    Eigen::MatrixXcd g_due(nr, nk);
    double acc = 0.0;
    for (int t = 0; t < trials; ++t) {
        for (int i = 0; i < nr; ++i)
            g_cue(i) = std::sqrt(cue_bs_gain) * std::complex<double>(gauss(engine), gauss(engine));
        for (int k = 0; k < nk; ++k)
            for (int i = 0; i < nr; ++i)
                g_due(i, k) =
                    std::sqrt(due_bs_gains[k]) * std::complex<double>(gauss(engine), gauss(engine));

        // MRC with the quantizer gains applied per antenna.
        std::complex<double> signal = 0.0;
        double noise = 0.0, quant = 0.0;
        for (int i = 0; i < nr; ++i) {
            const double gm2 = std::norm(g_cue(i));
            signal += a(i) * gm2;
            noise += a(i) * a(i) * gm2;
            double rx_power = p_c * gm2 + sigma2;
            for (int k = 0; k < nk; ++k) rx_power += p_d[k] * std::norm(g_due(i, k));
            quant += a(i) * (1.0 - a(i)) * rx_power * gm2;
        }
        double interference = 0.0;
        for (int k = 0; k < nk; ++k) {
            std::complex<double> cross = 0.0;
            for (int i = 0; i < nr; ++i) cross += std::conj(g_cue(i)) * a(i) * g_due(i, k);
            interference += p_d[k] * std::norm(cross);
        }
        const double siqnr =
            p_c * std::norm(signal) / (interference + sigma2 * noise + quant);
        acc += std::log2(1.0 + siqnr);
    }
    return acc / trials;
}

} // namespace d2dsim
