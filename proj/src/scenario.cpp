#include "d2dsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "d2dsim/errors.hpp"
#include "d2dsim/rng.hpp"

namespace d2dsim {

double slow_fading_gain(double distance_m, LinkKind kind, double shadow_db,
                        const ChannelModel& model) {
    if (!(distance_m > 0.0))
        throw DomainError("slow_fading_gain: distance must be > 0");
    double pl_db = 0.0;
    switch (kind) {
    case LinkKind::v2i:
        pl_db = model.v2i_pl_a_db + model.v2i_pl_b_db * std::log10(distance_m / 1000.0);
        break;
    case LinkKind::v2v:
        pl_db = model.v2v_ref_db + 10.0 * model.v2v_exp * std::log10(distance_m);
        break;
    }
    return std::pow(10.0, -(pl_db + shadow_db) / 10.0);
}

double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

// Path-loss distances below the 1 m V2V reference are clamped.
constexpr double kMinLinkDistance = 1.0;

double link_distance(const Vec2& a, const Vec2& b) {
    return std::max(distance(a, b), kMinLinkDistance);
}

// Fills every gain field from positions. `shadow` draws one dB value per
// link; the call order below is part of the reproducibility contract.
void compute_gains(ScenarioDrop& drop, const SystemConfig& cfg,
                   const std::function<double(LinkKind)>& shadow) {
    const int m = drop.num_cues(), k = drop.num_dues();
    const auto& ch = cfg.channel;
    auto pos = [&](int v) { return drop.vehicles[v]; };

    drop.cue_bs_gain.resize(m);
    for (int i = 0; i < m; ++i)
        drop.cue_bs_gain[i] = slow_fading_gain(link_distance(pos(drop.cue_vehicle[i]), drop.bs_pos),
                                               LinkKind::v2i, shadow(LinkKind::v2i), ch);

    drop.due_gain.resize(k);
    for (int i = 0; i < k; ++i)
        drop.due_gain[i] =
            slow_fading_gain(link_distance(pos(drop.due_tx_vehicle[i]), pos(drop.due_rx_vehicle[i])),
                             LinkKind::v2v, shadow(LinkKind::v2v), ch);

    drop.due_cross_gain = Eigen::MatrixXd::Zero(k, k);
    for (int src = 0; src < k; ++src)
        for (int dst = 0; dst < k; ++dst) {
            if (src == dst) continue;
            drop.due_cross_gain(src, dst) =
                slow_fading_gain(link_distance(pos(drop.due_tx_vehicle[src]), pos(drop.due_rx_vehicle[dst])),
                                 LinkKind::v2v, shadow(LinkKind::v2v), ch);
        }

    drop.cue_due_gain = Eigen::MatrixXd::Zero(m, k);
    for (int c = 0; c < m; ++c)
        for (int d = 0; d < k; ++d)
            drop.cue_due_gain(c, d) =
                slow_fading_gain(link_distance(pos(drop.cue_vehicle[c]), pos(drop.due_rx_vehicle[d])),
                                 LinkKind::v2v, shadow(LinkKind::v2v), ch);

    drop.due_bs_gain.resize(k);
    for (int i = 0; i < k; ++i)
        drop.due_bs_gain[i] = slow_fading_gain(link_distance(pos(drop.due_tx_vehicle[i]), drop.bs_pos),
                                               LinkKind::v2i, shadow(LinkKind::v2i), ch);
}

} // namespace

ScenarioDrop generate_drop(const SystemConfig& cfg, std::uint64_t drop_seed) {
    cfg.validate();
    auto engine = make_engine(derive_seed(drop_seed, 0x64726f70ULL)); // "drop"

    const double lambda = cfg.vehicle_density();
    const int needed = cfg.m + 2 * cfg.k;
    constexpr int kMaxAttempts = 64;

    ScenarioDrop drop;
    drop.drop_seed = drop_seed;
    drop.bs_pos = {cfg.road_length_m / 2.0, -cfg.bs_offset_m};

    std::poisson_distribution<int> count_dist(lambda * cfg.road_length_m);
    std::uniform_real_distribution<double> pos_dist(0.0, cfg.road_length_m);

    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
        drop.vehicles.clear();
        for (int lane = 0; lane < cfg.lanes; ++lane) {
            const int count = count_dist(engine);
            const double y = (lane + 0.5) * cfg.lane_width_m;
            std::vector<double> xs(count);
            for (double& x : xs) x = pos_dist(engine);
            std::sort(xs.begin(), xs.end());
            for (double x : xs) drop.vehicles.push_back({x, y});
        }
        const int total = int(drop.vehicles.size());
        if (total < needed) continue;

        // M CUEs then K DUE transmitters, uniformly without replacement.
        std::vector<int> order(total);
        for (int i = 0; i < total; ++i) order[i] = i;
        for (int i = 0; i < cfg.m + cfg.k; ++i) {
            std::uniform_int_distribution<int> pick(i, total - 1);
            std::swap(order[i], order[pick(engine)]);
        }
        drop.cue_vehicle.assign(order.begin(), order.begin() + cfg.m);
        drop.due_tx_vehicle.assign(order.begin() + cfg.m, order.begin() + cfg.m + cfg.k);

        std::vector<char> taken(total, 0);
        for (int v : drop.cue_vehicle) taken[v] = 1;
        for (int v : drop.due_tx_vehicle) taken[v] = 1;

        // Receiver = nearest free vehicle; ties go to the lower index.
        drop.due_rx_vehicle.clear();
        bool ok = true;
        for (int tx : drop.due_tx_vehicle) {
            int best = -1;
            double best_d = std::numeric_limits<double>::infinity();
            for (int v = 0; v < total; ++v) {
                if (taken[v]) continue;
                const double d = distance(drop.vehicles[tx], drop.vehicles[v]);
                if (d < best_d) {
                    best_d = d;
                    best = v;
                }
            }
            if (best < 0) {
                ok = false;
                break;
            }
            taken[best] = 1;
            drop.due_rx_vehicle.push_back(best);
        }
        placed = ok;
        if (!ok) {
            drop.cue_vehicle.clear();
            drop.due_tx_vehicle.clear();
            drop.due_rx_vehicle.clear();
        }
    }
    if (!placed)
        throw ConfigError("generate_drop: road cannot host " + std::to_string(needed) +
                          " vehicles at this density; extend the road or lower the speed");

    std::normal_distribution<double> unit_normal(0.0, 1.0);
    auto shadow = [&](LinkKind kind) {
        const double sd = kind == LinkKind::v2i ? cfg.channel.v2i_shadow_db : cfg.channel.v2v_shadow_db;
        return sd > 0.0 ? sd * unit_normal(engine) : 0.0;
    };
    compute_gains(drop, cfg, shadow);
    return drop;
}

ScenarioDrop drop_from_positions(const SystemConfig& cfg,
                                 const std::vector<Vec2>& cue_pos,
                                 const std::vector<Vec2>& due_tx_pos,
                                 const std::vector<Vec2>& due_rx_pos) {
    cfg.validate();
    if (int(cue_pos.size()) != cfg.m || int(due_tx_pos.size()) != cfg.k ||
        int(due_rx_pos.size()) != cfg.k)
        throw ConfigError("drop_from_positions: endpoint counts must match config m/k");

    ScenarioDrop drop;
    drop.bs_pos = {cfg.road_length_m / 2.0, -cfg.bs_offset_m};
    for (const auto& p : cue_pos) {
        drop.cue_vehicle.push_back(int(drop.vehicles.size()));
        drop.vehicles.push_back(p);
    }
    for (const auto& p : due_tx_pos) {
        drop.due_tx_vehicle.push_back(int(drop.vehicles.size()));
        drop.vehicles.push_back(p);
    }
    for (const auto& p : due_rx_pos) {
        drop.due_rx_vehicle.push_back(int(drop.vehicles.size()));
        drop.vehicles.push_back(p);
    }
    compute_gains(drop, cfg, [](LinkKind) { return 0.0; });
    return drop;
}

void write_drop_csv(std::ostream& os, const ScenarioDrop& drop) {
    os << "link_type,endpoint_a,endpoint_b,distance_m,gain\n";
    auto row = [&](const char* type, int a, const char* b, double d, double g) {
        os << type << ',' << a << ',' << b << ',' << d << ',' << g << '\n';
    };
    auto vehicle_str = [](int v) { return std::to_string(v); };
    const auto& veh = drop.vehicles;
    for (int m = 0; m < drop.num_cues(); ++m)
        row("cue_bs", drop.cue_vehicle[m], "BS",
            distance(veh[drop.cue_vehicle[m]], drop.bs_pos), drop.cue_bs_gain[m]);
    for (int k = 0; k < drop.num_dues(); ++k)
        row("due", drop.due_tx_vehicle[k], vehicle_str(drop.due_rx_vehicle[k]).c_str(),
            distance(veh[drop.due_tx_vehicle[k]], veh[drop.due_rx_vehicle[k]]), drop.due_gain[k]);
    for (int src = 0; src < drop.num_dues(); ++src)
        for (int dst = 0; dst < drop.num_dues(); ++dst) {
            if (src == dst) continue;
            row("due_cross", drop.due_tx_vehicle[src], vehicle_str(drop.due_rx_vehicle[dst]).c_str(),
                distance(veh[drop.due_tx_vehicle[src]], veh[drop.due_rx_vehicle[dst]]),
                drop.due_cross_gain(src, dst));
        }
    for (int m = 0; m < drop.num_cues(); ++m)
        for (int k = 0; k < drop.num_dues(); ++k)
            row("cue_due", drop.cue_vehicle[m], vehicle_str(drop.due_rx_vehicle[k]).c_str(),
                distance(veh[drop.cue_vehicle[m]], veh[drop.due_rx_vehicle[k]]),
                drop.cue_due_gain(m, k));
    for (int k = 0; k < drop.num_dues(); ++k)
        row("due_bs", drop.due_tx_vehicle[k], "BS",
            distance(veh[drop.due_tx_vehicle[k]], drop.bs_pos), drop.due_bs_gain[k]);
}

} // namespace d2dsim
