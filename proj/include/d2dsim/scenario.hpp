#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "d2dsim/config.hpp"

namespace d2dsim {

enum class LinkKind { v2i, v2v };

/// Linear power gain 10^(-(PL_dB(d) + shadow_db)/10) for the configured
/// path-loss law of the link kind. Throws DomainError if distance <= 0.
double slow_fading_gain(double distance_m, LinkKind kind, double shadow_db,
                        const ChannelModel& model = {});

struct Vec2 {
    double x = 0.0, y = 0.0;
    bool operator==(const Vec2&) const = default;
};

double distance(const Vec2& a, const Vec2& b);

/// One snapshot of vehicle positions and every slow-fading coefficient the
/// allocator needs. Gains are linear power gains; matrices are indexed
/// (source, destination) where that distinction matters.
struct ScenarioDrop {
    std::uint64_t drop_seed = 0;

    std::vector<Vec2> vehicles;      // all dropped vehicles, lane by lane
    std::vector<int> cue_vehicle;    // m -> vehicle index
    std::vector<int> due_tx_vehicle; // k -> vehicle index
    std::vector<int> due_rx_vehicle; // k -> vehicle index
    Vec2 bs_pos;

    std::vector<double> cue_bs_gain; // alpha_{m,B}
    std::vector<double> due_gain;    // alpha_k (own Tx->Rx link)
    Eigen::MatrixXd due_cross_gain;  // (k', k): DUE k' Tx -> DUE k Rx; diagonal unused (0)
    Eigen::MatrixXd cue_due_gain;    // (m, k): CUE m -> DUE k Rx
    std::vector<double> due_bs_gain; // alpha_{k,B}

    int num_cues() const { return int(cue_vehicle.size()); }
    int num_dues() const { return int(due_tx_vehicle.size()); }
};

/// Drops vehicles on the freeway with a per-lane 1-D Poisson process of
/// density 1/(2.5 * v) vehicles/m, picks M CUEs and K DUE transmitters
/// uniformly without replacement, pairs each DUE Tx with its nearest
/// still-unassigned vehicle, and computes all slow-fading coefficients.
/// Pure function of (config, drop_seed). Throws ConfigError if the road
/// cannot host m + 2k vehicles after a bounded number of redraws.
ScenarioDrop generate_drop(const SystemConfig& config, std::uint64_t drop_seed);

/// Deterministic drop from explicit endpoint positions (no shadowing).
/// Sizes must match config.m and config.k.
ScenarioDrop drop_from_positions(const SystemConfig& config,
                                 const std::vector<Vec2>& cue_pos,
                                 const std::vector<Vec2>& due_tx_pos,
                                 const std::vector<Vec2>& due_rx_pos);

/// CSV export, one row per link: link_type,endpoint_a,endpoint_b,distance_m,gain.
void write_drop_csv(std::ostream& os, const ScenarioDrop& drop);

} // namespace d2dsim
