#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace d2dsim {

/// Path loss / shadowing laws used for the slow-fading coefficients.
/// These are configurable scenario constants, not tuned per drop.
struct ChannelModel {
    double v2i_pl_a_db = 128.1;  // V2I loss at 1 km (dB)
    double v2i_pl_b_db = 37.6;   // V2I dB per decade of km
    double v2i_shadow_db = 8.0;  // V2I log-normal shadowing std dev (dB)
    double v2v_ref_db = 38.46;   // V2V loss at the 1 m reference (dB, ~2 GHz free space)
    double v2v_exp = 3.68;       // V2V log-distance exponent
    double v2v_shadow_db = 3.0;  // V2V shadowing std dev (dB)
};

/// Full scenario description: population sizes, receiver/energy model,
/// QoS constraints, road geometry and Monte-Carlo controls.
/// All powers are linear watts, all SINR thresholds linear ratios.
struct SystemConfig {
    int m = 10;           // CUE (V2I) uplink count
    int k = 30;           // DUE (V2V) pair count
    int n = 10;           // DUE cluster count (= m by default)
    int nr = 32;          // BS antenna count
    int bmax = 8;         // max ADC resolution in bits

    double c0 = 1.0 / (32 * 256);  // ADC energy coefficient; default normalizes
                                   // the all-bmax profile of the default nr to 1
    double c1 = 0.0;               // resolution-independent energy offset
    double j = 0.5;                // BS energy budget (same units as c0/c1)

    double sigma2 = 3.9810717055349695e-15;  // noise power, W (-114 dBm)
    double p_max_c = 0.199526231496888;      // CUE power cap, W (23 dBm)
    double p_max_d = 0.199526231496888;      // DUE power cap, W (23 dBm)
    double gamma0_d = 3.1622776601683795;    // DUE SINR threshold, linear (5 dB)
    double p0 = 0.01;                        // max DUE outage probability

    double speed_kmh = 80.0;
    int lanes = 6;
    double lane_width_m = 4.0;
    double road_length_m = 2000.0;
    double bs_offset_m = 35.0;  // BS distance from the road edge, perpendicular

    int trials = 200;
    std::uint64_t seed = 1;

    ChannelModel channel;

    double speed_ms() const { return speed_kmh / 3.6; }
    /// Per-lane vehicle density, vehicles/m (2.5 s headway rule).
    double vehicle_density() const { return 1.0 / (2.5 * speed_ms()); }

    /// Throws ConfigError on any violated invariant.
    void validate() const;
};

/// Parses the flat key-value config format ("key = value", '#' comments).
/// Unknown keys are rejected; missing keys keep their defaults. If `c0` is
/// not given it is resolved to 1/(nr * 2^bmax) from the file's nr and bmax.
SystemConfig load_config(std::istream& in);
SystemConfig load_config_file(const std::string& path);

} // namespace d2dsim
