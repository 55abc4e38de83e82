#include "d2dsim/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "d2dsim/errors.hpp"

namespace d2dsim {

void SystemConfig::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };

    if (m < 1) fail("m must be >= 1");
    if (n < 1) fail("n must be >= 1");
    if (k < n) fail("k must be >= n");
    if (nr < 1) fail("nr must be >= 1");
    if (bmax < 1 || bmax > 12) fail("bmax must be in [1, 12]");
    if (!(c0 > 0.0)) fail("c0 must be > 0");
    if (c1 < 0.0) fail("c1 must be >= 0");
    if (!(j > 0.0)) fail("j must be > 0");
    if (!(sigma2 > 0.0)) fail("sigma2 must be > 0");
    if (!(p_max_c > 0.0)) fail("p_max_c must be > 0");
    if (!(p_max_d > 0.0)) fail("p_max_d must be > 0");
    if (!(gamma0_d > 0.0)) fail("gamma0_d must be > 0");
    if (!(p0 > 0.0 && p0 < 1.0)) fail("p0 must be in (0, 1)");
    if (!(speed_kmh > 0.0)) fail("speed_kmh must be > 0");
    if (lanes < 1) fail("lanes must be >= 1");
    if (!(lane_width_m > 0.0)) fail("lane_width_m must be > 0");
    if (!(road_length_m > 0.0)) fail("road_length_m must be > 0");
    if (!(bs_offset_m >= 0.0)) fail("bs_offset_m must be >= 0");
    if (trials < 1) fail("trials must be >= 1");
    if (!(channel.v2v_exp > 0.0)) fail("v2v_exp must be > 0");
    if (channel.v2i_shadow_db < 0.0 || channel.v2v_shadow_db < 0.0)
        fail("shadowing std dev must be >= 0");
}

namespace {

bool parse_bool_free_double(const std::string& v, double& out) {
    std::istringstream ss(v);
    ss >> out;
    return bool(ss) && (ss >> std::ws).eof();
}

} // namespace

SystemConfig load_config(std::istream& in) {
    SystemConfig cfg;
    bool c0_given = false;

    std::map<std::string, std::function<void(double)>> setters = {
        {"m", [&](double v) { cfg.m = int(v); }},
        {"k", [&](double v) { cfg.k = int(v); }},
        {"n", [&](double v) { cfg.n = int(v); }},
        {"nr", [&](double v) { cfg.nr = int(v); }},
        {"bmax", [&](double v) { cfg.bmax = int(v); }},
        {"c0", [&](double v) { cfg.c0 = v; c0_given = true; }},
        {"c1", [&](double v) { cfg.c1 = v; }},
        {"j", [&](double v) { cfg.j = v; }},
        {"sigma2", [&](double v) { cfg.sigma2 = v; }},
        {"p_max_c", [&](double v) { cfg.p_max_c = v; }},
        {"p_max_d", [&](double v) { cfg.p_max_d = v; }},
        {"gamma0_d", [&](double v) { cfg.gamma0_d = v; }},
        {"p0", [&](double v) { cfg.p0 = v; }},
        {"speed_kmh", [&](double v) { cfg.speed_kmh = v; }},
        {"lanes", [&](double v) { cfg.lanes = int(v); }},
        {"lane_width_m", [&](double v) { cfg.lane_width_m = v; }},
        {"road_length_m", [&](double v) { cfg.road_length_m = v; }},
        {"bs_offset_m", [&](double v) { cfg.bs_offset_m = v; }},
        {"trials", [&](double v) { cfg.trials = int(v); }},
        {"seed", [&](double v) { cfg.seed = std::uint64_t(v); }},
        {"v2i_pl_a_db", [&](double v) { cfg.channel.v2i_pl_a_db = v; }},
        {"v2i_pl_b_db", [&](double v) { cfg.channel.v2i_pl_b_db = v; }},
        {"v2i_shadow_db", [&](double v) { cfg.channel.v2i_shadow_db = v; }},
        {"v2v_ref_db", [&](double v) { cfg.channel.v2v_ref_db = v; }},
        {"v2v_exp", [&](double v) { cfg.channel.v2v_exp = v; }},
        {"v2v_shadow_db", [&](double v) { cfg.channel.v2v_shadow_db = v; }},
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            // blank (or comment-only) lines are fine, anything else is not
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        double v = 0.0;
        if (!parse_bool_free_double(value, v))
            throw ConfigError("config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
        it->second(v);
    }

    if (!c0_given) cfg.c0 = 1.0 / (double(cfg.nr) * std::exp2(double(cfg.bmax)));
    cfg.validate();
    return cfg;
}

SystemConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return load_config(in);
}

} // namespace d2dsim
