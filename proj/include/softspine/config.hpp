#ifndef SOFTSPINE_CONFIG_HPP
#define SOFTSPINE_CONFIG_HPP

#include <string>
#include <unordered_map>
#include <utility>

#include "softspine/errors.hpp"
#include "softspine/geometry.hpp"
#include "softspine/text.hpp"
#include "softspine/units.hpp"

// Plain-text configuration: one `key = value` per line, `#` starts a
// comment, blank lines ignored. Keys carry their unit as a suffix
// (_m, _cm, _pa, _kpa); counts and densities are unsuffixed. Missing keys
// keep their defaults.

namespace softspine {

struct RobotConfig {
    RobotGeometry geometry;
    MaterialParams material;
};

namespace detail {

struct ConfigEntry {
    double value;
    int line;
};

inline std::unordered_map<std::string, ConfigEntry> parse_config_text(const std::string& text) {
    std::unordered_map<std::string, ConfigEntry> entries;
    auto lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        std::string line = lines[i];
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line_no);
        double num;
        if (!parse_double(val, num)) throw ConfigError("bad number '" + val + "'", line_no);
        if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'", line_no);
        entries[key] = {num, line_no};
    }
    return entries;
}

}  // namespace detail

inline RobotConfig load_config_text(const std::string& text) {
    auto entries = detail::parse_config_text(text);
    RobotConfig cfg;

    auto take = [&](const std::string& key, double scale) -> std::pair<bool, double> {
        auto it = entries.find(key);
        if (it == entries.end()) return {false, 0.0};
        double v = it->second.value * scale;
        entries.erase(it);
        return {true, v};
    };
    // A quantity may be given in either unit, not both.
    auto take_either = [&](const std::string& base, const std::string& suffix_a, double scale_a,
                           const std::string& suffix_b, double scale_b, double& target) {
        auto a = entries.find(base + suffix_a);
        auto b = entries.find(base + suffix_b);
        if (a != entries.end() && b != entries.end())
            throw ConfigError("'" + base + "' given twice with different units", b->second.line);
        if (auto [ok, v] = take(base + suffix_a, scale_a); ok) target = v;
        if (auto [ok, v] = take(base + suffix_b, scale_b); ok) target = v;
    };
    auto take_length = [&](const std::string& base, double& target) {
        take_either(base, "_m", 1.0, "_cm", 0.01, target);
    };
    auto take_pressure = [&](const std::string& base, double& target) {
        take_either(base, "_pa", 1.0, "_kpa", 1000.0, target);
    };
    auto take_count = [&](const std::string& key, int& target) {
        auto it = entries.find(key);
        if (it == entries.end()) return;
        double v = it->second.value;
        int line = it->second.line;
        entries.erase(it);
        if (v != static_cast<double>(static_cast<int>(v)))
            throw ConfigError("'" + key + "' must be an integer", line);
        target = static_cast<int>(v);
    };

    take_length("body_length", cfg.geometry.body_length);
    take_length("outer_radius", cfg.geometry.outer_radius);
    take_length("channel_radius", cfg.geometry.channel_radius);
    take_length("spine_radius", cfg.geometry.spine_radius);
    take_length("spine_max_length", cfg.geometry.spine_max_length);
    take_count("chamber_count", cfg.geometry.chamber_count);
    take_count("group_count", cfg.geometry.group_count);

    bool c1_set = false, modulus_set = false;
    double c1 = cfg.material.neo_hookean_c1;
    double modulus = cfg.material.body_modulus;
    {
        auto before = entries.size();
        take_pressure("neo_hookean_c1", c1);
        c1_set = entries.size() != before;
        before = entries.size();
        take_pressure("body_modulus", modulus);
        modulus_set = entries.size() != before;
    }
    cfg.material.neo_hookean_c1 = c1;
    cfg.material.body_modulus = modulus_set ? modulus : 6.0 * c1;
    if (auto [ok, v] = take("glass_bubble_density", 1.0); ok) cfg.material.glass_bubble_density = v;

    if (!entries.empty()) {
        auto first = entries.begin();
        int line = first->second.line;
        std::string key = first->first;
        for (const auto& [k, e] : entries)
            if (e.line < line) { line = e.line; key = k; }
        throw ConfigError("unknown key '" + key + "'", line);
    }

    cfg.geometry.validate();
    cfg.material.validate();
    return cfg;
}

inline RobotConfig load_config(const std::string& path) {
    return load_config_text(read_text_file(path));
}

}  // namespace softspine

#endif
