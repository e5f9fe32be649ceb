#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "uavsec/scenario.hpp"

namespace uavsec {

inline std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::DirectOnly: return "direct_only";
        case StrategyKind::Handover: return "handover";
        case StrategyKind::UavRelay: return "uav_relay";
    }
    return "direct_only";
}

inline std::string to_string(FadingKind kind) {
    return kind == FadingKind::MeanOnly ? "mean_only" : "monte_carlo";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline double parse_double(std::string_view value, const std::string& field) {
    std::string buf(trim(value));
    if (buf.empty()) throw ConfigError("expected a number, got an empty value", field);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) {
        throw ConfigError("not a valid number: \"" + buf + "\"", field);
    }
    return v;
}

inline std::uint64_t parse_u64(std::string_view value, const std::string& field) {
    const std::string_view t = trim(value);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ConfigError("not a valid non-negative integer: \"" + std::string(t) + "\"", field);
    }
    return v;
}

inline int parse_count(std::string_view value, const std::string& field) {
    const std::uint64_t v = parse_u64(value, field);
    if (v == 0 || v > 100000000) throw ConfigError("count out of range", field);
    return static_cast<int>(v);
}

inline bool parse_bool(std::string_view value, const std::string& field) {
    const std::string_view t = trim(value);
    if (t == "true") return true;
    if (t == "false") return false;
    throw ConfigError("expected true or false, got \"" + std::string(t) + "\"", field);
}

inline Position3D parse_position(std::string_view value, const std::string& field) {
    const std::string_view t = trim(value);
    double coords[3];
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t comma = t.find(',', start);
        const bool last = i == 2;
        if (last != (comma == std::string_view::npos)) {
            throw ConfigError("expected \"x,y,z\", got \"" + std::string(t) + "\"", field);
        }
        coords[i] = parse_double(t.substr(start, last ? std::string_view::npos : comma - start),
                                 field);
        start = comma + 1;
    }
    return {coords[0], coords[1], coords[2]};
}

inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline std::string format_position(const Position3D& p) {
    return format_double(p.x) + "," + format_double(p.y) + "," + format_double(p.z);
}

inline StrategyKind parse_strategy_kind(std::string_view value, const std::string& field) {
    const std::string_view t = trim(value);
    if (t == "direct_only") return StrategyKind::DirectOnly;
    if (t == "handover") return StrategyKind::Handover;
    if (t == "uav_relay") return StrategyKind::UavRelay;
    throw ConfigError("expected direct_only, handover or uav_relay, got \"" + std::string(t) + "\"",
                      field);
}

inline FadingKind parse_fading_kind(std::string_view value, const std::string& field) {
    const std::string_view t = trim(value);
    if (t == "mean_only") return FadingKind::MeanOnly;
    if (t == "monte_carlo") return FadingKind::MonteCarlo;
    throw ConfigError("expected mean_only or monte_carlo, got \"" + std::string(t) + "\"", field);
}

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace detail

/// Serialize a config into the canonical key = value text form. Loading the
/// dump reproduces the same scenario; the dump is also the hashing input.
inline std::string dump_config(const ScenarioConfig& c) {
    using detail::format_double;
    using detail::format_position;
    std::ostringstream out;
    out << "seed = " << c.seed << "\n";
    out << "strategy.kind = " << to_string(c.strategy.kind) << "\n";
    out << "strategy.speed_rate = " << format_double(c.strategy.speed_rate) << "\n";
    out << "strategy.hysteresis_margin_mbps = "
        << format_double(c.strategy.hysteresis_margin_bps / 1e6) << "\n";
    out << "channel.carrier_frequency_hz = " << format_double(c.channel.carrier_frequency_hz)
        << "\n";
    out << "channel.los_c = " << format_double(c.channel.los_c) << "\n";
    out << "channel.los_b = " << format_double(c.channel.los_b) << "\n";
    out << "channel.eta_los_db = " << format_double(c.channel.eta_los_db) << "\n";
    out << "channel.eta_nlos_db = " << format_double(c.channel.eta_nlos_db) << "\n";
    out << "channel.path_loss_exponent = " << format_double(c.channel.path_loss_exponent) << "\n";
    out << "channel.nakagami_m = " << format_double(c.channel.nakagami_m) << "\n";
    out << "channel.bandwidth_hz = " << format_double(c.channel.bandwidth_hz) << "\n";
    out << "channel.noise_spectral_density = " << format_double(c.channel.noise_spectral_density)
        << "\n";
    for (const auto& bs : c.nodes.base_stations) {
        out << "nodes.base_station." << bs.id << ".position = " << format_position(bs.position)
            << "\n";
        out << "nodes.base_station." << bs.id << ".tx_power_w = " << format_double(bs.tx_power_w)
            << "\n";
    }
    out << "nodes.eavesdropper.position = " << format_position(c.nodes.eavesdropper) << "\n";
    out << "nodes.iot_start.position = " << format_position(c.nodes.iot_start) << "\n";
    out << "nodes.uav.tx_power_w = " << format_double(c.nodes.uav_tx_power_w) << "\n";
    out << "mobility.dx_m = " << format_double(c.mobility.dx) << "\n";
    out << "mobility.n_steps = " << c.mobility.n_steps << "\n";
    out << "mobility.uav_height_m = " << format_double(c.mobility.uav_height) << "\n";
    out << "mobility.fixed_y_m = " << format_double(c.mobility.fixed_y) << "\n";
    out << "fading.g2g.mode = " << to_string(c.g2g_fading.kind) << "\n";
    out << "fading.g2g.realizations = " << c.g2g_fading.realizations << "\n";
    out << "fading.a2g.mode = " << to_string(c.a2g_fading.kind) << "\n";
    out << "fading.a2g.realizations = " << c.a2g_fading.realizations << "\n";
    out << "secrecy.relay_half_duplex_penalty = "
        << (c.relay_half_duplex_penalty ? "true" : "false") << "\n";
    out << "sim.clamp_after_average = " << (c.clamp_after_average ? "true" : "false") << "\n";
    if (!c.output.path.empty()) out << "output.path = " << c.output.path << "\n";
    out << "output.format = " << c.output.format << "\n";
    out << "output.threshold_mbps = " << format_double(c.output.threshold_mbps) << "\n";
    return out.str();
}

inline std::uint64_t compute_config_hash(const ScenarioConfig& c) {
    return detail::fnv1a64(dump_config(c));
}

/// Parse a scenario from config text. Strict: unknown keys, duplicate keys
/// and malformed values are errors with the line number and field path.
/// Defaults fill every omitted key and are recorded in applied_defaults.
/// The returned config is fully validated.
inline ScenarioConfig parse_config(const std::string& text, const std::string& source_name = "") {
    struct Entry {
        std::string value;
        int line;
    };
    std::map<std::string, Entry> entries;
    std::vector<std::string> bs_order;

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::string_view sv(line);
        if (const auto hash = sv.find('#'); hash != std::string_view::npos) {
            sv = sv.substr(0, hash);
        }
        sv = detail::trim(sv);
        if (sv.empty()) continue;
        const auto eq = sv.find('=');
        const std::string where =
            (source_name.empty() ? "" : source_name + ":") + std::to_string(line_no);
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + where + ": expected \"key = value\"");
        }
        const std::string key(detail::trim(sv.substr(0, eq)));
        const std::string value(detail::trim(sv.substr(eq + 1)));
        if (key.empty()) throw ConfigError("line " + where + ": empty key");
        if (entries.count(key)) {
            throw ConfigError("line " + where + ": duplicate key \"" + key + "\"");
        }
        entries.emplace(key, Entry{value, line_no});
        constexpr std::string_view bs_prefix = "nodes.base_station.";
        if (key.starts_with(bs_prefix)) {
            const auto rest = std::string_view(key).substr(bs_prefix.size());
            const auto dot = rest.find('.');
            if (dot == std::string_view::npos || dot == 0) {
                throw ConfigError("line " + where + ": malformed base-station key", key);
            }
            const std::string id(rest.substr(0, dot));
            bool seen = false;
            for (const auto& known : bs_order) seen = seen || known == id;
            if (!seen) bs_order.push_back(id);
        }
    }

    ScenarioConfig config;
    std::set<std::string> consumed;
    const auto take = [&](const std::string& key) -> const std::string* {
        const auto it = entries.find(key);
        if (it == entries.end()) return nullptr;
        consumed.insert(key);
        return &it->second.value;
    };
    const auto take_double = [&](const std::string& key, double& target) {
        if (const auto* v = take(key)) {
            target = detail::parse_double(*v, key);
            return true;
        }
        return false;
    };
    auto& defaults = config.applied_defaults;
    const auto note_default = [&](const std::string& key, const std::string& value) {
        defaults.push_back(key + " = " + value);
    };

    if (const auto* v = take("seed")) {
        config.seed = detail::parse_u64(*v, "seed");
    } else {
        note_default("seed", std::to_string(config.seed));
    }

    if (const auto* v = take("strategy.kind")) {
        config.strategy.kind = detail::parse_strategy_kind(*v, "strategy.kind");
    } else {
        throw ConfigError("required key is missing", "strategy.kind");
    }
    if (!take_double("strategy.speed_rate", config.strategy.speed_rate)) {
        note_default("strategy.speed_rate", detail::format_double(config.strategy.speed_rate));
    }
    config.mobility.speed_rate = config.strategy.speed_rate;
    if (const auto* v = take("strategy.hysteresis_margin_mbps")) {
        config.strategy.hysteresis_margin_bps =
            detail::parse_double(*v, "strategy.hysteresis_margin_mbps") * 1e6;
    } else {
        note_default("strategy.hysteresis_margin_mbps",
                     detail::format_double(config.strategy.hysteresis_margin_bps / 1e6));
    }

    const auto channel_double = [&](const std::string& key, double& target) {
        if (!take_double(key, target)) note_default(key, detail::format_double(target));
    };
    channel_double("channel.carrier_frequency_hz", config.channel.carrier_frequency_hz);
    channel_double("channel.los_c", config.channel.los_c);
    channel_double("channel.los_b", config.channel.los_b);
    channel_double("channel.eta_los_db", config.channel.eta_los_db);
    channel_double("channel.eta_nlos_db", config.channel.eta_nlos_db);
    channel_double("channel.path_loss_exponent", config.channel.path_loss_exponent);
    channel_double("channel.nakagami_m", config.channel.nakagami_m);
    channel_double("channel.bandwidth_hz", config.channel.bandwidth_hz);
    channel_double("channel.noise_spectral_density", config.channel.noise_spectral_density);

    for (const auto& id : bs_order) {
        const std::string prefix = "nodes.base_station." + id;
        BaseStation bs;
        bs.id = id;
        if (const auto* v = take(prefix + ".position")) {
            bs.position = detail::parse_position(*v, prefix + ".position");
        } else {
            throw ConfigError("required key is missing", prefix + ".position");
        }
        if (!take_double(prefix + ".tx_power_w", bs.tx_power_w)) {
            note_default(prefix + ".tx_power_w", detail::format_double(bs.tx_power_w));
        }
        config.nodes.base_stations.push_back(std::move(bs));
    }
    if (config.nodes.base_stations.empty()) {
        throw ConfigError("at least one base station is required (nodes.base_station.<id>.position)",
                          "nodes.base_station");
    }

    if (const auto* v = take("nodes.eavesdropper.position")) {
        config.nodes.eavesdropper = detail::parse_position(*v, "nodes.eavesdropper.position");
    } else {
        throw ConfigError("required key is missing", "nodes.eavesdropper.position");
    }
    if (const auto* v = take("nodes.iot_start.position")) {
        config.nodes.iot_start = detail::parse_position(*v, "nodes.iot_start.position");
    } else {
        note_default("nodes.iot_start.position", detail::format_position(config.nodes.iot_start));
    }
    config.mobility.iot_start = config.nodes.iot_start;
    if (!take_double("nodes.uav.tx_power_w", config.nodes.uav_tx_power_w)) {
        note_default("nodes.uav.tx_power_w", detail::format_double(config.nodes.uav_tx_power_w));
    }

    if (!take_double("mobility.dx_m", config.mobility.dx)) {
        note_default("mobility.dx_m", detail::format_double(config.mobility.dx));
    }
    if (const auto* v = take("mobility.n_steps")) {
        config.mobility.n_steps = detail::parse_u64(*v, "mobility.n_steps");
    } else {
        note_default("mobility.n_steps", std::to_string(config.mobility.n_steps));
    }
    if (!take_double("mobility.uav_height_m", config.mobility.uav_height)) {
        note_default("mobility.uav_height_m", detail::format_double(config.mobility.uav_height));
    }
    if (!take_double("mobility.fixed_y_m", config.mobility.fixed_y)) {
        note_default("mobility.fixed_y_m", detail::format_double(config.mobility.fixed_y));
    }

    if (const auto* v = take("fading.g2g.mode")) {
        config.g2g_fading.kind = detail::parse_fading_kind(*v, "fading.g2g.mode");
    } else {
        note_default("fading.g2g.mode", to_string(config.g2g_fading.kind));
    }
    if (const auto* v = take("fading.g2g.realizations")) {
        config.g2g_fading.realizations = detail::parse_count(*v, "fading.g2g.realizations");
    } else {
        note_default("fading.g2g.realizations", std::to_string(config.g2g_fading.realizations));
    }
    if (const auto* v = take("fading.a2g.mode")) {
        config.a2g_fading.kind = detail::parse_fading_kind(*v, "fading.a2g.mode");
    } else {
        note_default("fading.a2g.mode", to_string(config.a2g_fading.kind));
    }
    if (const auto* v = take("fading.a2g.realizations")) {
        config.a2g_fading.realizations = detail::parse_count(*v, "fading.a2g.realizations");
    } else {
        note_default("fading.a2g.realizations", std::to_string(config.a2g_fading.realizations));
    }

    if (const auto* v = take("secrecy.relay_half_duplex_penalty")) {
        config.relay_half_duplex_penalty =
            detail::parse_bool(*v, "secrecy.relay_half_duplex_penalty");
    } else {
        note_default("secrecy.relay_half_duplex_penalty",
                     config.relay_half_duplex_penalty ? "true" : "false");
    }
    if (const auto* v = take("sim.clamp_after_average")) {
        config.clamp_after_average = detail::parse_bool(*v, "sim.clamp_after_average");
    } else {
        note_default("sim.clamp_after_average", config.clamp_after_average ? "true" : "false");
    }

    if (const auto* v = take("output.path")) config.output.path = *v;
    if (const auto* v = take("output.format")) {
        config.output.format = *v;
    } else {
        note_default("output.format", config.output.format);
    }
    if (!take_double("output.threshold_mbps", config.output.threshold_mbps)) {
        note_default("output.threshold_mbps", detail::format_double(config.output.threshold_mbps));
    }

    for (const auto& [key, entry] : entries) {
        if (!consumed.count(key)) {
            throw ConfigError("line " +
                                  (source_name.empty() ? "" : source_name + ":") +
                                  std::to_string(entry.line) + ": unknown config key \"" + key +
                                  "\"",
                              key);
        }
    }

    validate_config(config);
    config.config_hash = compute_config_hash(config);
    return config;
}

/// Load and validate a scenario config file.
inline ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

} // namespace uavsec
