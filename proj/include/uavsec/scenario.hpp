#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uavsec/channel.hpp"
#include "uavsec/fading.hpp"
#include "uavsec/mobility.hpp"
#include "uavsec/nodes.hpp"

namespace uavsec {

enum class StrategyKind {
    DirectOnly,  // primary base station, no relay
    Handover,    // switch between base stations on secrecy rate, no relay
    UavRelay,    // primary base station plus an aerial relay
};

struct Strategy {
    StrategyKind kind{StrategyKind::DirectOnly};
    double speed_rate{1.0};            // relay tracking ratio (UavRelay)
    double hysteresis_margin_bps{0.0}; // handover switch margin, bits/s
};

/// One per-time-step output row. Rates are Mbps; in Monte Carlo mode they are
/// means over the per-step realizations and r_sec_std is the population
/// standard deviation of the per-realization secrecy rate (0 in mean-only).
struct TraceRecord {
    std::uint64_t step{0};
    double iot_x_m{0.0};
    std::optional<double> uav_x_m;
    std::string serving_bs;
    double r_t_l_mbps{0.0};
    double r_r_l_mbps{0.0};
    double r_t_i_mbps{0.0};
    double r_r_i_mbps{0.0};
    double r_l_mbps{0.0};
    double r_i_mbps{0.0};
    double r_sec_mbps{0.0};
    double r_sec_std_mbps{0.0};
};

enum class SweepVariable {
    SpeedRate,
    UavHeight,
};

struct SweepSpec {
    SweepVariable variable{SweepVariable::SpeedRate};
    std::vector<double> values;  // non-empty, strictly increasing, all > 0
};

struct OutputConfig {
    std::string path;           // empty: derive from the config file name
    std::string format{"csv"};
    double threshold_mbps{50.0};
};

/// A fully described simulation scenario. Loaded from a config file by
/// load_config() or assembled directly in code.
struct ScenarioConfig {
    ChannelParams channel;
    NodeSet nodes;
    MobilityParams mobility;
    Strategy strategy;
    FadingMode g2g_fading{FadingKind::MonteCarlo, 1000};
    FadingMode a2g_fading{FadingKind::MeanOnly, 1};
    std::uint64_t seed{1};
    bool relay_half_duplex_penalty{false};
    bool clamp_after_average{false};
    OutputConfig output;

    // Loader metadata, not part of the scenario identity.
    std::vector<std::string> applied_defaults;
    std::uint64_t config_hash{0};
};

/// Raised for an invalid or unparsable scenario configuration. Carries the
/// dotted path of the offending field when one is known.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message, std::string field = {})
        : std::runtime_error(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Check every scenario invariant; throws ConfigError naming the violated
/// field. Called by run_scenario before any computation.
inline void validate_config(const ScenarioConfig& config) {
    const auto require = [](bool ok, const char* message, const char* field) {
        if (!ok) throw ConfigError(message, field);
    };
    const auto& ch = config.channel;
    require(std::isfinite(ch.carrier_frequency_hz) && ch.carrier_frequency_hz > 0.0,
            "must be > 0", "channel.carrier_frequency_hz");
    require(std::isfinite(ch.bandwidth_hz) && ch.bandwidth_hz > 0.0, "must be > 0",
            "channel.bandwidth_hz");
    require(std::isfinite(ch.noise_spectral_density) && ch.noise_spectral_density > 0.0,
            "must be > 0", "channel.noise_spectral_density");
    require(std::isfinite(ch.los_c) && ch.los_c > 0.0, "must be > 0", "channel.los_c");
    require(std::isfinite(ch.los_b) && ch.los_b > 0.0, "must be > 0", "channel.los_b");
    require(std::isfinite(ch.eta_los_db) && ch.eta_los_db >= 0.0, "must be >= 0",
            "channel.eta_los_db");
    require(std::isfinite(ch.eta_nlos_db) && ch.eta_nlos_db >= ch.eta_los_db,
            "must be >= channel.eta_los_db", "channel.eta_nlos_db");
    require(std::isfinite(ch.path_loss_exponent) && ch.path_loss_exponent >= 2.0,
            "must be >= 2", "channel.path_loss_exponent");
    require(std::isfinite(ch.nakagami_m) && ch.nakagami_m >= 0.5, "must be >= 0.5",
            "channel.nakagami_m");

    const auto& nodes = config.nodes;
    require(!nodes.base_stations.empty(), "at least one base station is required",
            "nodes.base_station");
    for (std::size_t i = 0; i < nodes.base_stations.size(); ++i) {
        const auto& bs = nodes.base_stations[i];
        const std::string path = "nodes.base_station." + (bs.id.empty() ? std::to_string(i) : bs.id);
        if (!is_finite(bs.position) || bs.position.z < 0.0)
            throw ConfigError("position must be finite with z >= 0", path + ".position");
        if (!(bs.tx_power_w > 0.0) || !std::isfinite(bs.tx_power_w))
            throw ConfigError("must be > 0", path + ".tx_power_w");
        for (std::size_t j = 0; j < i; ++j)
            if (nodes.base_stations[j].id == bs.id)
                throw ConfigError("duplicate base-station id", path);
    }
    require(is_finite(nodes.eavesdropper) && nodes.eavesdropper.z >= 0.0,
            "must be finite with z >= 0", "nodes.eavesdropper.position");
    require(is_finite(nodes.iot_start) && nodes.iot_start.z == 0.0,
            "must be finite with z = 0 (ground node)", "nodes.iot_start.position");
    require(std::isfinite(nodes.uav_tx_power_w) && nodes.uav_tx_power_w > 0.0, "must be > 0",
            "nodes.uav.tx_power_w");

    const auto& mob = config.mobility;
    require(std::isfinite(mob.dx) && mob.dx > 0.0, "must be > 0", "mobility.dx_m");
    require(std::isfinite(mob.speed_rate) && mob.speed_rate > 0.0, "must be > 0",
            "mobility.speed_rate");
    require(std::isfinite(mob.uav_height) && mob.uav_height >= 0.0, "must be >= 0",
            "mobility.uav_height_m");
    require(std::isfinite(mob.fixed_y), "must be finite", "mobility.fixed_y_m");

    const auto& strat = config.strategy;
    require(std::isfinite(strat.speed_rate) && strat.speed_rate > 0.0, "must be > 0",
            "strategy.speed_rate");
    require(std::isfinite(strat.hysteresis_margin_bps) && strat.hysteresis_margin_bps >= 0.0,
            "must be >= 0", "strategy.hysteresis_margin_mbps");
    require(strat.kind != StrategyKind::Handover || nodes.base_stations.size() >= 2,
            "handover requires at least two base stations", "strategy.kind");

    require(config.g2g_fading.realizations >= 1, "must be >= 1", "fading.g2g.realizations");
    require(config.a2g_fading.realizations >= 1, "must be >= 1", "fading.a2g.realizations");
    if (config.g2g_fading.kind == FadingKind::MonteCarlo &&
        config.a2g_fading.kind == FadingKind::MonteCarlo &&
        config.g2g_fading.realizations != config.a2g_fading.realizations) {
        throw ConfigError("realization counts must match when both link classes are monte_carlo",
                          "fading.a2g.realizations");
    }

    require(config.output.format == "csv", "only \"csv\" is supported", "output.format");
    require(std::isfinite(config.output.threshold_mbps) && config.output.threshold_mbps >= 0.0,
            "must be >= 0", "output.threshold_mbps");
}

/// Headline statistics of one trace against a secrecy threshold.
struct TraceSummary {
    double mean_r_sec_mbps{0.0};
    double min_r_sec_mbps{0.0};
    double fraction_at_or_above{0.0};
    /// Contiguous x-interval around the trace minimum where r_sec stays below
    /// the threshold; absent when no step falls below it.
    std::optional<std::pair<double, double>> below_interval_x_m;

    double below_interval_width_m() const {
        return below_interval_x_m ? below_interval_x_m->second - below_interval_x_m->first : 0.0;
    }
};

} // namespace uavsec
