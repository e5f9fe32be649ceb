#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavsec/fading.hpp"
#include "uavsec/mobility.hpp"
#include "uavsec/scenario.hpp"
#include "uavsec/secrecy.hpp"

namespace uavsec {

/// Pick the serving base station for one step. Switches away from `current`
/// only when the best alternative's secrecy rate exceeds the current one by
/// more than the margin; ties always retain the current station.
inline std::size_t handover_policy(const std::vector<double>& r_sec_per_bs_bps,
                                   std::size_t current, double margin_bps) {
    if (current >= r_sec_per_bs_bps.size()) {
        throw std::out_of_range("handover_policy: current base-station index out of range");
    }
    std::size_t best = current;
    for (std::size_t i = 0; i < r_sec_per_bs_bps.size(); ++i) {
        if (r_sec_per_bs_bps[i] > r_sec_per_bs_bps[best]) best = i;
    }
    return r_sec_per_bs_bps[best] > r_sec_per_bs_bps[current] + margin_bps ? best : current;
}

namespace detail {

// Running sums for one candidate base station at one step.
struct RateAccumulator {
    double r_t_l{0}, r_r_l{0}, r_t_i{0}, r_r_i{0};
    double r_l{0}, r_i{0}, r_sec{0}, r_sec_sq{0};

    void add(const LinkRateSet& rates, const SecrecyResult& res) {
        r_t_l += rates.r_t_l;
        r_r_l += rates.r_r_l;
        r_t_i += rates.r_t_i;
        r_r_i += rates.r_r_i;
        r_l += res.r_l;
        r_i += res.r_i;
        r_sec += res.r_sec;
        r_sec_sq += res.r_sec * res.r_sec;
    }
};

} // namespace detail

/// Run one scenario: per step, advance the mobility model, draw fading per
/// the configured modes, evaluate link and secrecy rates (averaged over
/// Monte Carlo realizations in a fixed order), apply the strategy's serving
/// decision and emit one TraceRecord. Deterministic for a fixed config.
inline std::vector<TraceRecord> run_scenario(const ScenarioConfig& config) {
    validate_config(config);

    const bool use_uav = config.strategy.kind == StrategyKind::UavRelay;
    const bool handover = config.strategy.kind == StrategyKind::Handover;

    MobilityParams mobility = config.mobility;
    if (use_uav) mobility.speed_rate = config.strategy.speed_rate;

    // Candidate stations: handover weighs all of them, everything else is
    // pinned to the primary station.
    const std::size_t n_candidates = handover ? config.nodes.base_stations.size() : 1;

    int realizations = config.g2g_fading.kind == FadingKind::MonteCarlo
                           ? config.g2g_fading.realizations
                           : 1;
    if (use_uav && config.a2g_fading.kind == FadingKind::MonteCarlo) {
        realizations = std::max(realizations, config.a2g_fading.realizations);
    }

    std::vector<TraceRecord> trace;
    trace.reserve(static_cast<std::size_t>(config.mobility.n_steps) + 1);
    std::size_t serving = 0;

    for (std::uint64_t step = 0; step <= config.mobility.n_steps; ++step) {
        const Position3D iot = iot_position(step, mobility);
        const std::optional<Position3D> uav =
            use_uav ? std::optional<Position3D>(uav_position(step, mobility)) : std::nullopt;

        std::vector<detail::RateAccumulator> acc(n_candidates);
        for (int k = 0; k < realizations; ++k) {
            const auto realization = static_cast<std::uint32_t>(k);
            double g_uav_ue = 1.0;
            double g_uav_eav = 1.0;
            if (use_uav) {
                RngStream s_ue(config.seed, {step, realization, link_id::uav_to_ue});
                RngStream s_eav(config.seed, {step, realization, link_id::uav_to_eav});
                g_uav_ue = a2g_fading_power(config.a2g_fading, config.channel.nakagami_m, s_ue);
                g_uav_eav = a2g_fading_power(config.a2g_fading, config.channel.nakagami_m, s_eav);
            }
            for (std::size_t b = 0; b < n_candidates; ++b) {
                RngStream s_ue(config.seed, {step, realization, link_id::bs_to_ue(b)});
                RngStream s_eav(config.seed, {step, realization, link_id::bs_to_eav(b)});
                const FadingDraws draws{g2g_fading_power(config.g2g_fading, s_ue),
                                        g2g_fading_power(config.g2g_fading, s_eav), g_uav_ue,
                                        g_uav_eav};
                const LinkRateSet rates = link_rates(config.nodes, b, iot, uav, config.channel,
                                                     draws, config.relay_half_duplex_penalty);
                acc[b].add(rates, secrecy_rate(rates));
            }
        }

        const double inv_n = 1.0 / static_cast<double>(realizations);
        std::vector<double> r_sec_per_bs(n_candidates);
        for (std::size_t b = 0; b < n_candidates; ++b) {
            r_sec_per_bs[b] = config.clamp_after_average
                                  ? std::max(acc[b].r_l * inv_n - acc[b].r_i * inv_n, 0.0)
                                  : acc[b].r_sec * inv_n;
        }
        if (handover) {
            serving = handover_policy(r_sec_per_bs, serving, config.strategy.hysteresis_margin_bps);
        }

        const detail::RateAccumulator& a = acc[serving];
        const double mean_r_sec = a.r_sec * inv_n;
        const double variance = std::max(a.r_sec_sq * inv_n - mean_r_sec * mean_r_sec, 0.0);

        constexpr double to_mbps = 1e-6;
        TraceRecord rec;
        rec.step = step;
        rec.iot_x_m = iot.x;
        if (uav) rec.uav_x_m = uav->x;
        rec.serving_bs = config.nodes.base_stations[serving].id;
        rec.r_t_l_mbps = a.r_t_l * inv_n * to_mbps;
        rec.r_r_l_mbps = a.r_r_l * inv_n * to_mbps;
        rec.r_t_i_mbps = a.r_t_i * inv_n * to_mbps;
        rec.r_r_i_mbps = a.r_r_i * inv_n * to_mbps;
        rec.r_l_mbps = a.r_l * inv_n * to_mbps;
        rec.r_i_mbps = a.r_i * inv_n * to_mbps;
        rec.r_sec_mbps = r_sec_per_bs[serving] * to_mbps;
        rec.r_sec_std_mbps = std::sqrt(variance) * to_mbps;
        trace.push_back(std::move(rec));
    }
    return trace;
}

/// Validate a sweep specification against its invariants.
inline void validate_sweep(const SweepSpec& sweep) {
    if (sweep.values.empty()) throw ConfigError("sweep values must be non-empty", "sweep.values");
    for (std::size_t i = 0; i < sweep.values.size(); ++i) {
        if (!(sweep.values[i] > 0.0) || !std::isfinite(sweep.values[i]))
            throw ConfigError("sweep values must be > 0", "sweep.values");
        if (i > 0 && !(sweep.values[i] > sweep.values[i - 1]))
            throw ConfigError("sweep values must be strictly increasing", "sweep.values");
    }
}

/// Run one full trace per sweep value over the relay's speed rate or height.
/// The seed is shared across values, so fading draws at a given
/// (step, realization, link) are identical and traces differ only through
/// the swept variable.
inline std::map<double, std::vector<TraceRecord>> run_sweep(const ScenarioConfig& base,
                                                            const SweepSpec& sweep) {
    if (base.strategy.kind != StrategyKind::UavRelay) {
        throw ConfigError("sweeps require strategy.kind = uav_relay", "strategy.kind");
    }
    validate_sweep(sweep);
    std::map<double, std::vector<TraceRecord>> result;
    for (double value : sweep.values) {
        ScenarioConfig config = base;
        if (sweep.variable == SweepVariable::SpeedRate) {
            config.strategy.speed_rate = value;
            config.mobility.speed_rate = value;
        } else {
            config.mobility.uav_height = value;
        }
        try {
            result.emplace(value, run_scenario(config));
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep value " + std::to_string(value) + ": " + e.what());
        }
    }
    return result;
}

/// Headline statistics of a trace: trajectory mean and minimum, the fraction
/// of steps at or above the threshold, and the contiguous below-threshold
/// x-interval surrounding the trace minimum (absent when nothing is below).
inline TraceSummary summarize(const std::vector<TraceRecord>& trace, double threshold_mbps) {
    if (trace.empty()) throw std::invalid_argument("summarize: trace must be non-empty");

    TraceSummary summary;
    double sum = 0.0;
    std::size_t argmin = 0;
    std::size_t at_or_above = 0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const double v = trace[i].r_sec_mbps;
        sum += v;
        if (v < trace[argmin].r_sec_mbps) argmin = i;
        if (v >= threshold_mbps) ++at_or_above;
    }
    summary.mean_r_sec_mbps = sum / static_cast<double>(trace.size());
    summary.min_r_sec_mbps = trace[argmin].r_sec_mbps;
    summary.fraction_at_or_above = static_cast<double>(at_or_above) / static_cast<double>(trace.size());

    if (summary.min_r_sec_mbps < threshold_mbps) {
        std::size_t lo = argmin;
        std::size_t hi = argmin;
        while (lo > 0 && trace[lo - 1].r_sec_mbps < threshold_mbps) --lo;
        while (hi + 1 < trace.size() && trace[hi + 1].r_sec_mbps < threshold_mbps) ++hi;
        summary.below_interval_x_m = std::make_pair(trace[lo].iot_x_m, trace[hi].iot_x_m);
    }
    return summary;
}

} // namespace uavsec
