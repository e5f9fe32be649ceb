#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "uavsec/channel.hpp"
#include "uavsec/geometry.hpp"
#include "uavsec/nodes.hpp"

namespace uavsec {

/// The four per-step link rates, bits/s.
struct LinkRateSet {
    double r_t_l{0.0};  // serving base station -> device
    double r_r_l{0.0};  // relay -> device (0 with no relay)
    double r_t_i{0.0};  // serving base station -> eavesdropper
    double r_r_i{0.0};  // relay -> eavesdropper (0 with no relay)
};

struct SecrecyResult {
    double r_l{0.0};    // legitimate rate, best of direct and relayed copy
    double r_i{0.0};    // interception rate, eavesdropper's best link
    double r_sec{0.0};  // max(r_l - r_i, 0)
};

/// Small-scale fading powers for one realization. Unit values reproduce the
/// mean-only evaluation.
struct FadingDraws {
    double g_bs_ue{1.0};
    double g_bs_eav{1.0};
    double g_uav_ue{1.0};
    double g_uav_eav{1.0};
};

/// Shannon rate B * log2(1 + snr), bits/s.
inline double shannon_rate(double bandwidth_hz, double snr_linear) {
    if (!(bandwidth_hz > 0.0)) {
        throw std::invalid_argument("shannon_rate: bandwidth must be > 0");
    }
    if (!(snr_linear >= 0.0)) {
        throw std::invalid_argument("shannon_rate: snr must be >= 0");
    }
    return bandwidth_hz * std::log2(1.0 + snr_linear);
}

/// Linear gain of a ground link over a clamped 3D distance.
inline LinkGain make_g2g_gain(const Position3D& tx, const Position3D& rx, double fading_power,
                              const ChannelParams& params) {
    const double d = clamp_model_distance(distance3(tx, rx));
    return {g2g_gain(fading_power, d, params.path_loss_exponent), GainSource::G2GFaded};
}

/// Linear gain of an air-to-ground link: the spatial-expectation pathloss
/// converted to linear, scaled by a fading power (1.0 when fading is mean-only).
inline LinkGain make_a2g_gain(const Position3D& tx, const Position3D& rx, double fading_power,
                              const ChannelParams& params) {
    return {db_to_linear_gain(mean_pathloss_a2g_db(tx, rx, params)) * fading_power,
            GainSource::A2GMean};
}

/// Evaluate the four link rates for one serving base station, one device
/// position and (optionally) one relay position.
///
/// Ground links use the power law with the station's transmit power; relay
/// links use the air-to-ground expectation pathloss with the relay's power.
/// With relay_half_duplex set, relay-originated rates are halved to model a
/// two-phase relaying time slot.
inline LinkRateSet link_rates(const NodeSet& nodes, std::size_t serving_bs,
                              const Position3D& iot, const std::optional<Position3D>& uav,
                              const ChannelParams& params, const FadingDraws& draws,
                              bool relay_half_duplex = false) {
    if (serving_bs >= nodes.base_stations.size()) {
        throw std::out_of_range("link_rates: serving base-station index out of range");
    }
    const BaseStation& bs = nodes.base_stations[serving_bs];
    const double bw = params.bandwidth_hz;
    const double n0 = params.noise_spectral_density;

    LinkRateSet rates;
    rates.r_t_l = shannon_rate(
        bw, snr(bs.tx_power_w, make_g2g_gain(bs.position, iot, draws.g_bs_ue, params).gain_linear,
                bw, n0));
    rates.r_t_i = shannon_rate(
        bw, snr(bs.tx_power_w,
                make_g2g_gain(bs.position, nodes.eavesdropper, draws.g_bs_eav, params).gain_linear,
                bw, n0));
    if (uav.has_value()) {
        const double scale = relay_half_duplex ? 0.5 : 1.0;
        rates.r_r_l = scale * shannon_rate(
            bw, snr(nodes.uav_tx_power_w,
                    make_a2g_gain(*uav, iot, draws.g_uav_ue, params).gain_linear, bw, n0));
        rates.r_r_i = scale * shannon_rate(
            bw, snr(nodes.uav_tx_power_w,
                    make_a2g_gain(*uav, nodes.eavesdropper, draws.g_uav_eav, params).gain_linear,
                    bw, n0));
    }
    return rates;
}

/// Compose the secrecy rate: both sides pick their best link, and the
/// secrecy rate is the non-negative difference.
inline SecrecyResult secrecy_rate(const LinkRateSet& rates) {
    SecrecyResult result;
    result.r_l = std::max(rates.r_t_l, rates.r_r_l);
    result.r_i = std::max(rates.r_t_i, rates.r_r_i);
    result.r_sec = std::max(result.r_l - result.r_i, 0.0);
    return result;
}

} // namespace uavsec
