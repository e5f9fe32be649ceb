#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "uavsec/geometry.hpp"

namespace uavsec {

/// Speed of light in m/s.
inline constexpr double kSpeedOfLight = 2.998e8;

/// Distances are clamped to this floor before any pathloss or power-law
/// evaluation. Far-field propagation models are not valid below ~1 m, and
/// the clamp keeps link gains bounded when two nodes coincide.
inline constexpr double kMinModelDistanceM = 1.0;

inline double clamp_model_distance(double d_m) {
    return d_m < kMinModelDistanceM ? kMinModelDistanceM : d_m;
}

/// Environment and radio constants shared by all links.
///
/// Defaults describe an urban environment at 2 GHz with a 10 MHz channel
/// and a total in-band noise power of 1e-12 W (n0 = 1e-19 W/Hz).
struct ChannelParams {
    double carrier_frequency_hz{2e9};
    double los_c{9.61};              // sigmoid constant, also the angle offset in degrees
    double los_b{0.16};              // sigmoid slope, 1/degree
    double eta_los_db{1.0};          // mean excess pathloss for LoS links
    double eta_nlos_db{20.0};        // mean excess pathloss for NLoS links
    double path_loss_exponent{4.0};  // ground power-law exponent
    double nakagami_m{3.0};          // air-to-ground small-scale fading shape, >= 0.5
    double bandwidth_hz{10e6};
    double noise_spectral_density{1e-19};  // W/Hz

    /// Ratio of LoS to NLoS excess attenuation.
    double eta_ratio() const { return eta_los_db / eta_nlos_db; }

    /// Total in-band noise power B * n0, watts.
    double noise_power_w() const { return bandwidth_hz * noise_spectral_density; }
};

/// Where a linear link gain came from.
enum class GainSource {
    A2GMean,   // spatial-expectation air-to-ground pathloss
    G2GFaded,  // ground power law with a small-scale fading draw
};

/// A dimensionless linear power gain with its provenance.
struct LinkGain {
    double gain_linear{1.0};
    GainSource source{GainSource::G2GFaded};
};

/// Free-space pathloss in dB: 20*log10(4*pi*f*d/c).
/// Undefined at d <= 0; callers clamp small distances first.
inline double fspl_db(double frequency_hz, double distance_m) {
    if (!(frequency_hz > 0.0)) {
        throw std::invalid_argument("fspl_db: frequency must be > 0");
    }
    if (!(distance_m > 0.0)) {
        throw std::domain_error("fspl_db: distance must be > 0");
    }
    return 20.0 * std::log10(4.0 * std::numbers::pi * frequency_hz * distance_m / kSpeedOfLight);
}

/// Probability that an air-to-ground link at elevation angle theta (degrees)
/// is line-of-sight: 1 / (1 + C*exp(-B*(theta - C))).
/// The NLoS probability is the complement.
inline double los_probability(double theta_deg, const ChannelParams& params) {
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0)) {
        throw std::invalid_argument("los_probability: theta must be in [0, 90] degrees");
    }
    return 1.0 / (1.0 + params.los_c * std::exp(-params.los_b * (theta_deg - params.los_c)));
}

/// Spatial-expectation air-to-ground pathloss in dB:
/// FSPL(d) + p_los*eta_los + (1 - p_los)*eta_nlos, a convex combination of
/// the LoS and NLoS excess losses weighted by the elevation-angle sigmoid.
///
/// The transmitter is the airborne node; its height above ground drives the
/// elevation angle. Distance is clamped to kMinModelDistanceM.
inline double mean_pathloss_a2g_db(const Position3D& tx, const Position3D& rx,
                                   const ChannelParams& params) {
    const double d = distance3(tx, rx);
    if (!(d > 0.0)) {
        throw std::domain_error("mean_pathloss_a2g_db: tx and rx must not coincide");
    }
    const double theta = elevation_angle_deg(tx.z, horizontal_distance(tx, rx));
    const double p_los = los_probability(theta, params);
    return fspl_db(params.carrier_frequency_hz, clamp_model_distance(d)) +
           p_los * params.eta_los_db + (1.0 - p_los) * params.eta_nlos_db;
}

/// Convert a pathloss in dB to a linear power gain 10^(-pl/10).
inline double db_to_linear_gain(double pathloss_db) {
    if (!std::isfinite(pathloss_db)) {
        throw std::invalid_argument("db_to_linear_gain: pathloss must be finite");
    }
    return std::pow(10.0, -pathloss_db / 10.0);
}

/// Ground-to-ground linear gain g * d^(-alpha): distance power law scaled by
/// a small-scale fading power draw.
inline double g2g_gain(double fading_power, double distance_m, double alpha) {
    if (!(fading_power >= 0.0)) {
        throw std::invalid_argument("g2g_gain: fading power must be >= 0");
    }
    if (!(distance_m > 0.0)) {
        throw std::domain_error("g2g_gain: distance must be > 0");
    }
    return fading_power * std::pow(distance_m, -alpha);
}

/// Signal-to-noise ratio p_tx * gain / (B * n0), dimensionless.
inline double snr(double p_tx_w, double gain_linear, double bandwidth_hz, double n0_w_per_hz) {
    if (!(p_tx_w > 0.0) || !(gain_linear > 0.0) || !(bandwidth_hz > 0.0) || !(n0_w_per_hz > 0.0)) {
        throw std::invalid_argument("snr: all arguments must be > 0");
    }
    return p_tx_w * gain_linear / (bandwidth_hz * n0_w_per_hz);
}

} // namespace uavsec
