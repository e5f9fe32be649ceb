#pragma once

// Straight-line reference evaluation of the full link budget and secrecy
// composition, written directly from the model formulas. Deliberately free of
// any uavsec header so it stays an independent route for cross-checking the
// library: every quantity below is recomputed from scratch.

#include <algorithm>
#include <cmath>
#include <optional>

namespace reference {

struct Point {
    double x{0}, y{0}, z{0};
};

struct ModelParams {
    double carrier_hz{2e9};
    double speed_of_light{2.998e8};
    double los_c{9.61};
    double los_b{0.16};
    double eta_los_db{1.0};
    double eta_nlos_db{20.0};
    double alpha{4.0};
    double bandwidth_hz{10e6};
    double n0{1e-19};
    double bs_power_w{0.1};
    double uav_power_w{0.01};
    double min_distance_m{1.0};
};

inline double dist(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline double ground_rate_bps(const Point& tx, const Point& rx, double fading_power,
                              const ModelParams& p) {
    const double d = std::max(dist(tx, rx), p.min_distance_m);
    const double gain = fading_power * std::pow(d, -p.alpha);
    const double snr = p.bs_power_w * gain / (p.bandwidth_hz * p.n0);
    return p.bandwidth_hz * std::log2(1.0 + snr);
}

inline double air_rate_bps(const Point& uav, const Point& rx, double fading_power,
                           const ModelParams& p) {
    const double d = std::max(dist(uav, rx), p.min_distance_m);
    const double dx = uav.x - rx.x;
    const double dy = uav.y - rx.y;
    const double horizontal = std::sqrt(dx * dx + dy * dy);
    const double theta_deg =
        horizontal == 0.0 ? 90.0
                          : std::atan(uav.z / horizontal) * 180.0 / 3.14159265358979323846;
    const double rho_los =
        1.0 / (1.0 + p.los_c * std::exp(-p.los_b * (theta_deg - p.los_c)));
    const double pl_db = 20.0 * std::log10(4.0 * 3.14159265358979323846 * p.carrier_hz * d /
                                           p.speed_of_light) +
                         rho_los * p.eta_los_db + (1.0 - rho_los) * p.eta_nlos_db;
    const double snr = p.uav_power_w * std::pow(10.0, -pl_db / 10.0) * fading_power /
                       (p.bandwidth_hz * p.n0);
    return p.bandwidth_hz * std::log2(1.0 + snr);
}

/// Secrecy rate in bits/s for one base station, one device, one eavesdropper
/// and an optional relay, with explicit ground-fading powers.
inline double secrecy_rate_bps(const Point& bs, const Point& ue, const Point& eav,
                               const std::optional<Point>& uav, const ModelParams& p,
                               double g_bs_ue = 1.0, double g_bs_eav = 1.0) {
    const double r_t_l = ground_rate_bps(bs, ue, g_bs_ue, p);
    const double r_t_i = ground_rate_bps(bs, eav, g_bs_eav, p);
    const double r_r_l = uav ? air_rate_bps(*uav, ue, 1.0, p) : 0.0;
    const double r_r_i = uav ? air_rate_bps(*uav, eav, 1.0, p) : 0.0;
    const double r_l = std::max(r_t_l, r_r_l);
    const double r_i = std::max(r_t_i, r_r_i);
    return std::max(r_l - r_i, 0.0);
}

} // namespace reference
