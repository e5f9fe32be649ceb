#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace uavsec {

/// How small-scale fading enters a link class.
enum class FadingKind {
    MeanOnly,    // every fading power is pinned to its distribution mean (1.0)
    MonteCarlo,  // powers are drawn per realization and results averaged
};

struct FadingMode {
    FadingKind kind{FadingKind::MeanOnly};
    int realizations{1};  // per time step; meaningful for MonteCarlo only
};

/// Stable identifiers for the per-link random substreams. Base-station link
/// ids depend only on the station's index in the node set, so a link's draws
/// never move when an unrelated link changes how much randomness it consumes.
namespace link_id {
inline constexpr std::uint32_t uav_to_ue = 0;
inline constexpr std::uint32_t uav_to_eav = 1;
inline std::uint32_t bs_to_ue(std::size_t bs_index) {
    return 2 + 2 * static_cast<std::uint32_t>(bs_index);
}
inline std::uint32_t bs_to_eav(std::size_t bs_index) {
    return 3 + 2 * static_cast<std::uint32_t>(bs_index);
}
} // namespace link_id

/// Counter-based random stream: the state is derived by hashing
/// (seed, time_step, realization, link) through the splitmix64 finalizer, so
/// every (seed, stream id) pair maps to the same sample sequence regardless
/// of execution order. The raw 64-bit stream is platform-independent;
/// transformed samples are deterministic for a given libm.
class RngStream {
public:
    struct Id {
        std::uint64_t time_step{0};
        std::uint32_t realization{0};
        std::uint32_t link{0};
    };

    RngStream(std::uint64_t seed, Id id)
        : state_(mix(mix(mix(mix(seed) ^ id.time_step) ^ id.realization) ^ id.link)) {}

    /// Next 64 uniform bits (splitmix64).
    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1]; never returns 0, so log() stays finite.
    double next_unit_positive() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Standard normal via Box-Muller; consumes two uniforms.
inline double sample_standard_normal(RngStream& stream) {
    const double u1 = stream.next_unit_positive();
    const double u2 = stream.next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Unit-mean exponential fading power (Rayleigh amplitude squared).
inline double sample_exponential_power(RngStream& stream) {
    return -std::log(stream.next_unit_positive());
}

namespace detail {

// Marsaglia-Tsang squeeze method for Gamma(shape, 1), shape >= 1.
inline double sample_gamma_shape_ge1(double shape, RngStream& stream) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double z = sample_standard_normal(stream);
        const double t = 1.0 + c * z;
        if (t <= 0.0) continue;
        const double v = t * t * t;
        const double u = stream.next_unit_positive();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
        if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

} // namespace detail

/// Unit-mean Nakagami-m fading power: the squared Nakagami amplitude is
/// Gamma(m, 1/m)-distributed. m = 1 reduces to the exponential (Rayleigh) case.
inline double sample_nakagami_power(double m, RngStream& stream) {
    if (!(m >= 0.5)) {
        throw std::invalid_argument("sample_nakagami_power: shape m must be >= 0.5");
    }
    double g;
    if (m >= 1.0) {
        g = detail::sample_gamma_shape_ge1(m, stream);
    } else {
        // boost from Gamma(m + 1, 1): multiply by U^(1/m)
        g = detail::sample_gamma_shape_ge1(m + 1.0, stream) *
            std::pow(stream.next_unit_positive(), 1.0 / m);
    }
    return g / m;
}

/// Ground-link fading power under a mode: the distribution mean in MeanOnly,
/// an Exp(1) draw otherwise.
inline double g2g_fading_power(const FadingMode& mode, RngStream& stream) {
    return mode.kind == FadingKind::MeanOnly ? 1.0 : sample_exponential_power(stream);
}

/// Air-to-ground fading power under a mode: 1.0 in MeanOnly, a unit-mean
/// Nakagami-m power draw otherwise.
inline double a2g_fading_power(const FadingMode& mode, double m, RngStream& stream) {
    return mode.kind == FadingKind::MeanOnly ? 1.0 : sample_nakagami_power(m, stream);
}

} // namespace uavsec
