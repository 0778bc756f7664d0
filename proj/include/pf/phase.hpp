// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pf/math.hpp"
#include "pf/rng.hpp"

namespace pf {

// Working anisotropy is clamped to |g| <= 0.999: the Henyey-Greenstein
// density degenerates to a delta at |g| = 1.
constexpr double kMaxAnisotropy = 0.999;

inline double clamp_anisotropy(double g) {
    return std::clamp(g, -kMaxAnisotropy, kMaxAnisotropy);
}

// HG density per steradian at the given scattering angle cosine.
inline double hg_eval(double g, double cos_theta) {
    g = clamp_anisotropy(g);
    double denom = 1.0 + g * g - 2.0 * g * cos_theta;
    denom = std::max(denom, 1e-12);
    return kInv4Pi * (1.0 - g * g) / (denom * std::sqrt(denom));
}

// Inverse-CDF sample of the scattering angle cosine.
inline double hg_sample_cos(double g, double u) {
    g = clamp_anisotropy(g);
    if (std::abs(g) < 1e-6) return 1.0 - 2.0 * u;
    double sq = (1.0 - g * g) / (1.0 - g + 2.0 * g * u);
    return std::clamp((1.0 + g * g - sq * sq) / (2.0 * g), -1.0, 1.0);
}

// Scatters w_in into a direction distributed with density hg_eval(g, w_in.w_out).
inline Vec3 hg_sample(double g, const Vec3 &w_in, double u1, double u2) {
    double cos_theta = hg_sample_cos(g, u1);
    double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    double phi = kTwoPi * u2;
    Vec3 local{sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
    return from_local_frame(w_in, local);
}

inline Vec3 hg_sample(double g, const Vec3 &w_in, Pcg32 &rng) {
    double u1 = rng.next_double();
    double u2 = rng.next_double();
    return hg_sample(g, w_in, u1, u2);
}

// Analytic CDF of the scattering cosine, F(c) = P[cos <= c].
inline double hg_cdf(double g, double c) {
    g = clamp_anisotropy(g);
    if (std::abs(g) < 1e-6) return 0.5 * (c + 1.0);
    double inv_sqrt = 1.0 / std::sqrt(std::max(1.0 + g * g - 2.0 * g * c, 1e-12));
    return clamp01((1.0 - g * g) / (2.0 * g) * (inv_sqrt - 1.0 / (1.0 + g)));
}

}  // namespace pf
