// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace pf {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInv4Pi = 1.0 / (4.0 * kPi);
constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}
    explicit Vec3(double s) : x(s), y(s), z(s) {}

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double &operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 &operator+=(const Vec3 &o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3 &operator-=(const Vec3 &o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3 &operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    Vec3 &operator*=(const Vec3 &o) { x *= o.x; y *= o.y; z *= o.z; return *this; }
    Vec3 &operator/=(double s) { x /= s; y /= s; z /= s; return *this; }

    bool operator==(const Vec3 &o) const { return x == o.x && y == o.y && z == o.z; }
};

inline Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, const Vec3 &b) { return a *= b; }
inline Vec3 operator/(Vec3 a, double s) { return a /= s; }

inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length_squared(const Vec3 &v) { return dot(v, v); }
inline double length(const Vec3 &v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalize(const Vec3 &v) { return v / length(v); }
inline double max_component(const Vec3 &v) { return std::max(v.x, std::max(v.y, v.z)); }
inline double min_component(const Vec3 &v) { return std::min(v.x, std::min(v.y, v.z)); }
inline double mean_component(const Vec3 &v) { return (v.x + v.y + v.z) / 3.0; }
inline bool is_finite(const Vec3 &v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Radiance / power triples share the vector arithmetic.
using Rgb = Vec3;

// Compact storage for photon records and framebuffer-independent data.
struct Vec3f {
    float x = 0.f, y = 0.f, z = 0.f;

    Vec3f() = default;
    Vec3f(float x_, float y_, float z_) : x(x_), y(y_), z(z_) {}
    explicit Vec3f(const Vec3 &v)
        : x(static_cast<float>(v.x)), y(static_cast<float>(v.y)), z(static_cast<float>(v.z)) {}

    Vec3 to_vec3() const { return {x, y, z}; }
};

struct Ray {
    Vec3 origin;
    Vec3 direction;  // unit length
    double t_min = 0.0;
    double t_max = kInfinity;

    Vec3 at(double t) const { return origin + direction * t; }
};

struct Aabb {
    Vec3 lo{0.0, 0.0, 0.0};
    Vec3 hi{1.0, 1.0, 1.0};

    Vec3 center() const { return (lo + hi) * 0.5; }
    Vec3 diagonal() const { return hi - lo; }
    double bounding_radius() const { return 0.5 * length(diagonal()); }

    bool contains(const Vec3 &p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z &&
               p.z <= hi.z;
    }

    // Slab test; returns false when the ray misses [t_min, t_max] entirely.
    bool intersect(const Ray &r, double &t0, double &t1) const {
        t0 = r.t_min;
        t1 = r.t_max;
        for (int a = 0; a < 3; ++a) {
            double inv = 1.0 / r.direction[a];
            double tn = (lo[a] - r.origin[a]) * inv;
            double tf = (hi[a] - r.origin[a]) * inv;
            if (inv < 0.0) std::swap(tn, tf);
            t0 = std::max(t0, tn);
            t1 = std::min(t1, tf);
            if (t0 > t1) return false;
        }
        return true;
    }
};

// Branchless orthonormal basis after Duff et al., "Building an Orthonormal
// Basis, Revisited" (JCGT 2017). Stable for any unit n, no normalization.
inline void orthonormal_basis(const Vec3 &n, Vec3 &t, Vec3 &b) {
    const double sign = std::copysign(1.0, n.z);
    const double a = -1.0 / (sign + n.z);
    const double c = n.x * n.y * a;
    t = {1.0 + sign * n.x * n.x * a, sign * c, -sign * n.x};
    b = {c, sign + n.y * n.y * a, -n.y};
}

// Rotates a direction given in the local frame of `axis` (z up) to world space.
inline Vec3 from_local_frame(const Vec3 &axis, const Vec3 &local) {
    Vec3 t, b;
    orthonormal_basis(axis, t, b);
    return t * local.x + b * local.y + axis * local.z;
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace pf
