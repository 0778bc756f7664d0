// SPDX-License-Identifier: Apache-2.0
#include "pf/volume.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pf {

namespace {

std::string meta_path_for(const std::string &raw_path) {
    auto dot = raw_path.rfind('.');
    auto slash = raw_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return raw_path + ".meta";
    return raw_path.substr(0, dot) + ".meta";
}

}  // namespace

VolumeGrid::VolumeGrid(int nx, int ny, int nz, std::vector<float> data)
    : nx_(nx), ny_(ny), nz_(nz), data_(std::move(data)) {
    if (nx_ <= 0 || ny_ <= 0 || nz_ <= 0)
        throw std::invalid_argument("VolumeGrid: dims must be positive");
    if (data_.size() != static_cast<size_t>(nx_) * ny_ * nz_)
        throw std::invalid_argument("VolumeGrid: data length does not match dims");
    value_min_ = 1.f;
    value_max_ = 0.f;
    for (float v : data_) {
        if (!std::isfinite(v) || v < 0.f || v > 1.f)
            throw std::invalid_argument("VolumeGrid: scalars must be finite and in [0,1]");
        value_min_ = std::min(value_min_, v);
        value_max_ = std::max(value_max_, v);
    }
    if (data_.empty()) value_min_ = value_max_ = 0.f;
}

double VolumeGrid::sample(const Vec3 &p) const {
    // Cell-centered voxels: voxel i covers [(i)/n, (i+1)/n), sample points at
    // voxel centers (i + 0.5) / n. Clamp keeps boundary queries valid.
    auto axis = [](double x, int n) {
        double c = x * n - 0.5;
        double lo = std::floor(c);
        int i0 = static_cast<int>(lo);
        double f = c - lo;
        if (i0 < 0) {
            i0 = 0;
            f = 0.0;
        } else if (i0 >= n - 1) {
            i0 = n - 1;
            f = 0.0;
        }
        return std::pair<int, double>(i0, f);
    };
    auto [ix, fx] = axis(p.x, nx_);
    auto [iy, fy] = axis(p.y, ny_);
    auto [iz, fz] = axis(p.z, nz_);
    int jx = std::min(ix + 1, nx_ - 1);
    int jy = std::min(iy + 1, ny_ - 1);
    int jz = std::min(iz + 1, nz_ - 1);

    double c000 = voxel(ix, iy, iz), c100 = voxel(jx, iy, iz);
    double c010 = voxel(ix, jy, iz), c110 = voxel(jx, jy, iz);
    double c001 = voxel(ix, iy, jz), c101 = voxel(jx, iy, jz);
    double c011 = voxel(ix, jy, jz), c111 = voxel(jx, jy, jz);

    double c00 = c000 * (1.0 - fx) + c100 * fx;
    double c10 = c010 * (1.0 - fx) + c110 * fx;
    double c01 = c001 * (1.0 - fx) + c101 * fx;
    double c11 = c011 * (1.0 - fx) + c111 * fx;
    double c0 = c00 * (1.0 - fy) + c10 * fy;
    double c1 = c01 * (1.0 - fy) + c11 * fy;
    return c0 * (1.0 - fz) + c1 * fz;
}

VolumeGrid VolumeGrid::load(const std::string &raw_path) {
    std::ifstream meta(meta_path_for(raw_path));
    if (!meta) throw std::runtime_error("VolumeGrid: cannot open " + meta_path_for(raw_path));
    std::map<std::string, double> kv;
    std::string line;
    while (std::getline(meta, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        double value;
        if (ss >> key >> value) kv[key] = value;
    }
    auto need = [&](const std::string &k) {
        auto it = kv.find(k);
        if (it == kv.end())
            throw std::runtime_error("VolumeGrid: missing key '" + k + "' in metadata");
        return it->second;
    };
    int nx = static_cast<int>(need("dims_x"));
    int ny = static_cast<int>(need("dims_y"));
    int nz = static_cast<int>(need("dims_z"));
    double vmin = kv.count("value_min") ? kv["value_min"] : 0.0;
    double vmax = kv.count("value_max") ? kv["value_max"] : 1.0;

    size_t count = static_cast<size_t>(nx) * ny * nz;
    std::vector<float> data(count);
    std::ifstream raw(raw_path, std::ios::binary);
    if (!raw) throw std::runtime_error("VolumeGrid: cannot open " + raw_path);
    raw.read(reinterpret_cast<char *>(data.data()), count * sizeof(float));
    if (static_cast<size_t>(raw.gcount()) != count * sizeof(float))
        throw std::runtime_error("VolumeGrid: " + raw_path + " is shorter than dims imply");

    double range = vmax - vmin;
    for (float &v : data) {
        if (!std::isfinite(v)) throw std::runtime_error("VolumeGrid: non-finite scalar in " + raw_path);
        double n = range > 0.0 ? (v - vmin) / range : 0.0;
        v = static_cast<float>(clamp01(n));
    }
    return VolumeGrid(nx, ny, nz, std::move(data));
}

void VolumeGrid::save(const std::string &raw_path) const {
    std::ofstream raw(raw_path, std::ios::binary);
    if (!raw) throw std::runtime_error("VolumeGrid: cannot write " + raw_path);
    raw.write(reinterpret_cast<const char *>(data_.data()), data_.size() * sizeof(float));
    std::ofstream meta(meta_path_for(raw_path));
    if (!meta) throw std::runtime_error("VolumeGrid: cannot write " + meta_path_for(raw_path));
    meta << "dims_x " << nx_ << "\n"
         << "dims_y " << ny_ << "\n"
         << "dims_z " << nz_ << "\n"
         << "value_min 0\n"
         << "value_max 1\n";
}

TransferFunction::TransferFunction()
    : TransferFunction({{0.0, {1.0, 1.0, 1.0, 1.0}}, {1.0, {1.0, 1.0, 1.0, 1.0}}}) {}

TransferFunction::TransferFunction(std::vector<ControlPoint> points) : points_(std::move(points)) {
    if (points_.size() < 2)
        throw std::invalid_argument("TransferFunction: need at least two control points");
    if (points_.front().scalar != 0.0 || points_.back().scalar != 1.0)
        throw std::invalid_argument("TransferFunction: control points must span [0,1]");
    for (size_t i = 0; i < points_.size(); ++i) {
        const Rgba &c = points_[i].color;
        for (double ch : {c.r, c.g, c.b, c.a})
            if (!(ch >= 0.0 && ch <= 1.0))
                throw std::invalid_argument("TransferFunction: channels must be in [0,1]");
        if (i > 0 && points_[i].scalar <= points_[i - 1].scalar)
            throw std::invalid_argument("TransferFunction: positions must be strictly increasing");
    }
}

Rgba TransferFunction::classify(double scalar) const {
    double s = clamp01(scalar);
    size_t hi = 1;
    while (hi + 1 < points_.size() && points_[hi].scalar < s) ++hi;
    const ControlPoint &a = points_[hi - 1];
    const ControlPoint &b = points_[hi];
    double t = (s - a.scalar) / (b.scalar - a.scalar);
    t = clamp01(t);
    return {a.color.r + (b.color.r - a.color.r) * t, a.color.g + (b.color.g - a.color.g) * t,
            a.color.b + (b.color.b - a.color.b) * t, a.color.a + (b.color.a - a.color.a) * t};
}

double TransferFunction::max_alpha(double s_lo, double s_hi) const {
    double m = std::max(classify(s_lo).a, classify(s_hi).a);
    for (const ControlPoint &p : points_)
        if (p.scalar > s_lo && p.scalar < s_hi) m = std::max(m, p.color.a);
    return m;
}

TransferFunction TransferFunction::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("TransferFunction: cannot open " + path);
    std::vector<ControlPoint> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        ControlPoint p;
        if (ss >> p.scalar >> p.color.r >> p.color.g >> p.color.b >> p.color.a)
            pts.push_back(p);
    }
    return TransferFunction(std::move(pts));
}

void TransferFunction::save(const std::string &path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("TransferFunction: cannot write " + path);
    out << "# scalar r g b a\n";
    char buf[160];
    for (const ControlPoint &p : points_) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %.17g %.17g\n", p.scalar, p.color.r,
                      p.color.g, p.color.b, p.color.a);
        out << buf;
    }
}

Medium::Medium(const VolumeGrid &grid, const TransferFunction &tf, double density_scale)
    : grid_(&grid), tf_(&tf), density_scale_(density_scale) {
    if (!(density_scale > 0.0) || !std::isfinite(density_scale))
        throw std::invalid_argument("Medium: density_scale must be positive and finite");
    sigma_max_ = density_scale * tf.max_alpha(grid.value_min(), grid.value_max());
}

std::optional<Interaction> delta_track(const Medium &medium, const Ray &ray, Pcg32 &rng) {
    if (!is_finite(ray.origin) || !is_finite(ray.direction) || !std::isfinite(ray.t_min) ||
        ray.t_min < 0.0 || ray.t_min > ray.t_max)
        throw std::invalid_argument("delta_track: invalid ray");

    double t0, t1;
    if (!medium.world_box().intersect(ray, t0, t1)) return std::nullopt;
    const double sigma_max = medium.sigma_max();
    if (sigma_max <= 0.0) return std::nullopt;

    double t = t0;
    const double inv_sigma_max = 1.0 / sigma_max;
    for (;;) {
        t -= std::log(1.0 - rng.next_double()) * inv_sigma_max;
        if (t > t1) return std::nullopt;
        Vec3 x = ray.at(t);
        double scalar = medium.grid().sample(x);
        Rgba albedo = medium.tf().classify(scalar);
        double sigma = medium.density_scale() * albedo.a;
        if (rng.next_double() * sigma_max < sigma) return Interaction{x, scalar, albedo};
    }
}

double transmittance(const Medium &medium, const Vec3 &a, const Vec3 &b, Pcg32 &rng,
                     int n_trials) {
    if (n_trials <= 0) throw std::invalid_argument("transmittance: n_trials must be positive");
    Vec3 d = b - a;
    double len = length(d);
    if (len == 0.0) return 1.0;
    Ray ray{a, d / len, 0.0, len};

    double t0, t1;
    if (!medium.world_box().intersect(ray, t0, t1)) return 1.0;
    if (medium.sigma_max() <= 0.0) return 1.0;

    int passed = 0;
    for (int trial = 0; trial < n_trials; ++trial) {
        double t = t0;
        bool collided = false;
        const double inv_sigma_max = 1.0 / medium.sigma_max();
        for (;;) {
            t -= std::log(1.0 - rng.next_double()) * inv_sigma_max;
            if (t > t1) break;
            double sigma = medium.extinction(ray.at(t));
            if (rng.next_double() * medium.sigma_max() < sigma) {
                collided = true;
                break;
            }
        }
        if (!collided) ++passed;
    }
    return static_cast<double>(passed) / n_trials;
}

}  // namespace pf
