// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pf/math.hpp"
#include "pf/rng.hpp"

namespace pf {

struct Rgba {
    double r = 0.0, g = 0.0, b = 0.0, a = 0.0;
    Rgb rgb() const { return {r, g, b}; }
};

// Normalized scalar grid on the unit cube, x-fastest layout. Immutable after
// construction and safe to share across threads.
class VolumeGrid {
  public:
    VolumeGrid() = default;
    VolumeGrid(int nx, int ny, int nz, std::vector<float> data);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    const std::vector<float> &data() const { return data_; }
    const Aabb &world_box() const { return box_; }
    float value_min() const { return value_min_; }
    float value_max() const { return value_max_; }

    float voxel(int ix, int iy, int iz) const {
        return data_[static_cast<size_t>(ix) +
                     static_cast<size_t>(nx_) * (static_cast<size_t>(iy) +
                                                 static_cast<size_t>(ny_) * static_cast<size_t>(iz))];
    }

    // Trilinear reconstruction at a world-space point. Out-of-box queries
    // clamp to the boundary voxel; trackers may step marginally past a face.
    double sample(const Vec3 &p) const;

    // Raw binary32 array plus human-readable metadata sidecar.
    // "volume.raw" pairs with "volume.meta".
    static VolumeGrid load(const std::string &raw_path);
    void save(const std::string &raw_path) const;

  private:
    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<float> data_;
    Aabb box_;
    float value_min_ = 0.f, value_max_ = 0.f;
};

// Piecewise-linear scalar -> RGBA classification. Control positions are
// strictly increasing with first = 0 and last = 1; channels live in [0, 1].
class TransferFunction {
  public:
    struct ControlPoint {
        double scalar = 0.0;
        Rgba color;
    };

    TransferFunction();  // constant white, alpha 1
    explicit TransferFunction(std::vector<ControlPoint> points);

    const std::vector<ControlPoint> &control_points() const { return points_; }

    Rgba classify(double scalar) const;

    // Largest alpha the function attains on [s_lo, s_hi].
    double max_alpha(double s_lo, double s_hi) const;

    // Text format: one "scalar r g b a" line per control point, '#' comments.
    static TransferFunction load(const std::string &path);
    void save(const std::string &path) const;

  private:
    std::vector<ControlPoint> points_;
};

struct Interaction {
    Vec3 position;
    double scalar = 0.0;
    Rgba albedo;
};

// Extinction model over a grid + transfer function pair:
//   sigma_t(x) = density_scale * alpha(classify(sample(x)))
// sigma_max is the majorant for delta tracking, computed once from the value
// range the grid actually attains.
class Medium {
  public:
    Medium(const VolumeGrid &grid, const TransferFunction &tf, double density_scale);

    const VolumeGrid &grid() const { return *grid_; }
    const TransferFunction &tf() const { return *tf_; }
    double density_scale() const { return density_scale_; }
    double sigma_max() const { return sigma_max_; }
    const Aabb &world_box() const { return grid_->world_box(); }

    double extinction(const Vec3 &p) const {
        return density_scale_ * tf_->classify(grid_->sample(p)).a;
    }

  private:
    const VolumeGrid *grid_;
    const TransferFunction *tf_;
    double density_scale_;
    double sigma_max_;
};

// Woodcock tracking: returns the first real interaction along the ray, or
// nullopt when the flight leaves [t_min, t_max] (or misses the volume).
std::optional<Interaction> delta_track(const Medium &medium, const Ray &ray, Pcg32 &rng);

// Unbiased transmittance estimate for the segment a -> b: the fraction of
// n_trials delta-tracked flights that traverse without a real collision.
double transmittance(const Medium &medium, const Vec3 &a, const Vec3 &b, Pcg32 &rng,
                     int n_trials);

}  // namespace pf
