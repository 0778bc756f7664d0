// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pf/math.hpp"
#include "pf/rng.hpp"
#include "pf/volume.hpp"

namespace pf {

// One indirect-light deposit. direction is the post-scatter travel direction
// and power the per-photon radiant intensity after throughput losses; g_index
// points into the owning trace's phase set.
struct Photon {
    Vec3f position;
    Vec3f direction;
    Vec3f power;
    uint8_t g_index = 0;
};

struct LightSource {
    Vec3 position;
    Rgb intensity;  // >= 0, finite
};

struct TraceConfig {
    uint64_t n_total = 100000;
    std::vector<double> phase_set{-0.75, 0.0, 0.75};
    int max_bounces = 16;
    int rr_start_bounce = 3;
    double rr_min_survival = 0.05;
    double rr_max_survival = 0.95;
    uint64_t seed = 0;
};

struct TraceResult {
    std::vector<Photon> photons;
    std::vector<double> phase_set;
    // Emission counts per (light, phase) pair, index = light * |G| + phase.
    // Empty after loading a map from disk.
    std::vector<uint64_t> emitted_per_pair;
    size_t n_lights = 0;
};

// Uniform direction over the solid angle the volume's bounding sphere
// subtends from the light; falls back to the full sphere for interior lights.
Vec3 emit_direction(const LightSource &light, const Aabb &world_box, Pcg32 &rng);

// Multi-phase photon tracing: emits cfg.n_total photons split as evenly as
// possible over (light, phase) pairs, random-walks them with delta tracking
// and HG scattering, and deposits records past the first interaction.
// Deterministic for a fixed (scene, cfg) regardless of worker count.
TraceResult trace_photons(const Medium &medium, const std::vector<LightSource> &lights,
                          const TraceConfig &cfg);

// Binary map file, little-endian:
//   magic "PFPM", u32 version, u64 count, u32 |G|, f64 phase values,
//   then packed records: position 3xf32, direction 3xf32, power 3xf32,
//   g-index u8 (37 bytes per record, no padding).
void save_photon_map(const std::string &path, const TraceResult &result);
TraceResult load_photon_map(const std::string &path);

}  // namespace pf
