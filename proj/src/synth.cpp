#include "segdense/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "segdense/rng.hpp"

namespace segdense {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Deterministic per-pixel noise in [-1, 1); purely cosmetic, the mask never
// depends on it.
double pixel_noise(int x, int y, std::uint64_t seed) {
  std::uint64_t z = seed ^ (static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL) ^
                    (static_cast<std::uint64_t>(y) * 0xBF58476D1CE4E5B9ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0;
}

bool under_eyelid(const SynthGeometry& g, double x, double y) {
  if (!g.eyelid) return false;
  const double dx = x - g.center_x;
  return y < g.eyelid_apex_y - g.eyelid_curve * dx * dx;
}

bool in_highlight(const SynthGeometry& g, double x, double y) {
  for (const auto& blob : g.highlights) {
    const double dx = x - blob.x;
    const double dy = y - blob.y;
    if (dx * dx + dy * dy <= blob.radius * blob.radius) return true;
  }
  return false;
}

std::uint8_t clamp_intensity(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

}  // namespace

void SynthConfig::validate() const {
  if (width < kMinImageExtent || height < kMinImageExtent) {
    throw std::invalid_argument("synthetic image too small");
  }
  if (!(pupil_radius_min > 0.0 && pupil_radius_min <= pupil_radius_max)) {
    throw std::invalid_argument("invalid pupil radius range");
  }
  if (!(iris_radius_min > 0.0 && iris_radius_min <= iris_radius_max)) {
    throw std::invalid_argument("invalid iris radius range");
  }
  if (pupil_radius_max >= iris_radius_min) {
    throw std::invalid_argument(
        "radii inconsistent: pupil radius must stay below iris radius");
  }
  if (iris_radius_max > 0.5) {
    throw std::invalid_argument("iris radius must fit inside the image");
  }
}

SynthGeometry synth_geometry(const SynthConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(seed);

  const double extent = std::min(config.width, config.height);
  SynthGeometry g;
  g.width = config.width;
  g.height = config.height;
  g.center_x = config.width / 2.0 + rng.uniform(-0.04, 0.04) * extent;
  g.center_y = config.height / 2.0 + rng.uniform(-0.04, 0.04) * extent;
  g.pupil_radius =
      rng.uniform(config.pupil_radius_min, config.pupil_radius_max) * extent;
  g.iris_radius =
      rng.uniform(config.iris_radius_min, config.iris_radius_max) * extent;
  g.texture_phase_radial = rng.uniform(0.0, kTwoPi);
  g.texture_phase_angular = rng.uniform(0.0, kTwoPi);
  g.texture_lobes = rng.uniform_int(5, 9);

  if (config.eyelid_occlusion && rng.bernoulli(0.75)) {
    g.eyelid = true;
    g.eyelid_apex_y = g.center_y - rng.uniform(0.55, 0.85) * g.iris_radius;
    g.eyelid_curve = rng.uniform(0.2, 0.5) / g.iris_radius;
  }

  if (config.specular_highlights && config.phase == Phase::kPostSurgery) {
    const int blob_count = rng.uniform_int(2, 4);
    for (int i = 0; i < blob_count; ++i) {
      const double angle = rng.uniform(0.0, kTwoPi);
      const double dist = rng.uniform(0.2, 0.85) * g.iris_radius;
      HighlightBlob blob;
      blob.x = g.center_x + dist * std::cos(angle);
      blob.y = g.center_y + dist * std::sin(angle);
      blob.radius = rng.uniform(0.015, 0.04) * extent;
      g.highlights.push_back(blob);
    }
  }
  return g;
}

SynthGeometry mirror_horizontal(const SynthGeometry& geometry) {
  SynthGeometry g = geometry;
  const double last = geometry.width - 1.0;
  g.center_x = last - geometry.center_x;
  for (auto& blob : g.highlights) blob.x = last - blob.x;
  // sin(k*theta + phi) mirrors to sin(k*(pi - theta) + phi); fold the angle
  // flip into the phase so the rendered texture mirrors exactly.
  g.texture_phase_angular =
      geometry.texture_lobes * 3.14159265358979323846 + geometry.texture_phase_angular;
  return g;
}

SegmentationMask render_synth_mask(const SynthGeometry& g) {
  SegmentationMask mask(g.width, g.height);
  const double rp2 = g.pupil_radius * g.pupil_radius;
  const double ri2 = g.iris_radius * g.iris_radius;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const double dx = x - g.center_x;
      const double dy = y - g.center_y;
      const double d2 = dx * dx + dy * dy;
      const bool annulus = d2 > rp2 && d2 <= ri2;
      if (annulus && !under_eyelid(g, x, y) && !in_highlight(g, x, y)) {
        mask.at(x, y) = 1;
      }
    }
  }
  return mask;
}

IrisImage render_synth_image(const SynthGeometry& g, const SynthConfig& config,
                             std::uint64_t seed) {
  IrisImage image(g.width, g.height);
  const double extent = std::min(g.width, g.height);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const double dx = x - g.center_x;
      const double dy = y - g.center_y;
      const double dist = std::sqrt(dx * dx + dy * dy);
      const double noise = pixel_noise(x, y, seed);

      double v;
      if (dist <= g.pupil_radius) {
        if (config.phase == Phase::kPreSurgery) {
          // Cloudy white layer over the pupil.
          const double blotch =
              std::sin(x * 9.0 / extent + g.texture_phase_radial) *
              std::sin(y * 11.0 / extent + g.texture_phase_angular);
          v = 196.0 + 22.0 * blotch + 10.0 * noise;
        } else {
          v = 26.0 + 6.0 * noise;
        }
      } else if (dist <= g.iris_radius) {
        const double band = (dist - g.pupil_radius) /
                            (g.iris_radius - g.pupil_radius);
        const double theta = std::atan2(dy, dx);
        const double radial =
            std::sin(band * 4.0 * kTwoPi + g.texture_phase_radial);
        const double angular =
            std::sin(g.texture_lobes * theta + g.texture_phase_angular);
        v = 96.0 + 22.0 * radial + 18.0 * angular + 9.0 * noise;
      } else {
        const double falloff = std::min(1.0, (dist - g.iris_radius) / extent);
        v = 178.0 - 20.0 * falloff + 10.0 * noise;
      }

      if (under_eyelid(g, x, y)) v = 146.0 + 9.0 * noise;
      if (in_highlight(g, x, y)) v = 251.0 + 4.0 * noise;

      image.at(x, y) = clamp_intensity(v);
    }
  }
  return image;
}

Sample synthesize_sample(const SynthConfig& config, std::uint64_t seed) {
  SynthGeometry geometry = synth_geometry(config, seed);
  Rng rng(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
  const bool right_eye = rng.bernoulli(0.5);
  if (right_eye) geometry = mirror_horizontal(geometry);

  Sample sample;
  sample.image = render_synth_image(geometry, config, seed);
  sample.mask = render_synth_mask(geometry);
  sample.subject_id = "synthetic";
  sample.eye = right_eye ? Eye::kRight : Eye::kLeft;
  sample.phase = config.phase;
  sample.sensor = "synth";
  sample.validate();
  return sample;
}

}  // namespace segdense
