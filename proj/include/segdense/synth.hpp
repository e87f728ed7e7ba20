#pragma once

#include <cstdint>
#include <vector>

#include "segdense/dataset.hpp"

namespace segdense {

// Radii are fractions of min(width, height) so the generator scales from
// desk-test sizes up to the native 640x480.
struct SynthConfig {
  int width = kOriginalWidth;
  int height = kOriginalHeight;
  double pupil_radius_min = 0.10;
  double pupil_radius_max = 0.16;
  double iris_radius_min = 0.30;
  double iris_radius_max = 0.40;
  bool eyelid_occlusion = true;
  bool specular_highlights = true;
  Phase phase = Phase::kPostSurgery;

  void validate() const;
};

struct HighlightBlob {
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
};

// Everything the mask depends on. Pixel intensities additionally mix in
// deterministic per-pixel noise that the mask ignores.
struct SynthGeometry {
  int width = 0;
  int height = 0;
  double center_x = 0.0;
  double center_y = 0.0;
  double pupil_radius = 0.0;
  double iris_radius = 0.0;
  bool eyelid = false;
  double eyelid_apex_y = 0.0;   // lid covers y < apex - curve * (x - cx)^2
  double eyelid_curve = 0.0;
  std::vector<HighlightBlob> highlights;
  double texture_phase_radial = 0.0;
  double texture_phase_angular = 0.0;
  int texture_lobes = 7;
};

SynthGeometry synth_geometry(const SynthConfig& config, std::uint64_t seed);

// Mirrors the geometry about the vertical axis of a width-wide raster;
// render + mirror commutes with mirroring the geometry first.
SynthGeometry mirror_horizontal(const SynthGeometry& geometry);

// Mask = iris annulus minus eyelid-occluded and highlighted pixels.
SegmentationMask render_synth_mask(const SynthGeometry& geometry);

IrisImage render_synth_image(const SynthGeometry& geometry,
                             const SynthConfig& config, std::uint64_t seed);

Sample synthesize_sample(const SynthConfig& config, std::uint64_t seed);

}  // namespace segdense
