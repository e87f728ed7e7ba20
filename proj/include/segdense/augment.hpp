#pragma once

#include <array>
#include <vector>

#include "segdense/dataset.hpp"

namespace segdense {

struct AugmentConfig {
  std::array<double, 4> contrast_factors{0.8, 0.9, 1.1, 1.2};
  double center_value = 127.5;

  void validate() const;
};

// out = round(center + factor * (in - center)), clamped to [0, 255].
// Rounding is half-toward-zero so factor 1.0 reproduces integer inputs
// exactly with the half-integer center 127.5.
IrisImage contrast_normalize(const IrisImage& image, double factor,
                             double center = 127.5);

// Flips image columns and, when present, the mask identically.
Sample horizontal_flip(const Sample& sample);

// Tenfold expansion: {original, flipped} x {identity, 4 contrast factors}.
// Order per input sample: original, its 4 contrast variants, flipped, its 4
// contrast variants. Masks are never contrast-transformed.
std::vector<Sample> expand_dataset(const std::vector<Sample>& samples,
                                   const AugmentConfig& config);

}  // namespace segdense
