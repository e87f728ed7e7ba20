#include "segdense/augment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace segdense {

void AugmentConfig::validate() const {
  for (double f : contrast_factors) {
    if (!(f > 0.0)) {
      throw std::invalid_argument("contrast factors must be positive");
    }
    if (f == 1.0) {
      throw std::invalid_argument("contrast factor 1.0 duplicates the original");
    }
  }
  if (!(center_value >= 0.0 && center_value <= 255.0)) {
    throw std::invalid_argument("center value must lie in [0, 255]");
  }
}

namespace {

// Half-down, so the .5 cases produced by the 127.5 center round toward zero
// within the valid [0, 255] range and factor 1.0 is an exact identity.
double round_half_down(double v) {
  const double f = std::floor(v);
  return (v - f > 0.5) ? f + 1.0 : f;
}

}  // namespace

IrisImage contrast_normalize(const IrisImage& image, double factor,
                             double center) {
  image.validate();
  if (!(factor > 0.0)) {
    throw std::invalid_argument("contrast factor must be positive");
  }
  IrisImage out(image.width, image.height);
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    const double v = center + factor * (image.pixels[i] - center);
    out.pixels[i] = static_cast<std::uint8_t>(
        std::clamp(round_half_down(v), 0.0, 255.0));
  }
  return out;
}

Sample horizontal_flip(const Sample& sample) {
  sample.validate();
  Sample out = sample;
  out.image = flip_horizontal(sample.image);
  if (sample.mask) out.mask = flip_horizontal(*sample.mask);
  out.eye = sample.eye == Eye::kLeft ? Eye::kRight : Eye::kLeft;
  return out;
}

std::vector<Sample> expand_dataset(const std::vector<Sample>& samples,
                                   const AugmentConfig& config) {
  config.validate();
  std::vector<Sample> out;
  out.reserve(samples.size() * 10);
  for (const auto& sample : samples) {
    const Sample flipped = horizontal_flip(sample);
    for (const Sample* base : {&sample, &flipped}) {
      out.push_back(*base);
      for (double factor : config.contrast_factors) {
        Sample variant = *base;
        variant.image =
            contrast_normalize(base->image, factor, config.center_value);
        out.push_back(std::move(variant));
      }
    }
  }
  return out;
}

}  // namespace segdense
