#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segdense/image.hpp"
#include "segdense/model.hpp"

namespace segdense {

// pixel = 1 iff confidence >= threshold.
SegmentationMask binarize(const ConfidenceMap& confidence, double threshold = 0.5);

// Per-pixel confidence bands: 0 background (< tau_low), 1 low confidence
// ([tau_low, tau_high)), 2 high confidence (>= tau_high).
struct ConfidenceBands {
  static constexpr std::uint8_t kBackground = 0;
  static constexpr std::uint8_t kLow = 1;
  static constexpr std::uint8_t kHigh = 2;

  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bands;
  double tau_low = 0.5;
  double tau_high = 0.9;

  std::uint8_t at(int x, int y) const {
    return bands[static_cast<std::size_t>(y) * width + x];
  }
};

ConfidenceBands confidence_bands(const ConfidenceMap& confidence,
                                 double tau_low = 0.5, double tau_high = 0.9);

// Keeps only the largest 4-connected foreground component, then fills
// background holes not 4-connected to the image border. Idempotent.
SegmentationMask postprocess(const SegmentationMask& mask);

struct PredictOptions {
  double threshold = 0.5;
  bool postprocess = false;
};

// Original-resolution prediction: resize to model input, forward, binarize,
// nearest-resize back to the input size, optional cleanup.
SegmentationMask predict_mask(SegDenseNet& model, const IrisImage& image,
                              const PredictOptions& options = {});

ConfidenceMap predict_confidence(SegDenseNet& model, const IrisImage& image);

void export_mask(const SegmentationMask& mask, const std::string& path);

// Color overlay of the mask boundary (and bands, when given) on the image.
void export_overlay(const IrisImage& image, const SegmentationMask& mask,
                    const ConfidenceBands* bands, const std::string& path);

}  // namespace segdense
