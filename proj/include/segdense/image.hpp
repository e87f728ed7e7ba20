#pragma once

#include <cstdint>
#include <vector>

namespace segdense {

constexpr int kModelInputWidth = 224;
constexpr int kModelInputHeight = 224;
constexpr int kOriginalWidth = 640;
constexpr int kOriginalHeight = 480;
constexpr int kMinImageExtent = 32;

// Grayscale 8-bit eye image (near-IR semantics), row-major.
struct IrisImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  IrisImage() = default;
  IrisImage(int w, int h)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }

  // Throws std::invalid_argument on undersized or inconsistent storage.
  void validate() const;
};

// Binary iris/non-iris map; every pixel is exactly 0 or 1.
struct SegmentationMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  SegmentationMask() = default;
  SegmentationMask(int w, int h)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }

  std::size_t foreground_count() const;

  void validate() const;
};

// Bilinear resize with half-pixel sample centers; output clamped to [0,255].
IrisImage resize_bilinear(const IrisImage& image, int target_width,
                          int target_height);

inline IrisImage resize_to_model(const IrisImage& image) {
  return resize_bilinear(image, kModelInputWidth, kModelInputHeight);
}

// Nearest-neighbor resize; keeps the mask strictly binary.
SegmentationMask resize_mask_nearest(const SegmentationMask& mask,
                                     int target_width, int target_height);

IrisImage flip_horizontal(const IrisImage& image);
SegmentationMask flip_horizontal(const SegmentationMask& mask);

}  // namespace segdense
