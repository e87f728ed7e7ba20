#include "segdense/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace segdense {

void IrisImage::validate() const {
  if (width < kMinImageExtent || height < kMinImageExtent) {
    throw std::invalid_argument("image must be at least " +
                                std::to_string(kMinImageExtent) + "x" +
                                std::to_string(kMinImageExtent) + ", got " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
  if (pixels.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("image pixel buffer does not match dimensions");
  }
}

std::size_t SegmentationMask::foreground_count() const {
  std::size_t count = 0;
  for (std::uint8_t v : pixels) count += v;
  return count;
}

void SegmentationMask::validate() const {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("mask has empty dimensions");
  }
  if (pixels.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("mask pixel buffer does not match dimensions");
  }
  for (std::uint8_t v : pixels) {
    if (v > 1) {
      throw std::invalid_argument("mask pixel out of {0,1}: " +
                                  std::to_string(static_cast<int>(v)));
    }
  }
}

IrisImage resize_bilinear(const IrisImage& image, int target_width,
                          int target_height) {
  image.validate();
  if (target_width <= 0 || target_height <= 0) {
    throw std::invalid_argument("resize target must be positive");
  }
  IrisImage out(target_width, target_height);
  const double scale_x = static_cast<double>(image.width) / target_width;
  const double scale_y = static_cast<double>(image.height) / target_height;
  for (int y = 0; y < target_height; ++y) {
    const double sy = (y + 0.5) * scale_y - 0.5;
    const int y0 = static_cast<int>(std::floor(sy));
    const double fy = sy - y0;
    const int y0c = std::clamp(y0, 0, image.height - 1);
    const int y1c = std::clamp(y0 + 1, 0, image.height - 1);
    for (int x = 0; x < target_width; ++x) {
      const double sx = (x + 0.5) * scale_x - 0.5;
      const int x0 = static_cast<int>(std::floor(sx));
      const double fx = sx - x0;
      const int x0c = std::clamp(x0, 0, image.width - 1);
      const int x1c = std::clamp(x0 + 1, 0, image.width - 1);
      const double top = (1.0 - fx) * image.at(x0c, y0c) + fx * image.at(x1c, y0c);
      const double bot = (1.0 - fx) * image.at(x0c, y1c) + fx * image.at(x1c, y1c);
      const double v = (1.0 - fy) * top + fy * bot;
      const double rounded = std::floor(v + 0.5);
      out.at(x, y) = static_cast<std::uint8_t>(std::clamp(rounded, 0.0, 255.0));
    }
  }
  return out;
}

SegmentationMask resize_mask_nearest(const SegmentationMask& mask,
                                     int target_width, int target_height) {
  mask.validate();
  if (target_width <= 0 || target_height <= 0) {
    throw std::invalid_argument("resize target must be positive");
  }
  SegmentationMask out(target_width, target_height);
  const double scale_x = static_cast<double>(mask.width) / target_width;
  const double scale_y = static_cast<double>(mask.height) / target_height;
  for (int y = 0; y < target_height; ++y) {
    const int sy = std::clamp(static_cast<int>(std::floor((y + 0.5) * scale_y)),
                              0, mask.height - 1);
    for (int x = 0; x < target_width; ++x) {
      const int sx = std::clamp(static_cast<int>(std::floor((x + 0.5) * scale_x)),
                                0, mask.width - 1);
      out.at(x, y) = mask.at(sx, sy);
    }
  }
  return out;
}

IrisImage flip_horizontal(const IrisImage& image) {
  IrisImage out(image.width, image.height);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      out.at(x, y) = image.at(image.width - 1 - x, y);
    }
  }
  return out;
}

SegmentationMask flip_horizontal(const SegmentationMask& mask) {
  SegmentationMask out(mask.width, mask.height);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      out.at(x, y) = mask.at(mask.width - 1 - x, y);
    }
  }
  return out;
}

}  // namespace segdense
