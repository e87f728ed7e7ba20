#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segdense/image.hpp"

namespace segdense {

// 8-bit single-channel PNG in, IrisImage out. Rejects color, palette and
// 16-bit files instead of silently converting.
IrisImage read_image_png(const std::string& path);
void write_image_png(const IrisImage& image, const std::string& path);

// Masks are stored on disk as {0, 255} and mapped to {0, 1} in memory.
SegmentationMask read_mask_png(const std::string& path);
void write_mask_png(const SegmentationMask& mask, const std::string& path);

// Interleaved RGB, row-major, 3 bytes per pixel.
void write_rgb_png(const std::vector<std::uint8_t>& rgb, int width, int height,
                   const std::string& path);

}  // namespace segdense
