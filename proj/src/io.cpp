#include "segdense/io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <stdexcept>

namespace segdense {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

// Reads an 8-bit single-channel PNG into `pixels`.
void read_gray8(const std::string& path, int& width, int& height,
                std::vector<std::uint8_t>& pixels) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw std::runtime_error("cannot open PNG for reading: " + path);

  PngReader r;
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!r.png) throw std::runtime_error("png_create_read_struct failed");
  r.info = png_create_info_struct(r.png);
  if (!r.info) throw std::runtime_error("png_create_info_struct failed");
  if (setjmp(png_jmpbuf(r.png))) {
    throw std::runtime_error("failed to decode PNG: " + path);
  }
  png_init_io(r.png, file.get());
  png_read_info(r.png, r.info);

  width = static_cast<int>(png_get_image_width(r.png, r.info));
  height = static_cast<int>(png_get_image_height(r.png, r.info));
  const int color_type = png_get_color_type(r.png, r.info);
  const int bit_depth = png_get_bit_depth(r.png, r.info);
  if (color_type != PNG_COLOR_TYPE_GRAY || bit_depth != 8) {
    throw std::runtime_error("expected 8-bit single-channel PNG: " + path);
  }

  pixels.assign(static_cast<std::size_t>(width) * height, 0);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) {
    rows[y] = pixels.data() + static_cast<std::size_t>(y) * width;
  }
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
}

void write_png(const std::string& path, int width, int height, int color_type,
               const std::uint8_t* data, std::size_t row_bytes) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw std::runtime_error("cannot open PNG for writing: " + path);

  PngWriter w;
  w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!w.png) throw std::runtime_error("png_create_write_struct failed");
  w.info = png_create_info_struct(w.png);
  if (!w.info) throw std::runtime_error("png_create_info_struct failed");
  if (setjmp(png_jmpbuf(w.png))) {
    throw std::runtime_error("failed to encode PNG: " + path);
  }
  png_init_io(w.png, file.get());
  png_set_IHDR(w.png, w.info, width, height, 8, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(data + static_cast<std::size_t>(y) * row_bytes);
  }
  png_write_image(w.png, rows.data());
  png_write_end(w.png, nullptr);
}

}  // namespace

IrisImage read_image_png(const std::string& path) {
  IrisImage image;
  read_gray8(path, image.width, image.height, image.pixels);
  image.validate();
  return image;
}

void write_image_png(const IrisImage& image, const std::string& path) {
  image.validate();
  write_png(path, image.width, image.height, PNG_COLOR_TYPE_GRAY,
            image.pixels.data(), static_cast<std::size_t>(image.width));
}

SegmentationMask read_mask_png(const std::string& path) {
  SegmentationMask mask;
  read_gray8(path, mask.width, mask.height, mask.pixels);
  for (auto& v : mask.pixels) {
    if (v == 0) continue;
    if (v == 255) {
      v = 1;
    } else {
      throw std::runtime_error("mask PNG must use {0,255} values: " + path);
    }
  }
  return mask;
}

void write_mask_png(const SegmentationMask& mask, const std::string& path) {
  mask.validate();
  std::vector<std::uint8_t> bytes(mask.pixels.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = mask.pixels[i] ? 255 : 0;
  }
  write_png(path, mask.width, mask.height, PNG_COLOR_TYPE_GRAY, bytes.data(),
            static_cast<std::size_t>(mask.width));
}

void write_rgb_png(const std::vector<std::uint8_t>& rgb, int width, int height,
                   const std::string& path) {
  if (rgb.size() != static_cast<std::size_t>(width) * height * 3) {
    throw std::invalid_argument("RGB buffer size does not match dimensions");
  }
  write_png(path, width, height, PNG_COLOR_TYPE_RGB, rgb.data(),
            static_cast<std::size_t>(width) * 3);
}

}  // namespace segdense
