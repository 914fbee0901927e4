#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cce/color.hpp"

namespace cce {

/// Row-major 8-bit sRGB raster. has_alpha records whether the source carried
/// an alpha channel; pixels without one keep a = 255.
struct RasterImage {
  int width = 0;
  int height = 0;
  bool has_alpha = false;
  std::vector<Srgb8> pixels;

  RasterImage() = default;
  RasterImage(int w, int h, bool alpha = false, Srgb8 fill = {})
      : width(w), height(h), has_alpha(alpha) {
    if (w < 1 || h < 1) throw std::invalid_argument("RasterImage: dimensions must be >= 1");
    pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
  }

  std::size_t size() const { return pixels.size(); }
  Srgb8& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  const Srgb8& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

struct LinearPixel {
  float r = 0.0f;
  float g = 0.0f;
  float b = 0.0f;
};

/// Linear-light working image; float storage keeps background frames
/// compact while sampling returns double precision.
struct LinearImage {
  int width = 0;
  int height = 0;
  std::vector<LinearPixel> pixels;

  LinearImage() = default;
  LinearImage(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("LinearImage: dimensions must be >= 1");
    pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), LinearPixel{});
  }

  LinearPixel& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  const LinearPixel& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

inline LinearRgb to_linear_rgb(const LinearPixel& p) { return {p.r, p.g, p.b}; }

/// Boolean grid aligned with an image.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;

  Mask() = default;
  Mask(int w, int h, bool fill = false)
      : width(w), height(h), values(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill ? 1 : 0) {}

  bool operator()(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { values[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto v : values) n += v != 0;
    return n;
  }

  friend bool operator==(const Mask&, const Mask&) = default;
};

/// Foreground convention: alpha > 0 when the image has alpha, otherwise any
/// non-black pixel (black is transparent on an additive display).
inline bool is_foreground(const Srgb8& p, bool has_alpha) {
  return has_alpha ? p.a > 0 : (p.r | p.g | p.b) != 0;
}

Mask foreground_mask(const RasterImage& img);

/// Decodes to linear light, multiplying every channel by gain.
LinearImage to_linear_image(const RasterImage& img, double gain = 1.0);
RasterImage to_raster_image(const LinearImage& img);

}  // namespace cce
