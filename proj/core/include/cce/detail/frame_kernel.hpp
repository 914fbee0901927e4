#pragma once

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cce/image.hpp"
#include "cce/parallel.hpp"
#include "cce/preprocess.hpp"

namespace cce::detail {

struct AxisTap {
  int lo;
  int hi;
  double frac;
};

// Bilinear taps for every display column (or row) through one axis of the
// FoV mapping; matches sample_bilinear on the mapped coordinate.
inline std::vector<AxisTap> axis_taps(int display_extent, int source_extent, double scale,
                                      double offset) {
  std::vector<AxisTap> taps(static_cast<std::size_t>(display_extent));
  for (int k = 0; k < display_extent; ++k) {
    const double coord = (texel_center(k, display_extent) - offset) / scale;
    const double pos =
        std::clamp(std::clamp(coord, 0.0, 1.0) * source_extent - 0.5, 0.0, source_extent - 1.0);
    const int lo = static_cast<int>(pos);
    taps[static_cast<std::size_t>(k)] = {lo, std::min(lo + 1, source_extent - 1), pos - lo};
  }
  return taps;
}

// Scaled LAB of the most recent display color; virtual content is mostly
// runs of identical pixels.
class DisplayColorCache {
 public:
  const ScaledLab& operator()(Srgb8 c) {
    if (!valid_ || c.r != last_.r || c.g != last_.g || c.b != last_.b) {
      last_ = c;
      value_ = srgb8_to_scaled(c);
      valid_ = true;
    }
    return value_;
  }

 private:
  Srgb8 last_{};
  ScaledLab value_{};
  bool valid_ = false;
};

// Applies fn(Srgb8 display, LinearRgb background) -> Srgb8 to every
// foreground pixel; other pixels are copied through. Each row chunk works
// on its own copy of fn, so fn may carry per-thread state.
template <class PixelFn>
RasterImage transform_foreground(const RasterImage& virtual_image, const LinearImage& background,
                                 const FovMapping& mapping, unsigned workers, PixelFn&& fn) {
  mapping.validate();
  const int w = virtual_image.width;
  const int h = virtual_image.height;
  const auto cols = axis_taps(w, background.width, mapping.s_u, mapping.b_u);
  const auto rows = axis_taps(h, background.height, mapping.s_v, mapping.b_v);
  RasterImage out = virtual_image;
  const bool has_alpha = virtual_image.has_alpha;

  parallel_rows(h, workers, [&](int y0, int y1) {
    std::decay_t<PixelFn> local = fn;
    for (int y = y0; y < y1; ++y) {
      const AxisTap ty = rows[static_cast<std::size_t>(y)];
      const LinearPixel* row0 = &background.pixels[static_cast<std::size_t>(ty.lo) * background.width];
      const LinearPixel* row1 = &background.pixels[static_cast<std::size_t>(ty.hi) * background.width];
      for (int x = 0; x < w; ++x) {
        const Srgb8 v = virtual_image.at(x, y);
        if (!is_foreground(v, has_alpha)) continue;
        const AxisTap tx = cols[static_cast<std::size_t>(x)];
        const double w00 = (1.0 - tx.frac) * (1.0 - ty.frac);
        const double w10 = tx.frac * (1.0 - ty.frac);
        const double w01 = (1.0 - tx.frac) * ty.frac;
        const double w11 = tx.frac * ty.frac;
        const LinearPixel& p00 = row0[tx.lo];
        const LinearPixel& p10 = row0[tx.hi];
        const LinearPixel& p01 = row1[tx.lo];
        const LinearPixel& p11 = row1[tx.hi];
        const LinearRgb bg{w00 * p00.r + w10 * p10.r + w01 * p01.r + w11 * p11.r,
                           w00 * p00.g + w10 * p10.g + w01 * p01.g + w11 * p11.g,
                           w00 * p00.b + w10 * p10.b + w01 * p01.b + w11 * p11.b};
        out.at(x, y) = local(v, bg);
      }
    }
  });
  return out;
}

}  // namespace cce::detail
