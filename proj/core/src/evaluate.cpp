#include "cce/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

#include "cce/color.hpp"

namespace cce {

LinearRgb blend(const LinearRgb& display, const LinearRgb& background) {
  return {std::min(display.r + background.r, 1.0), std::min(display.g + background.g, 1.0),
          std::min(display.b + background.b, 1.0)};
}

namespace {

void require_same_size(int w0, int h0, int w1, int h1, const char* what) {
  if (w0 != w1 || h0 != h1) throw std::invalid_argument(std::string(what) + ": image size mismatch");
}

LinearRgb emitted_light(const Srgb8& p, bool has_alpha) {
  if (!is_foreground(p, has_alpha)) return {};
  const LinearRgb c = srgb_to_linear(p);
  const double coverage = has_alpha ? p.a / 255.0 : 1.0;
  return {c.r * coverage, c.g * coverage, c.b * coverage};
}

}  // namespace

RasterImage blend_frame(const RasterImage& display, const LinearImage& background_in_display) {
  require_same_size(display.width, display.height, background_in_display.width,
                    background_in_display.height, "blend_frame");
  RasterImage out(display.width, display.height);
  for (std::size_t k = 0; k < display.pixels.size(); ++k) {
    const LinearRgb bl = blend(emitted_light(display.pixels[k], display.has_alpha),
                               to_linear_rgb(background_in_display.pixels[k]));
    out.pixels[k] = linear_to_srgb(bl);
  }
  return out;
}

Mask enhanced_mask(const LinearImage& background, const RasterImage& original,
                   const RasterImage& optimized, double jnd_unscaled) {
  require_same_size(background.width, background.height, original.width, original.height,
                    "enhanced_mask");
  require_same_size(original.width, original.height, optimized.width, optimized.height,
                    "enhanced_mask");
  Mask mask(original.width, original.height);
  for (std::size_t k = 0; k < original.pixels.size(); ++k) {
    const Srgb8& d = original.pixels[k];
    if (!is_foreground(d, original.has_alpha)) continue;
    const Lab lb = linear_to_lab(to_linear_rgb(background.pixels[k]));
    const Lab ld = srgb8_to_lab(d);
    const Lab lo = srgb8_to_lab(optimized.pixels[k]);
    mask.values[k] = (delta_e(lb, lo) > delta_e(lb, ld) && delta_e(lo, ld) >= jnd_unscaled) ? 1 : 0;
  }
  return mask;
}

Mask enhanced_mask(const RasterImage& background, const RasterImage& original,
                   const RasterImage& optimized, double jnd_unscaled) {
  return enhanced_mask(to_linear_image(background), original, optimized, jnd_unscaled);
}

double enhancement_percentage(const Mask& mask, const Mask& foreground) {
  require_same_size(mask.width, mask.height, foreground.width, foreground.height,
                    "enhancement_percentage");
  std::size_t fg = 0;
  std::size_t hit = 0;
  for (std::size_t k = 0; k < foreground.values.size(); ++k) {
    if (!foreground.values[k]) continue;
    ++fg;
    hit += mask.values[k] != 0;
  }
  return fg == 0 ? 0.0 : 100.0 * static_cast<double>(hit) / static_cast<double>(fg);
}

RasterImage overlay_image(const RasterImage& blended, const Mask& mask) {
  require_same_size(blended.width, blended.height, mask.width, mask.height, "overlay_image");
  RasterImage out = blended;
  for (std::size_t k = 0; k < out.pixels.size(); ++k) {
    if (mask.values[k]) out.pixels[k] = {0, 255, 255, 255};
  }
  return out;
}

MetricsReport compute_metrics(const LinearImage& background, const RasterImage& original,
                              const RasterImage& optimized, double jnd_unscaled) {
  const Mask mask = enhanced_mask(background, original, optimized, jnd_unscaled);
  const Mask fg = foreground_mask(original);
  MetricsReport r;
  r.foreground_pixel_count = fg.count();
  r.enhanced_pixel_count = mask.count();
  r.enhanced_percent = enhancement_percentage(mask, fg);
  double gain = 0.0;
  double luminance = 0.0;
  for (std::size_t k = 0; k < fg.values.size(); ++k) {
    if (!fg.values[k]) continue;
    const Lab lb = linear_to_lab(to_linear_rgb(background.pixels[k]));
    gain += delta_e(lb, srgb8_to_lab(optimized.pixels[k])) -
            delta_e(lb, srgb8_to_lab(original.pixels[k]));
    luminance += relative_luminance(srgb_to_linear(optimized.pixels[k]));
  }
  if (r.foreground_pixel_count > 0) {
    const auto n = static_cast<double>(r.foreground_pixel_count);
    r.mean_delta_e_gain = gain / n;
    r.mean_display_luminance = luminance / n;
  }
  return r;
}

}  // namespace cce
