#pragma once

// Simulated additive blending and the enhanced-pixel metric.

#include <cstddef>
#include <map>
#include <string>

#include "cce/image.hpp"

namespace cce {

/// l_bl = l_d + l_b per channel, clamped at 1.
LinearRgb blend(const LinearRgb& display, const LinearRgb& background);

/// What the wearer sees: display light (scaled by alpha, zero off the
/// foreground) added to the display-frame background.
RasterImage blend_frame(const RasterImage& display, const LinearImage& background_in_display);

/// A foreground pixel is enhanced when its new color is farther from the
/// background than the original was and differs from the original by at
/// least the JND (all in unscaled CIELAB). Throws std::invalid_argument on
/// size mismatch.
Mask enhanced_mask(const LinearImage& background, const RasterImage& original,
                   const RasterImage& optimized, double jnd_unscaled = 2.3);
Mask enhanced_mask(const RasterImage& background, const RasterImage& original,
                   const RasterImage& optimized, double jnd_unscaled = 2.3);

/// 100 * |mask & fg| / |fg|; 0 when fg is empty.
double enhancement_percentage(const Mask& mask, const Mask& foreground);

/// Masked pixels become opaque cyan.
RasterImage overlay_image(const RasterImage& blended, const Mask& mask);

struct MetricsReport {
  double enhanced_percent = 0.0;
  std::size_t foreground_pixel_count = 0;
  std::size_t enhanced_pixel_count = 0;
  /// Mean over foreground of dE(bg, optimized) - dE(bg, original).
  double mean_delta_e_gain = 0.0;
  /// Mean relative luminance (CIE Y) of the foreground display colors.
  double mean_display_luminance = 0.0;
  /// Stage name -> wall time in milliseconds.
  std::map<std::string, double> timing_ms;
};

MetricsReport compute_metrics(const LinearImage& background, const RasterImage& original,
                              const RasterImage& optimized, double jnd_unscaled = 2.3);

}  // namespace cce
