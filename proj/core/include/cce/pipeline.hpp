#pragma once

// One simulated frame end to end: prepare the background, recolor the
// virtual content with the selected method, blend, and score.

#include <optional>
#include <string_view>

#include "cce/baselines.hpp"
#include "cce/evaluate.hpp"
#include "cce/optimizer.hpp"
#include "cce/preprocess.hpp"

namespace cce {

enum class Method { kOurs, kSubtract, kLuminanceChroma, kOppositeHue, kNone };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct PipelineConfig {
  EnhanceParams enhance;
  BlurParams blur;
  FovMapping fov;
  /// Fraction of background luminance removed by the combiner.
  double attenuation = 0.6;
  SubtractionParams subtraction;
  /// JND for evaluation, unscaled CIELAB units.
  double jnd_unscaled = kJndUnscaled;
  unsigned workers = 0;

  void validate() const;
};

struct FrameResult {
  RasterImage display;  // what the display emits
  RasterImage blended;  // what the wearer perceives
  Mask foreground;
  Mask enhanced;
  MetricsReport metrics;
};

/// Blurred capture-frame background in linear light, scaled by gain.
LinearImage prepare_background(const RasterImage& background, double gain, const BlurParams& blur,
                               unsigned workers = 0);

/// Recolors the virtual image with `method` against a prepared background.
/// `blurred_background` must be prepared with gain 1 - attenuation, except
/// for kSubtract which expects gain 1 (k_b models the lens itself).
RasterImage apply_method(Method method, const RasterImage& virtual_image,
                         const LinearImage& blurred_background, const PipelineConfig& cfg);

/// Full frame. Stage timings land in metrics.timing_ms under "preprocess",
/// "optimize", "blend", "evaluate", "display_path" (preprocess + optimize)
/// and "total".
FrameResult process_frame(const RasterImage& virtual_image, const RasterImage& background,
                          Method method, const PipelineConfig& cfg);

}  // namespace cce
