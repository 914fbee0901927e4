#include "cce/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace cce {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kOurs: return "ours";
    case Method::kSubtract: return "subtract";
    case Method::kLuminanceChroma: return "lumchroma";
    case Method::kOppositeHue: return "opposite-hue";
    case Method::kNone: return "none";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kOurs, Method::kSubtract, Method::kLuminanceChroma, Method::kOppositeHue,
                   Method::kNone}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

void PipelineConfig::validate() const {
  enhance.validate();
  blur.validate();
  fov.validate();
  subtraction.validate();
  if (!(attenuation >= 0.0 && attenuation <= 1.0)) {
    throw std::invalid_argument("attenuation must lie in [0, 1]");
  }
  if (!(jnd_unscaled >= 0.0 && std::isfinite(jnd_unscaled))) {
    throw std::invalid_argument("evaluation JND must be finite and non-negative");
  }
}

LinearImage prepare_background(const RasterImage& background, double gain, const BlurParams& blur,
                               unsigned workers) {
  return gaussian_blur(to_linear_image(background, gain), blur, workers);
}

RasterImage apply_method(Method method, const RasterImage& virtual_image,
                         const LinearImage& blurred_background, const PipelineConfig& cfg) {
  switch (method) {
    case Method::kOurs:
      return enhance_frame(virtual_image, blurred_background, cfg.fov, cfg.enhance, cfg.workers);
    case Method::kSubtract:
      return subtraction_frame(virtual_image, blurred_background, cfg.fov, cfg.subtraction,
                               cfg.workers);
    case Method::kLuminanceChroma:
      return luminance_chroma_frame(virtual_image, blurred_background, cfg.fov, cfg.enhance,
                                    cfg.workers);
    case Method::kOppositeHue:
      return opposite_hue_frame(virtual_image, blurred_background, cfg.fov, cfg.enhance,
                                cfg.workers);
    case Method::kNone:
      return virtual_image;
  }
  throw std::invalid_argument("unknown method");
}

FrameResult process_frame(const RasterImage& virtual_image, const RasterImage& background,
                          Method method, const PipelineConfig& cfg) {
  cfg.validate();
  const double gain = 1.0 - cfg.attenuation;
  FrameResult result;
  auto& timing = result.metrics.timing_ms;
  const auto start = Clock::now();

  auto t = Clock::now();
  const LinearImage blurred =
      prepare_background(background, method == Method::kSubtract ? 1.0 : gain, cfg.blur, cfg.workers);
  timing["preprocess"] = elapsed_ms(t);

  t = Clock::now();
  result.display = apply_method(method, virtual_image, blurred, cfg);
  timing["optimize"] = elapsed_ms(t);
  timing["display_path"] = timing["preprocess"] + timing["optimize"];

  t = Clock::now();
  const int w = virtual_image.width;
  const int h = virtual_image.height;
  // The wearer sees the real scene sharp; only the optimizer uses the blur.
  const LinearImage seen = resample_to_display(to_linear_image(background, gain), w, h, cfg.fov,
                                               cfg.workers);
  result.blended = blend_frame(result.display, seen);
  timing["blend"] = elapsed_ms(t);

  t = Clock::now();
  const LinearImage blurred_seen =
      method == Method::kSubtract ? attenuate(blurred, cfg.attenuation) : blurred;
  const LinearImage reference = resample_to_display(blurred_seen, w, h, cfg.fov, cfg.workers);
  result.foreground = foreground_mask(virtual_image);
  result.enhanced = enhanced_mask(reference, virtual_image, result.display, cfg.jnd_unscaled);
  auto timings = std::move(timing);
  result.metrics = compute_metrics(reference, virtual_image, result.display, cfg.jnd_unscaled);
  result.metrics.timing_ms = std::move(timings);
  result.metrics.timing_ms["evaluate"] = elapsed_ms(t);
  result.metrics.timing_ms["total"] = elapsed_ms(start);
  return result;
}

}  // namespace cce
