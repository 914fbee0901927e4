#include "cce/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "cce/detail/frame_kernel.hpp"

namespace cce {

void SubtractionParams::validate() const {
  if (!(k_v >= 0.0 && std::isfinite(k_v))) throw std::invalid_argument("k_v must be >= 0");
  if (!(k_b >= 0.0 && k_b <= 1.0)) throw std::invalid_argument("k_b must lie in [0, 1]");
}

LinearRgb subtraction_compensation(const LinearRgb& display, const LinearRgb& background,
                                   const SubtractionParams& p) {
  return clamp_to_gamut({p.k_v * display.r - p.k_b * background.r,
                         p.k_v * display.g - p.k_b * background.g,
                         p.k_v * display.b - p.k_b * background.b});
}

ScaledLab luminance_chroma_candidate(const ScaledLab& display, const ShiftDecomposition& d) {
  if (d.degenerate) return display;
  const Vec3 luminance{d.dl, 0.0, 0.0};
  if (d.chroma.achromatic) return display + d.dc + luminance;
  const double c = chroma(display);
  const Vec3 radial{0.0, display.y / c, display.z / c};
  return display + radial * d.dc.norm() + luminance;
}

ScaledLab opposite_hue_candidate(const ScaledLab& display, const ShiftDecomposition& d) {
  if (d.degenerate) return display;
  const Vec3 mirrored = d.chroma.along_chroma * d.chroma.gate - d.chroma.hue;
  return display + mirrored + Vec3{d.dl, 0.0, 0.0};
}

namespace {

template <class Candidate>
ScaledLab constrained(const ScaledLab& display, const ScaledLab& background, const EnhanceParams& p,
                      Candidate&& candidate) {
  const ShiftDecomposition d = decompose_shift(display, background, p);
  if (d.degenerate) return display;
  return resolve_jnd(display, candidate(display, d), project_to_ball(background),
                     p.lambda_jnd_scaled, solution_radius(display), p.epsilon)
      .point;
}

template <class Method>
RasterImage scaled_frame(const RasterImage& virtual_image, const LinearImage& background,
                         const FovMapping& mapping, const EnhanceParams& p, unsigned workers,
                         Method&& method) {
  p.validate();
  return detail::transform_foreground(
      virtual_image, background, mapping, workers,
      [&, cache = detail::DisplayColorCache{}](Srgb8 v, const LinearRgb& bg) mutable {
        const ScaledLab best = method(cache(v), lab_to_scaled(linear_to_lab(bg)), p);
        return linear_to_srgb(lab_to_linear(scaled_to_lab(best)), v.a);
      });
}

}  // namespace

ScaledLab luminance_chroma_shift(const ScaledLab& display, const ScaledLab& background,
                                 const EnhanceParams& p) {
  return constrained(display, background, p, luminance_chroma_candidate);
}

ScaledLab opposite_hue_shift(const ScaledLab& display, const ScaledLab& background,
                             const EnhanceParams& p) {
  return constrained(display, background, p, opposite_hue_candidate);
}

RasterImage subtraction_frame(const RasterImage& virtual_image, const LinearImage& background,
                              const FovMapping& mapping, const SubtractionParams& p,
                              unsigned workers) {
  p.validate();
  return detail::transform_foreground(
      virtual_image, background, mapping, workers, [&p](Srgb8 v, const LinearRgb& bg) {
        return linear_to_srgb(subtraction_compensation(srgb_to_linear(v), bg, p), v.a);
      });
}

RasterImage luminance_chroma_frame(const RasterImage& virtual_image, const LinearImage& background,
                                   const FovMapping& mapping, const EnhanceParams& p,
                                   unsigned workers) {
  return scaled_frame(virtual_image, background, mapping, p, workers, luminance_chroma_shift);
}

RasterImage opposite_hue_frame(const RasterImage& virtual_image, const LinearImage& background,
                               const FovMapping& mapping, const EnhanceParams& p,
                               unsigned workers) {
  return scaled_frame(virtual_image, background, mapping, p, workers, opposite_hue_shift);
}

}  // namespace cce
