#pragma once

// Reference enhancements used for comparison: background subtraction, a
// luminance-and-chroma-only shift, and the mirrored hue shift.

#include "cce/optimizer.hpp"

namespace cce {

struct SubtractionParams {
  double k_v = 1.0;  // display gain
  double k_b = 0.4;  // lens transparency

  void validate() const;
};

/// max(0, k_v * d - k_b * bg) per channel, clamped to gamut.
LinearRgb subtraction_compensation(const LinearRgb& display, const LinearRgb& background,
                                   const SubtractionParams& p);

/// Same budget and luminance term as optimize_color, but the whole chromatic
/// shift |DC| is redirected radially outward along the display color's
/// chroma direction. Achromatic display colors keep the optimizer's shift.
ScaledLab luminance_chroma_shift(const ScaledLab& display, const ScaledLab& background,
                                 const EnhanceParams& p);

/// optimize_color with the hue component DE'_h negated: same luminance and
/// chroma, mirrored hue.
ScaledLab opposite_hue_shift(const ScaledLab& display, const ScaledLab& background,
                             const EnhanceParams& p);

/// Candidates before the JND and ball constraints.
ScaledLab luminance_chroma_candidate(const ScaledLab& display, const ShiftDecomposition& d);
ScaledLab opposite_hue_candidate(const ScaledLab& display, const ShiftDecomposition& d);

/// Frame-level counterparts of enhance_frame. The background is the
/// blurred, attenuated capture frame, fetched through the FoV mapping.
RasterImage subtraction_frame(const RasterImage& virtual_image, const LinearImage& background,
                              const FovMapping& mapping, const SubtractionParams& p,
                              unsigned workers = 0);
RasterImage luminance_chroma_frame(const RasterImage& virtual_image, const LinearImage& background,
                                   const FovMapping& mapping, const EnhanceParams& p,
                                   unsigned workers = 0);
RasterImage opposite_hue_frame(const RasterImage& virtual_image, const LinearImage& background,
                               const FovMapping& mapping, const EnhanceParams& p,
                               unsigned workers = 0);

}  // namespace cce
