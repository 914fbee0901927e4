#pragma once

// Background preparation: Gaussian blur standing in for the unfocused
// peripheral view, FoV calibration between capture and display frames, and
// luminance attenuation through the combiner.

#include <vector>

#include "cce/image.hpp"

namespace cce {

struct BlurParams {
  int kernel_size = 3;
  double sigma = 1.5;

  /// Throws std::invalid_argument unless kernel_size is odd positive and
  /// sigma is finite positive.
  void validate() const;
};

/// Normalized 1-D taps of G; the 2-D kernel is their outer product.
std::vector<double> gaussian_taps(const BlurParams& p);

/// Separable Gaussian convolution with clamp-to-edge borders. The RasterImage
/// overload decodes to linear light, filters, and re-encodes; alpha is kept.
RasterImage gaussian_blur(const RasterImage& img, const BlurParams& p, unsigned workers = 0);
LinearImage gaussian_blur(const LinearImage& img, const BlurParams& p, unsigned workers = 0);

/// Affine texture-coordinate map from background capture (i, j) to display
/// frame (u, v): u = s_u * i + b_u, v = s_v * j + b_v. Coordinates are
/// normalized with v growing downward along image rows.
struct FovMapping {
  double s_u = 0.65;
  double s_v = 0.65;
  double b_u = 0.13;
  double b_v = 0.17;

  static FovMapping identity() { return {1.0, 1.0, 0.0, 0.0}; }

  /// Throws std::invalid_argument unless both scales are positive and the
  /// mapped rectangle overlaps [0,1]^2.
  void validate() const;
};

struct BackgroundCoord {
  double i = 0.0;
  double j = 0.0;
  bool in_coverage = true;
};

/// (i, j) -> (u, v).
BackgroundCoord map_background_to_frame(double i, double j, const FovMapping& m);

/// (u, v) -> (i, j); in_coverage is false when the result leaves [0,1]^2.
/// The returned coordinates are not clamped.
BackgroundCoord map_frame_to_background(double u, double v, const FovMapping& m);

/// Bilinear interpolation in linear light. (i, j) are clamped to [0,1]^2;
/// texel k spans [k/W, (k+1)/W) with its center at (k + 0.5)/W.
LinearRgb sample_bilinear(const LinearImage& img, double i, double j);
LinearRgb sample_bilinear(const RasterImage& img, double i, double j);

/// Scales linear light by (1 - attenuation); attenuation in [0,1].
RasterImage attenuate(const RasterImage& img, double attenuation);
LinearImage attenuate(const LinearImage& img, double attenuation);

/// Resamples a capture-frame background onto a width x height display grid
/// through the FoV mapping; uncovered pixels clamp to the nearest edge.
LinearImage resample_to_display(const LinearImage& background, int width, int height,
                                const FovMapping& m, unsigned workers = 0);

/// Normalized texture coordinate of the center of display column/row k.
inline double texel_center(int k, int extent) { return (k + 0.5) / extent; }

}  // namespace cce
