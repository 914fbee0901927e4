#pragma once

// Per-pixel constrained search for the display color that maximizes contrast
// against the blurred background, in the scaled unit-ball LAB space.
//
// Given display color D and background B:
//   I   = -B / |B|                         farthest point of the ball from B
//   DE  = min(|I - D|, lambda_e) norm(I-D)  color-difference budget
//   DC  = chroma-gated projection of DE onto the a*b* plane
//   DL  = (1 - |cos theta_l|) * DE.x       luminance attenuation
//   P   = D + DC + DL, then pushed out of the JND sphere around B.

#include "cce/color.hpp"
#include "cce/image.hpp"
#include "cce/preprocess.hpp"

namespace cce {

inline constexpr double kJndUnscaled = 2.3;

struct EnhanceParams {
  /// Scaled color-difference budget; 0 disables enhancement, 2 is the
  /// diameter of the unit ball.
  double lambda_e = 0.4;
  /// Scaled JND radius around the background color.
  double lambda_jnd_scaled = kJndUnscaled / kScaleAb;
  /// Length below which a direction is treated as undefined.
  double epsilon = 1e-9;

  void validate() const;
};

struct IdealPoint {
  ScaledLab point;
  bool degenerate = false;  // background at the ball center
};

IdealPoint ideal_point(const ScaledLab& background, double epsilon = 1e-9);

/// DE: the shift from D toward I, clamped to length lambda_e. Zero when
/// D and I coincide.
Vec3 clamp_shift(const ScaledLab& display, const ScaledLab& ideal, double lambda_e,
                 double epsilon = 1e-9);

/// Chromatic-plane part of a shift split relative to the chroma direction of
/// the display color.
struct ChromaSplit {
  Vec3 planar;        // DE' (x component dropped)
  Vec3 along_chroma;  // DE'_ch, parallel to (0, D.y, D.z)
  Vec3 hue;           // DE'_h = DE' - DE'_ch
  double gate = 1.0;  // t_ch: 0 when the shift would reduce chroma
  bool achromatic = false;

  Vec3 constrained() const { return along_chroma * gate + hue; }
};

ChromaSplit split_chroma(const ScaledLab& display, const Vec3& shift, double epsilon = 1e-9);

/// DC. For an achromatic display color the planar shift passes unchanged.
Vec3 chroma_constrained_shift(const ScaledLab& display, const Vec3& shift, double epsilon = 1e-9);

/// DL as a signed length along the luminance axis.
double luminance_constrained_shift(const Vec3& shift);

struct ShiftDecomposition {
  Vec3 e;  // DE
  ChromaSplit chroma;
  Vec3 dc;
  double dl = 0.0;
  /// No usable direction: background at the center, D == I, or a zero
  /// budget. The display color passes through.
  bool degenerate = false;

  ScaledLab proposed(const ScaledLab& display) const { return display + dc + Vec3{dl, 0.0, 0.0}; }
};

ShiftDecomposition decompose_shift(const ScaledLab& display, const ScaledLab& background,
                                   const EnhanceParams& p);

enum class JndOutcome {
  kInactive,            // candidate already at least r from B
  kIntersected,         // moved to the far-side exit of line DP through the sphere
  kDegenerateFallback,  // P == D: moved radially away from B (or along +a if D == B)
};

struct JndResult {
  ScaledLab point;
  JndOutcome outcome = JndOutcome::kInactive;
  /// The point left the solution ball and was brought back onto it.
  bool projected = false;
};

/// Enforces dist(P, B) >= r and |P| <= ball_radius.
JndResult resolve_jnd(const ScaledLab& display, const ScaledLab& candidate,
                      const ScaledLab& background, double radius, double ball_radius = 1.0,
                      double epsilon = 1e-9);

inline ScaledLab apply_jnd(const ScaledLab& display, const ScaledLab& candidate,
                           const ScaledLab& background, double radius) {
  return resolve_jnd(display, candidate, background, radius).point;
}

/// Radius of the solution ball for a display color: the unit ball, widened
/// just enough to contain display colors that already lie outside it.
inline double solution_radius(const ScaledLab& display) { return std::max(1.0, display.norm()); }

ScaledLab optimize_color(const ScaledLab& display, const ScaledLab& background,
                         const EnhanceParams& p);

/// Runs optimize_color over every foreground pixel of the virtual image.
/// The background is the blurred, attenuated capture frame; each display
/// pixel fetches its sample through the FoV mapping. Non-foreground pixels
/// and alpha pass through unchanged.
RasterImage enhance_frame(const RasterImage& virtual_image, const LinearImage& blurred_background,
                          const FovMapping& mapping, const EnhanceParams& p, unsigned workers = 0);
RasterImage enhance_frame(const RasterImage& virtual_image, const RasterImage& blurred_background,
                          const FovMapping& mapping, const EnhanceParams& p, unsigned workers = 0);

}  // namespace cce
