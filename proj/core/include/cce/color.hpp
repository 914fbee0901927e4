#pragma once

// Color value types and conversions between display sRGB, linear light,
// CIE XYZ (D65, 2 degree observer), CIELAB and the scaled unit-ball LAB
// space the optimizer works in.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>

namespace cce {

struct Srgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 255;

  friend bool operator==(const Srgb8&, const Srgb8&) = default;
};

struct LinearRgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  friend bool operator==(const LinearRgb&, const LinearRgb&) = default;
};

struct Lab {
  double L = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Free vector in scaled LAB space (a shift between two colors).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }
};

/// Point in scaled LAB: x carries L*, y carries a*, z carries b*, each
/// mapped to [-1, 1]. Optimizer solutions live in the closed unit ball.
struct ScaledLab {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 as_vector() const { return {x, y, z}; }
  double norm() const { return as_vector().norm(); }

  friend constexpr ScaledLab operator+(const ScaledLab& p, const Vec3& v) {
    return {p.x + v.x, p.y + v.y, p.z + v.z};
  }
  friend constexpr Vec3 operator-(const ScaledLab& p, const ScaledLab& q) {
    return {p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend bool operator==(const ScaledLab&, const ScaledLab&) = default;
};

inline double distance(const ScaledLab& p, const ScaledLab& q) { return (p - q).norm(); }

// --- transfer functions -----------------------------------------------------

/// sRGB electro-optical transfer function on a normalized channel value.
inline double srgb_decode(double v) {
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

inline double srgb_encode(double v) {
  return v <= 0.0031308 ? v * 12.92 : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

namespace detail {

struct SrgbTables {
  std::array<double, 256> decode{};
  // threshold[k] is the smallest linear value that encodes to code k
  // (round-to-nearest); threshold[0] = -inf, threshold[256] = +inf.
  std::array<double, 257> threshold{};
  // coarse[i] is the code of linear value i / (kCoarse - 1).
  static constexpr int kCoarse = 4096;
  std::array<std::uint8_t, kCoarse> coarse{};

  SrgbTables();
};

extern const SrgbTables& srgb_tables();

// Cube root from a knot table on float bits plus one Newton step; relative
// error below 1e-12 on [2^-8, 4), falls back to std::cbrt elsewhere.
struct CbrtTable {
  static constexpr int kMantissaBits = 8;
  static constexpr int kMinExponent = -8;
  static constexpr int kMaxExponent = 2;
  static constexpr int kSize = (kMaxExponent - kMinExponent) << kMantissaBits;
  std::array<float, kSize> base{};
  std::array<float, kSize> slope{};

  CbrtTable();
};

extern const CbrtTable& cbrt_table();

inline double fast_cbrt(double x) {
  constexpr double kLo = 0.00390625;  // 2^-8
  constexpr double kHi = 4.0;
  if (!(x >= kLo && x < kHi)) return std::cbrt(x);
  const auto& t = cbrt_table();
  const float f = static_cast<float>(x);
  std::uint32_t bits;
  std::memcpy(&bits, &f, sizeof bits);
  constexpr int kShift = 23 - CbrtTable::kMantissaBits;
  const int index = static_cast<int>(bits >> kShift) -
                    ((127 + CbrtTable::kMinExponent) << CbrtTable::kMantissaBits);
  const float frac = static_cast<float>(bits & ((1u << kShift) - 1u)) * (1.0f / (1u << kShift));
  const double y = static_cast<double>(t.base[index]) + static_cast<double>(frac * t.slope[index]);
  return (2.0 * y + x / (y * y)) * (1.0 / 3.0);
}

// sRGB primaries, D65 white. Rows of kRgbToXyz are pre-divided by the
// white point so that linear (1,1,1) maps to exactly (1,1,1) in X/Xn etc.
inline constexpr double kXn = 0.4124564 + 0.3575761 + 0.1804375;
inline constexpr double kYn = 0.2126729 + 0.7151522 + 0.0721750;
inline constexpr double kZn = 0.0193339 + 0.1191920 + 0.9503041;

inline constexpr std::array<double, 9> kRgbToXyzNormalized = {
    0.4124564 / kXn, 0.3575761 / kXn, 0.1804375 / kXn,  //
    0.2126729 / kYn, 0.7151522 / kYn, 0.0721750 / kYn,  //
    0.0193339 / kZn, 0.1191920 / kZn, 0.9503041 / kZn,
};

extern const std::array<double, 9>& xyz_normalized_to_rgb();

inline constexpr double kLabDelta = 6.0 / 29.0;
inline constexpr double kLabEpsilon = kLabDelta * kLabDelta * kLabDelta;

inline double lab_f(double t) {
  return t > kLabEpsilon ? fast_cbrt(t) : t / (3.0 * kLabDelta * kLabDelta) + 4.0 / 29.0;
}

inline double lab_f_inverse(double f) {
  return f > kLabDelta ? f * f * f : 3.0 * kLabDelta * kLabDelta * (f - 4.0 / 29.0);
}

}  // namespace detail

// --- conversions ------------------------------------------------------------

inline LinearRgb srgb_to_linear(Srgb8 c) {
  const auto& lut = detail::srgb_tables().decode;
  return {lut[c.r], lut[c.g], lut[c.b]};
}

/// Encodes one linear channel to an 8-bit code: clamp to [0,1], then
/// round-to-nearest of the sRGB encoding. NaN maps to 0.
inline std::uint8_t encode_channel(double v) {
  const auto& t = detail::srgb_tables();
  if (!(v > 0.0)) return 0;
  if (v >= 1.0) return 255;
  int k = t.coarse[static_cast<int>(v * (detail::SrgbTables::kCoarse - 1))];
  while (v >= t.threshold[k + 1]) ++k;
  while (v < t.threshold[k]) --k;
  return static_cast<std::uint8_t>(k);
}

inline Srgb8 linear_to_srgb(LinearRgb c, std::uint8_t alpha = 255) {
  return {encode_channel(c.r), encode_channel(c.g), encode_channel(c.b), alpha};
}

inline LinearRgb clamp_to_gamut(LinearRgb c) {
  return {std::clamp(c.r, 0.0, 1.0), std::clamp(c.g, 0.0, 1.0), std::clamp(c.b, 0.0, 1.0)};
}

/// Relative luminance (CIE Y, white = 1) of a linear color.
inline double relative_luminance(LinearRgb c) {
  const auto& m = detail::kRgbToXyzNormalized;
  return m[3] * c.r + m[4] * c.g + m[5] * c.b;
}

inline Lab linear_to_lab(LinearRgb c) {
  const auto& m = detail::kRgbToXyzNormalized;
  const double fx = detail::lab_f(m[0] * c.r + m[1] * c.g + m[2] * c.b);
  const double fy = detail::lab_f(m[3] * c.r + m[4] * c.g + m[5] * c.b);
  const double fz = detail::lab_f(m[6] * c.r + m[7] * c.g + m[8] * c.b);
  return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

/// Inverse of linear_to_lab without the gamut clamp.
inline LinearRgb lab_to_linear_unclamped(Lab c) {
  const double fy = (c.L + 16.0) / 116.0;
  const double x = detail::lab_f_inverse(fy + c.a / 500.0);
  const double y = detail::lab_f_inverse(fy);
  const double z = detail::lab_f_inverse(fy - c.b / 200.0);
  const auto& m = detail::xyz_normalized_to_rgb();
  return {m[0] * x + m[1] * y + m[2] * z, m[3] * x + m[4] * y + m[5] * z,
          m[6] * x + m[7] * y + m[8] * z};
}

inline LinearRgb lab_to_linear(Lab c) { return clamp_to_gamut(lab_to_linear_unclamped(c)); }

inline constexpr double kScaleL = 50.0;
inline constexpr double kScaleAb = 128.0;

constexpr ScaledLab lab_to_scaled(Lab c) { return {c.L / kScaleL - 1.0, c.a / kScaleAb, c.b / kScaleAb}; }
constexpr Lab scaled_to_lab(ScaledLab c) { return {(c.x + 1.0) * kScaleL, c.y * kScaleAb, c.z * kScaleAb}; }

inline double delta_e(const Lab& x, const Lab& y) {
  const double dl = x.L - y.L;
  const double da = x.a - y.a;
  const double db = x.b - y.b;
  return std::sqrt(dl * dl + da * da + db * db);
}

/// Radial distance from the achromatic axis.
inline double chroma(const ScaledLab& c) { return std::sqrt(c.y * c.y + c.z * c.z); }

/// Radial projection onto the ball of the given radius; points already
/// inside are returned unchanged.
inline ScaledLab project_to_ball(const ScaledLab& c, double radius = 1.0) {
  const double n = c.norm();
  if (n <= radius) return c;
  const double s = radius / n;
  return {c.x * s, c.y * s, c.z * s};
}

inline Lab srgb8_to_lab(Srgb8 c) { return linear_to_lab(srgb_to_linear(c)); }
inline ScaledLab srgb8_to_scaled(Srgb8 c) { return lab_to_scaled(srgb8_to_lab(c)); }

}  // namespace cce
