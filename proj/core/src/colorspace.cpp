#include "cce/color.hpp"

#include <limits>

namespace cce::detail {

SrgbTables::SrgbTables() {
  for (int k = 0; k < 256; ++k) decode[k] = srgb_decode(k / 255.0);
  threshold[0] = -std::numeric_limits<double>::infinity();
  for (int k = 1; k < 256; ++k) threshold[k] = srgb_decode((k - 0.5) / 255.0);
  threshold[256] = std::numeric_limits<double>::infinity();
  int code = 0;
  for (int i = 0; i < kCoarse; ++i) {
    const double v = static_cast<double>(i) / (kCoarse - 1);
    while (code < 255 && v >= threshold[code + 1]) ++code;
    coarse[i] = static_cast<std::uint8_t>(code);
  }
}

const SrgbTables& srgb_tables() {
  static const SrgbTables tables;
  return tables;
}

CbrtTable::CbrtTable() {
  for (int k = 0; k < kSize; ++k) {
    const int exponent = kMinExponent + (k >> kMantissaBits);
    const double step = 1.0 / (1 << kMantissaBits);
    const double m0 = 1.0 + (k & ((1 << kMantissaBits) - 1)) * step;
    const double y0 = std::cbrt(std::ldexp(m0, exponent));
    const double y1 = std::cbrt(std::ldexp(m0 + step, exponent));
    base[k] = static_cast<float>(y0);
    slope[k] = static_cast<float>(y1 - y0);
  }
}

const CbrtTable& cbrt_table() {
  static const CbrtTable table;
  return table;
}

namespace {

std::array<double, 9> invert3(const std::array<double, 9>& m) {
  const double c00 = m[4] * m[8] - m[5] * m[7];
  const double c01 = m[5] * m[6] - m[3] * m[8];
  const double c02 = m[3] * m[7] - m[4] * m[6];
  const double det = m[0] * c00 + m[1] * c01 + m[2] * c02;
  const double inv = 1.0 / det;
  return {
      c00 * inv, (m[2] * m[7] - m[1] * m[8]) * inv, (m[1] * m[5] - m[2] * m[4]) * inv,
      c01 * inv, (m[0] * m[8] - m[2] * m[6]) * inv, (m[2] * m[3] - m[0] * m[5]) * inv,
      c02 * inv, (m[1] * m[6] - m[0] * m[7]) * inv, (m[0] * m[4] - m[1] * m[3]) * inv,
  };
}

}  // namespace

const std::array<double, 9>& xyz_normalized_to_rgb() {
  static const std::array<double, 9> inverse = invert3(kRgbToXyzNormalized);
  return inverse;
}

}  // namespace cce::detail
