#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cce/color.hpp"

namespace {

using cce::Lab;
using cce::LinearRgb;
using cce::ScaledLab;
using cce::Srgb8;

// Direct evaluation of the sRGB decoding curve, independent of the LUT.
double srgb_decode_reference(int code) {
  const double v = code / 255.0;
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

TEST(SrgbToLinear, FixedPoints) {
  const LinearRgb black = cce::srgb_to_linear({0, 0, 0});
  EXPECT_EQ(black.r, 0.0);
  EXPECT_EQ(black.g, 0.0);
  EXPECT_EQ(black.b, 0.0);
  const LinearRgb white = cce::srgb_to_linear({255, 255, 255});
  EXPECT_DOUBLE_EQ(white.r, 1.0);
  EXPECT_DOUBLE_EQ(white.g, 1.0);
  EXPECT_DOUBLE_EQ(white.b, 1.0);
}

TEST(SrgbToLinear, MidGray) {
  const LinearRgb c = cce::srgb_to_linear({188, 188, 188});
  EXPECT_NEAR(c.r, srgb_decode_reference(188), 1e-15);
  EXPECT_NEAR(c.r, 0.5027, 5e-4);
  EXPECT_EQ(c.r, c.g);
  EXPECT_EQ(c.g, c.b);
}

TEST(SrgbToLinear, MatchesFormulaAndIsMonotone) {
  double prev = -1.0;
  for (int k = 0; k < 256; ++k) {
    const double v = cce::srgb_to_linear({static_cast<std::uint8_t>(k), 0, 0}).r;
    EXPECT_NEAR(v, srgb_decode_reference(k), 1e-15) << k;
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(LinearToSrgb, FixedPointsAndClamping) {
  EXPECT_EQ(cce::linear_to_srgb({1, 1, 1}), (Srgb8{255, 255, 255}));
  EXPECT_EQ(cce::linear_to_srgb({0, 0, 0}), (Srgb8{0, 0, 0}));
  EXPECT_EQ(cce::linear_to_srgb({1.7, -0.3, std::nan("")}), (Srgb8{255, 0, 0}));
}

TEST(LinearToSrgb, ExhaustiveRoundTripPerChannel) {
  for (int k = 0; k < 256; ++k) {
    const auto c = static_cast<std::uint8_t>(k);
    for (const Srgb8 in : {Srgb8{c, 0, 0}, Srgb8{0, c, 0}, Srgb8{0, 0, c}, Srgb8{c, c, c}}) {
      EXPECT_EQ(cce::linear_to_srgb(cce::srgb_to_linear(in)), in) << k;
    }
  }
}

TEST(LinearToSrgb, AgreesWithRoundedFormula) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 200000; ++n) {
    const double v = u(rng);
    const double encoded = cce::srgb_encode(v) * 255.0;
    // Skip values within rounding noise of a half-code tie.
    if (std::abs(encoded - std::floor(encoded) - 0.5) < 1e-9) continue;
    EXPECT_EQ(cce::encode_channel(v), static_cast<int>(std::lround(encoded))) << v;
  }
}

TEST(LinearToLab, WhiteAndBlack) {
  const Lab white = cce::linear_to_lab({1, 1, 1});
  EXPECT_NEAR(white.L, 100.0, 1e-9);
  EXPECT_NEAR(white.a, 0.0, 1e-9);
  EXPECT_NEAR(white.b, 0.0, 1e-9);
  const Lab black = cce::linear_to_lab({0, 0, 0});
  EXPECT_NEAR(black.L, 0.0, 1e-12);
  EXPECT_NEAR(black.a, 0.0, 1e-12);
  EXPECT_NEAR(black.b, 0.0, 1e-12);
}

TEST(LinearToLab, KnownPrimaries) {
  // Published sRGB/D65 CIELAB values of the primaries.
  const Lab red = cce::srgb8_to_lab({255, 0, 0});
  EXPECT_NEAR(red.L, 53.24, 0.01);
  EXPECT_NEAR(red.a, 80.09, 0.02);
  EXPECT_NEAR(red.b, 67.20, 0.02);
  const Lab blue = cce::srgb8_to_lab({0, 0, 255});
  EXPECT_NEAR(blue.L, 32.30, 0.01);
  EXPECT_NEAR(blue.a, 79.19, 0.02);
  EXPECT_NEAR(blue.b, -107.86, 0.02);
}

TEST(LinearToLab, FastCubeRootMatchesStd) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int n = 0; n < 100000; ++n) {
    const double x = u(rng);
    EXPECT_NEAR(cce::detail::fast_cbrt(x), std::cbrt(x), 1e-12 * std::cbrt(x) + 1e-300);
  }
  EXPECT_EQ(cce::detail::fast_cbrt(0.0), 0.0);
  EXPECT_NEAR(cce::detail::fast_cbrt(27.0), 3.0, 1e-14);
}

TEST(LabRoundTrip, GridSweep32Cubed) {
  double worst = 0.0;
  for (int r = 0; r < 32; ++r) {
    for (int g = 0; g < 32; ++g) {
      for (int b = 0; b < 32; ++b) {
        const LinearRgb c{r / 31.0, g / 31.0, b / 31.0};
        const Lab lab = cce::linear_to_lab(c);
        const Lab again = cce::linear_to_lab(cce::lab_to_linear(lab));
        worst = std::max({worst, std::abs(lab.L - again.L), std::abs(lab.a - again.a),
                          std::abs(lab.b - again.b)});
      }
    }
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(LabToLinear, OutOfGamutIsClamped) {
  const LinearRgb c = cce::lab_to_linear({50.0, 127.0, -127.0});
  for (double v : {c.r, c.g, c.b}) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(ScaledLab, AffineMap) {
  const ScaledLab mid = cce::lab_to_scaled({50, 0, 0});
  EXPECT_EQ(mid, (ScaledLab{0, 0, 0}));
  EXPECT_EQ(cce::lab_to_scaled({100, 0, 0}), (ScaledLab{1, 0, 0}));
  EXPECT_EQ(cce::lab_to_scaled({50, 64, -64}), (ScaledLab{0, 0.5, -0.5}));
}

TEST(ScaledLab, RoundTripExact) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> L(0.0, 100.0), ab(-128.0, 128.0);
  for (int n = 0; n < 100000; ++n) {
    const Lab in{L(rng), ab(rng), ab(rng)};
    const Lab out = cce::scaled_to_lab(cce::lab_to_scaled(in));
    EXPECT_NEAR(out.L, in.L, 1e-12);
    EXPECT_NEAR(out.a, in.a, 1e-12);
    EXPECT_NEAR(out.b, in.b, 1e-12);
  }
}

TEST(ScaledLab, SrgbGamutVersusUnitBall) {
  // Per-axis scaling does not fit sRGB inside the inscribed ball: pure blue
  // sits outside and is radially projected before use as a background.
  const ScaledLab blue = cce::srgb8_to_scaled({0, 0, 255});
  EXPECT_GT(blue.norm(), 1.0);
  for (int r = 0; r < 256; r += 15) {
    for (int g = 0; g < 256; g += 15) {
      for (int b = 0; b < 256; b += 15) {
        const ScaledLab s = cce::srgb8_to_scaled(
            {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b)});
        EXPECT_LE(cce::project_to_ball(s).norm(), 1.0 + 1e-12);
        EXPECT_LE(s.norm(), 1.25);
      }
    }
  }
}

TEST(DeltaE, Examples) {
  const Lab x{42, 13, -7};
  EXPECT_EQ(cce::delta_e(x, x), 0.0);
  EXPECT_DOUBLE_EQ(cce::delta_e({0, 0, 0}, {100, 0, 0}), 100.0);
  EXPECT_NEAR(cce::delta_e({50, 10, 0}, {50, 0, 10}), std::sqrt(200.0), 1e-12);
  EXPECT_NEAR(cce::delta_e({50, 10, 0}, {50, 0, 10}), 14.1421, 1e-4);
}

TEST(DeltaE, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> L(0.0, 100.0), ab(-128.0, 128.0);
  auto draw = [&] { return Lab{L(rng), ab(rng), ab(rng)}; };
  for (int n = 0; n < 20000; ++n) {
    const Lab x = draw(), y = draw(), z = draw();
    EXPECT_EQ(cce::delta_e(x, y), cce::delta_e(y, x));
    EXPECT_GT(cce::delta_e(x, y), 0.0);
    EXPECT_LE(cce::delta_e(x, z), cce::delta_e(x, y) + cce::delta_e(y, z) + 1e-12);
  }
}

TEST(Chroma, Examples) {
  EXPECT_EQ(cce::chroma({0.3, 0, 0}), 0.0);
  EXPECT_NEAR(cce::chroma({0, 0.3, 0.4}), 0.5, 1e-15);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0), angle(0.0, 6.283185307179586);
  for (int n = 0; n < 1000; ++n) {
    const ScaledLab c{u(rng), u(rng), u(rng)};
    const double t = angle(rng);
    const ScaledLab rotated{c.x, c.y * std::cos(t) - c.z * std::sin(t), c.y * std::sin(t) + c.z * std::cos(t)};
    EXPECT_NEAR(cce::chroma(rotated), cce::chroma(c), 1e-12);
  }
}

TEST(ClampToGamut, Examples) {
  EXPECT_EQ(cce::clamp_to_gamut({0.5, 0.5, 0.5}), (LinearRgb{0.5, 0.5, 0.5}));
  EXPECT_EQ(cce::clamp_to_gamut({1.2, 0.5, -0.1}), (LinearRgb{1.0, 0.5, 0.0}));
  const LinearRgb once = cce::clamp_to_gamut({3.0, -2.0, 0.25});
  EXPECT_EQ(cce::clamp_to_gamut(once), once);
}

}  // namespace
