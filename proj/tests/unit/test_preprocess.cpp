#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "cce/preprocess.hpp"

namespace {

using cce::BlurParams;
using cce::FovMapping;
using cce::LinearImage;
using cce::RasterImage;
using cce::Srgb8;

LinearImage gradient_image(int w, int h) {
  LinearImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.at(x, y) = {static_cast<float>(x) / (w - 1), static_cast<float>(y) / (h - 1), 0.25f};
    }
  }
  return img;
}

double channel_mean(const LinearImage& img, int channel) {
  double s = 0.0;
  for (const auto& p : img.pixels) s += channel == 0 ? p.r : channel == 1 ? p.g : p.b;
  return s / static_cast<double>(img.pixels.size());
}

TEST(BlurParams, Validation) {
  EXPECT_NO_THROW((BlurParams{3, 1.5}.validate()));
  EXPECT_THROW((BlurParams{4, 1.5}.validate()), std::invalid_argument);
  EXPECT_THROW((BlurParams{0, 1.5}.validate()), std::invalid_argument);
  EXPECT_THROW((BlurParams{3, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((BlurParams{3, std::nan("")}.validate()), std::invalid_argument);
}

TEST(GaussianBlur, ConstantImageUnchanged) {
  const RasterImage img(17, 9, false, Srgb8{90, 140, 200});
  EXPECT_EQ(cce::gaussian_blur(img, {3, 1.5}), img);
  EXPECT_EQ(cce::gaussian_blur(img, {7, 2.0}), img);
}

TEST(GaussianBlur, KernelSizeOneIsIdentity) {
  RasterImage img(8, 6);
  std::mt19937 rng(1);
  for (auto& p : img.pixels) {
    p = {static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
  }
  EXPECT_EQ(cce::gaussian_blur(img, {1, 1.5}), img);
}

TEST(GaussianBlur, ImpulseMatchesDirectlyEvaluated2dKernel) {
  // Oracle: evaluate G(x, y) on the 3x3 window and normalize.
  const double sigma = 1.5;
  double g[3][3];
  double sum = 0.0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      g[dy + 1][dx + 1] = std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma)) / (2 * M_PI * sigma * sigma);
      sum += g[dy + 1][dx + 1];
    }
  }
  LinearImage img(7, 7);
  img.at(3, 3) = {1.0f, 1.0f, 1.0f};
  const LinearImage out = cce::gaussian_blur(img, {3, sigma});
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      EXPECT_NEAR(out.at(3 + dx, 3 + dy).r, g[dy + 1][dx + 1] / sum, 1e-7);
    }
  }
  EXPECT_NEAR(out.at(3, 3).r, 0.14776132, 1e-7);
  EXPECT_NEAR(out.at(2, 2).r, 0.09474166, 1e-7);
  EXPECT_EQ(out.at(1, 3).r, 0.0f);
}

TEST(GaussianBlur, PreservesMeanOnGradient) {
  const LinearImage img = gradient_image(41, 23);
  for (const BlurParams p : {BlurParams{3, 1.5}, BlurParams{5, 1.0}, BlurParams{9, 3.0}}) {
    const LinearImage out = cce::gaussian_blur(img, p);
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(channel_mean(out, c), channel_mean(img, c), 1e-6);
  }
}

TEST(GaussianBlur, OutputWithinInputRange) {
  LinearImage img(32, 24);
  std::mt19937 rng(2);
  std::uniform_real_distribution<float> u(0.2f, 0.7f);
  for (auto& p : img.pixels) p = {u(rng), u(rng), u(rng)};
  const LinearImage out = cce::gaussian_blur(img, {5, 2.0});
  for (const auto& p : out.pixels) {
    for (float v : {p.r, p.g, p.b}) {
      EXPECT_GE(v, 0.2f - 1e-6f);
      EXPECT_LE(v, 0.7f + 1e-6f);
    }
  }
}

TEST(GaussianBlur, IndependentOfWorkerCount) {
  LinearImage img(64, 37);
  std::mt19937 rng(3);
  std::uniform_real_distribution<float> u(0.0f, 1.0f);
  for (auto& p : img.pixels) p = {u(rng), u(rng), u(rng)};
  const LinearImage a = cce::gaussian_blur(img, {3, 1.5}, 1);
  const LinearImage b = cce::gaussian_blur(img, {3, 1.5}, 5);
  ASSERT_EQ(a.pixels.size(), b.pixels.size());
  EXPECT_EQ(std::memcmp(a.pixels.data(), b.pixels.data(), a.pixels.size() * sizeof(a.pixels[0])), 0);
}

TEST(FovMapping, IdentityMapping) {
  const auto c = cce::map_frame_to_background(0.5, 0.5, FovMapping::identity());
  EXPECT_DOUBLE_EQ(c.i, 0.5);
  EXPECT_DOUBLE_EQ(c.j, 0.5);
  EXPECT_TRUE(c.in_coverage);
}

TEST(FovMapping, CalibratedCorners) {
  const FovMapping m{0.65, 0.65, 0.13, 0.17};
  const auto lo = cce::map_frame_to_background(0.13, 0.17, m);
  EXPECT_NEAR(lo.i, 0.0, 1e-15);
  EXPECT_NEAR(lo.j, 0.0, 1e-15);
  const auto hi = cce::map_frame_to_background(0.78, 0.82, m);
  EXPECT_NEAR(hi.i, 1.0, 1e-15);
  EXPECT_NEAR(hi.j, 1.0, 1e-15);
  const auto outside = cce::map_frame_to_background(0.0, 0.0, m);
  EXPECT_FALSE(outside.in_coverage);
  EXPECT_LT(outside.i, 0.0);
}

TEST(FovMapping, InverseOfForwardMap) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0), s(0.2, 2.0), b(-0.5, 0.5);
  for (int n = 0; n < 10000; ++n) {
    const FovMapping m{s(rng), s(rng), b(rng), b(rng)};
    const double i = u(rng), j = u(rng);
    const auto f = cce::map_background_to_frame(i, j, m);
    const auto back = cce::map_frame_to_background(f.i, f.j, m);
    EXPECT_NEAR(back.i, i, 1e-12);
    EXPECT_NEAR(back.j, j, 1e-12);
  }
}

TEST(FovMapping, Validation) {
  EXPECT_NO_THROW(FovMapping{}.validate());
  EXPECT_THROW((FovMapping{0.0, 1.0, 0.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((FovMapping{0.5, 0.5, 1.5, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((FovMapping{0.5, 0.5, -0.6, 0.0}.validate()), std::invalid_argument);
}

TEST(SampleBilinear, TexelCentersAndMidpoints) {
  LinearImage img(4, 2);
  img.at(1, 0) = {0.2f, 0.4f, 0.6f};
  img.at(2, 0) = {0.6f, 0.0f, 1.0f};
  const auto center = cce::sample_bilinear(img, cce::texel_center(1, 4), cce::texel_center(0, 2));
  EXPECT_NEAR(center.r, 0.2, 1e-7);
  EXPECT_NEAR(center.g, 0.4, 1e-7);
  const auto mid = cce::sample_bilinear(img, 0.5, cce::texel_center(0, 2));
  EXPECT_NEAR(mid.r, 0.4, 1e-7);
  EXPECT_NEAR(mid.g, 0.2, 1e-7);
  EXPECT_NEAR(mid.b, 0.8, 1e-7);
}

TEST(SampleBilinear, ConstantImageAndClampedCoordinates) {
  const RasterImage img(5, 3, false, Srgb8{10, 200, 60});
  const auto expect = cce::srgb_to_linear({10, 200, 60});
  for (double i : {-0.3, 0.0, 0.37, 1.0, 1.8}) {
    for (double j : {-1.0, 0.5, 2.0}) {
      const auto c = cce::sample_bilinear(img, i, j);
      EXPECT_NEAR(c.r, expect.r, 1e-12);
      EXPECT_NEAR(c.g, expect.g, 1e-12);
      EXPECT_NEAR(c.b, expect.b, 1e-12);
    }
  }
}

TEST(Attenuate, Examples) {
  const RasterImage img(3, 2, false, Srgb8{188, 50, 255});
  EXPECT_EQ(cce::attenuate(img, 0.0), img);
  for (const auto& p : cce::attenuate(img, 1.0).pixels) EXPECT_EQ(p, (Srgb8{0, 0, 0}));

  LinearImage lin(2, 2);
  for (auto& p : lin.pixels) p = {0.5f, 0.5f, 0.5f};
  for (const auto& p : cce::attenuate(lin, 0.6).pixels) {
    EXPECT_NEAR(p.r, 0.2, 1e-7);
    EXPECT_NEAR(p.g, 0.2, 1e-7);
    EXPECT_NEAR(p.b, 0.2, 1e-7);
  }
  EXPECT_THROW(cce::attenuate(img, 1.2), std::invalid_argument);
}

TEST(ResampleToDisplay, OutOfCoverageClampsToEdge) {
  LinearImage bg(2, 1);
  bg.at(0, 0) = {0.1f, 0.1f, 0.1f};
  bg.at(1, 0) = {0.9f, 0.9f, 0.9f};
  // Capture covers only the middle of the display horizontally.
  const FovMapping m{0.5, 1.0, 0.25, 0.0};
  const LinearImage out = cce::resample_to_display(bg, 8, 1, m);
  EXPECT_NEAR(out.at(0, 0).r, 0.1, 1e-7);
  EXPECT_NEAR(out.at(7, 0).r, 0.9, 1e-7);
  for (int x = 1; x < 8; ++x) EXPECT_GE(out.at(x, 0).r, out.at(x - 1, 0).r);
}

}  // namespace
