#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cce/png_io.hpp"

namespace {

namespace fs = std::filesystem;
using cce::RasterImage;
using cce::Srgb8;

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cce_png_io_test";
  fs::create_directories(dir);
  return dir / name;
}

RasterImage noise(int w, int h, bool alpha, unsigned seed) {
  RasterImage img(w, h, alpha);
  std::mt19937 rng(seed);
  for (auto& p : img.pixels) {
    p = {static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()),
         alpha ? static_cast<std::uint8_t>(rng()) : std::uint8_t{255}};
  }
  return img;
}

TEST(PngIo, RgbRoundTrip) {
  const RasterImage img = noise(37, 21, false, 1);
  const fs::path p = temp_path("rgb.png");
  cce::write_png(p, img);
  EXPECT_EQ(cce::read_png(p), img);
}

TEST(PngIo, RgbaRoundTripKeepsAlpha) {
  const RasterImage img = noise(16, 9, true, 2);
  const fs::path p = temp_path("rgba.png");
  cce::write_png(p, img);
  const RasterImage back = cce::read_png(p);
  EXPECT_TRUE(back.has_alpha);
  EXPECT_EQ(back, img);
}

TEST(PngIo, MissingFileThrows) {
  EXPECT_THROW(cce::read_png(temp_path("does_not_exist.png")), cce::IoError);
}

TEST(PngIo, CorruptFileThrows) {
  const fs::path p = temp_path("corrupt.png");
  std::ofstream(p) << "not a png";
  EXPECT_THROW(cce::read_png(p), cce::IoError);
}

TEST(PngIo, UnwritableDestinationThrows) {
  EXPECT_THROW(cce::write_png(temp_path("no_such_dir") / "x.png", RasterImage(2, 2)), cce::IoError);
}

TEST(PngIo, BundledFixturesDecode) {
  const RasterImage scene = cce::read_png(CCE_FIXTURE_DIR "/virtual_scene.png");
  EXPECT_TRUE(scene.has_alpha);
  EXPECT_GT(cce::foreground_mask(scene).count(), 0u);
  EXPECT_LT(cce::foreground_mask(scene).count(), scene.pixels.size());
  int backgrounds = 0;
  for (const auto& e : fs::directory_iterator(CCE_FIXTURE_DIR "/backgrounds")) {
    const RasterImage bg = cce::read_png(e.path());
    EXPECT_FALSE(bg.has_alpha);
    ++backgrounds;
  }
  EXPECT_GE(backgrounds, 10);
}

}  // namespace
