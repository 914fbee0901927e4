#include "synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace cce::cli {

namespace {

std::uint8_t to_byte(double v) { return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L)); }

Srgb8 rgb(double r, double g, double b, std::uint8_t a = 255) { return {to_byte(r), to_byte(g), to_byte(b), a}; }

Srgb8 mix(const Srgb8& p, const Srgb8& q, double t) {
  return rgb(p.r + (q.r - p.r) * t, p.g + (q.g - p.g) * t, p.b + (q.b - p.b) * t, p.a);
}

void fill_rect(RasterImage& img, int x0, int y0, int x1, int y1, Srgb8 c) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, img.width);
  y1 = std::min(y1, img.height);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) img.at(x, y) = c;
  }
}

void fill_disk(RasterImage& img, double cx, double cy, double r, Srgb8 c) {
  for (int y = std::max(0, static_cast<int>(cy - r)); y <= std::min(img.height - 1, static_cast<int>(cy + r)); ++y) {
    for (int x = std::max(0, static_cast<int>(cx - r)); x <= std::min(img.width - 1, static_cast<int>(cx + r));
         ++x) {
      if ((x + 0.5 - cx) * (x + 0.5 - cx) + (y + 0.5 - cy) * (y + 0.5 - cy) <= r * r) img.at(x, y) = c;
    }
  }
}

// Blocky pseudo-glyphs: a 3x5 cell pattern per character.
void draw_text(RasterImage& img, int x0, int y0, int chars, int cell, Srgb8 c, unsigned seed) {
  std::mt19937 rng(seed);
  for (int k = 0; k < chars; ++k) {
    const int gx = x0 + k * 4 * cell;
    if (rng() % 6 == 0) continue;  // word gap
    const unsigned bits = rng() | 0x4005u;
    for (int row = 0; row < 5; ++row) {
      for (int col = 0; col < 3; ++col) {
        if (bits & (1u << (row * 3 + col))) {
          fill_rect(img, gx + col * cell, y0 + row * cell, gx + (col + 1) * cell, y0 + (row + 1) * cell, c);
        }
      }
    }
  }
}

}  // namespace

RasterImage make_virtual_scene(int width, int height) {
  RasterImage img(width, height, true, Srgb8{0, 0, 0, 0});
  const double sx = width / 320.0;
  const double sy = height / 180.0;
  auto X = [&](double v) { return static_cast<int>(std::lround(v * sx)); };
  auto Y = [&](double v) { return static_cast<int>(std::lround(v * sy)); };
  const int cell = std::max(1, X(2));

  // White caption lines.
  draw_text(img, X(12), Y(10), 18, cell, rgb(255, 255, 255), 11);
  draw_text(img, X(12), Y(26), 14, cell, rgb(255, 255, 255), 12);

  // Photo panel: sky, sun, hills, field.
  const int px0 = X(12), py0 = Y(44), px1 = X(150), py1 = Y(132);
  for (int y = py0; y < py1; ++y) {
    const double t = static_cast<double>(y - py0) / std::max(1, py1 - py0);
    for (int x = px0; x < px1; ++x) {
      const double u = static_cast<double>(x - px0) / std::max(1, px1 - px0);
      const double ridge = 0.55 + 0.08 * std::sin(u * 9.0) + 0.05 * std::sin(u * 23.0 + 1.0);
      Srgb8 c;
      if (t < ridge) {
        c = mix(rgb(70, 130, 215), rgb(185, 215, 240), t / ridge);
      } else if (t < ridge + 0.15) {
        c = mix(rgb(40, 120, 50), rgb(90, 160, 60), (t - ridge) / 0.15);
      } else {
        c = mix(rgb(150, 110, 60), rgb(110, 75, 40), (t - ridge - 0.15) / std::max(0.01, 0.85 - ridge));
      }
      img.at(x, y) = c;
    }
  }
  fill_disk(img, X(120), Y(62), 7.0 * sx, rgb(250, 220, 90));

  // UI buttons with white labels.
  const Srgb8 buttons[] = {rgb(210, 40, 40), rgb(40, 170, 70), rgb(40, 80, 210), rgb(240, 140, 30),
                           rgb(150, 60, 190)};
  for (int k = 0; k < 5; ++k) {
    const int bx = X(164), by = Y(44 + k * 18);
    fill_rect(img, bx, by, X(232), by + Y(14), buttons[k]);
    draw_text(img, bx + X(4), by + Y(3), 5, std::max(1, cell / 2), rgb(255, 255, 255),
              20 + k);
  }

  // Gray card with dark text.
  fill_rect(img, X(240), Y(44), X(308), Y(100), rgb(200, 200, 200));
  draw_text(img, X(244), Y(50), 5, std::max(1, cell / 2), rgb(40, 40, 40), 31);
  draw_text(img, X(244), Y(64), 5, std::max(1, cell / 2), rgb(40, 40, 40), 32);

  // Props: cheese wedge, skin-tone face, cyan marker.
  fill_disk(img, X(260), Y(140), 18.0 * sx, rgb(245, 200, 60));
  fill_disk(img, X(296), Y(140), 12.0 * sx, rgb(225, 170, 140));
  fill_disk(img, X(200), Y(150), 9.0 * sx, rgb(60, 210, 220));

  // Semi-transparent banner.
  fill_rect(img, X(12), Y(144), X(150), Y(168), rgb(255, 255, 255, 160));
  return img;
}

const std::vector<std::string>& background_kinds() {
  static const std::vector<std::string> kinds = {
      "yellow_wall", "blue_sky",   "grass",    "brick",      "office_gray", "wood",
      "night_city",  "sunset",     "red_sofa", "white_wall", "foliage",     "checker_floor"};
  return kinds;
}

RasterImage make_background(const std::string& kind, int width, int height, unsigned seed) {
  const auto& kinds = background_kinds();
  const auto it = std::find(kinds.begin(), kinds.end(), kind);
  if (it == kinds.end()) throw std::invalid_argument("unknown background kind: " + kind);
  std::mt19937 rng(seed * 7919u + static_cast<unsigned>(it - kinds.begin()));
  std::normal_distribution<double> noise(0.0, 4.0);

  RasterImage img(width, height);
  for (int y = 0; y < height; ++y) {
    const double v = static_cast<double>(y) / height;
    for (int x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / width;
      double r = 0, g = 0, b = 0;
      if (kind == "yellow_wall") {
        r = 225 - 30 * v;
        g = 205 - 30 * v;
        b = 40 + 10 * u;
      } else if (kind == "blue_sky") {
        r = 90 + 90 * v;
        g = 150 + 70 * v;
        b = 235;
        const double cloud = std::sin(u * 11.0) * std::sin(v * 7.0 + 0.5);
        if (cloud > 0.6) r = g = b = 240;
      } else if (kind == "grass") {
        const double s = std::sin(x * 0.9) * std::sin(y * 0.37);
        r = 60 + 20 * s;
        g = 140 + 30 * s - 40 * v;
        b = 40;
      } else if (kind == "brick") {
        const int row = y / std::max(1, height / 18);
        const int bw = std::max(2, width / 12);
        const bool mortar = (y % std::max(1, height / 18)) < 2 || ((x + (row % 2) * bw / 2) % bw) < 2;
        r = mortar ? 190 : 165;
        g = mortar ? 185 : 70;
        b = mortar ? 175 : 50;
      } else if (kind == "office_gray") {
        r = g = b = 120 + 40 * u;
        if (u > 0.6 && u < 0.8 && v < 0.5) r = g = b = 230;  // window
      } else if (kind == "wood") {
        const double grain = std::sin(u * 60.0 + std::sin(v * 8.0) * 3.0);
        r = 150 + 25 * grain;
        g = 95 + 15 * grain;
        b = 50 + 8 * grain;
      } else if (kind == "night_city") {
        r = 15;
        g = 18;
        b = 35;
        if ((x / 8 + y / 10) % 7 == 0 && v > 0.3) {
          r = 240;
          g = 210;
          b = 120;
        }
      } else if (kind == "sunset") {
        r = 250 - 60 * v;
        g = 150 - 90 * v;
        b = 70 + 60 * v;
      } else if (kind == "red_sofa") {
        r = 170 + 20 * std::sin(u * 6.0);
        g = 30;
        b = 40;
        if (v > 0.75) {
          r = 110;
          g = 90;
          b = 80;
        }
      } else if (kind == "white_wall") {
        r = 235 - 20 * u;
        g = 232 - 20 * u;
        b = 225 - 15 * u;
      } else if (kind == "foliage") {
        const double s = std::sin(x * 0.21) * std::cos(y * 0.17) + std::sin((x + y) * 0.05);
        r = 40 + 30 * s;
        g = 110 + 50 * s;
        b = 50 + 15 * s;
      } else {  // checker_floor
        const bool dark = ((x / std::max(1, width / 16)) + (y / std::max(1, height / 9))) % 2 == 0;
        r = dark ? 60 : 200;
        g = dark ? 55 : 190;
        b = dark ? 70 : 170;
      }
      img.at(x, y) = rgb(r + noise(rng), g + noise(rng), b + noise(rng));
    }
  }
  return img;
}

RasterImage make_coverage_frame(int width, int height, int coverage_percent) {
  if (coverage_percent < 0 || coverage_percent > 100) {
    throw std::invalid_argument("coverage must lie in [0, 100]");
  }
  const RasterImage scene = make_virtual_scene(320, 180);
  // Opaque content so coverage is exact: transparent scene texels fall back
  // to a gradient.
  RasterImage img(width, height, true, Srgb8{0, 0, 0, 0});
  const std::size_t n = img.pixels.size() * static_cast<std::size_t>(coverage_percent) / 100;
  for (std::size_t k = 0; k < n; ++k) {
    const int x = static_cast<int>(k % static_cast<std::size_t>(width));
    const int y = static_cast<int>(k / static_cast<std::size_t>(width));
    Srgb8 c = scene.at(x % scene.width, y % scene.height);
    if (c.a == 0) c = rgb(x * 255.0 / width, y * 255.0 / height, 128);
    c.a = 255;
    img.pixels[k] = c;
  }
  return img;
}

}  // namespace cce::cli
