#include "cce/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cce/parallel.hpp"

namespace cce {

void BlurParams::validate() const {
  if (kernel_size < 1 || kernel_size % 2 == 0) {
    throw std::invalid_argument("blur kernel size must be an odd positive integer");
  }
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw std::invalid_argument("blur sigma must be finite and positive");
  }
}

std::vector<double> gaussian_taps(const BlurParams& p) {
  p.validate();
  const int radius = p.kernel_size / 2;
  std::vector<double> taps(static_cast<std::size_t>(p.kernel_size));
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    const double w = std::exp(-(k * k) / (2.0 * p.sigma * p.sigma));
    taps[static_cast<std::size_t>(k + radius)] = w;
    sum += w;
  }
  for (auto& w : taps) w /= sum;
  return taps;
}

namespace {

// Pixels are three contiguous floats, so rows are treated as flat arrays
// and the tap loops run over all channels at once.
const float* row_data(const LinearImage& img, int y) {
  return &img.pixels[static_cast<std::size_t>(y) * img.width].r;
}
float* row_data(LinearImage& img, int y) { return &img.pixels[static_cast<std::size_t>(y) * img.width].r; }

// acc must hold 3 * w doubles. Each output sums its taps in kernel order;
// the tap loop is outermost so the pixel loop vectorizes.
void blur_row_horizontal(const float* in, float* out, int w, const std::vector<double>& taps, int radius,
                         std::vector<double>& acc) {
  const int lo = std::min(radius, w);
  const int hi = std::max(lo, w - radius);
  std::fill(acc.begin(), acc.end(), 0.0);
  for (int k = -radius; k <= radius; ++k) {
    const double t = taps[static_cast<std::size_t>(k + radius)];
    const float* src = in + 3 * k;
    for (int i = 3 * lo; i < 3 * hi; ++i) acc[static_cast<std::size_t>(i)] += t * src[i];
    for (int x : {0, 1}) {
      const int x0 = x == 0 ? 0 : hi;
      const int x1 = x == 0 ? lo : w;
      for (int xx = x0; xx < x1; ++xx) {
        const int sx = std::clamp(xx + k, 0, w - 1);
        for (int c = 0; c < 3; ++c) acc[static_cast<std::size_t>(3 * xx + c)] += t * in[3 * sx + c];
      }
    }
  }
  for (int i = 0; i < 3 * w; ++i) out[i] = static_cast<float>(acc[static_cast<std::size_t>(i)]);
}

}  // namespace

LinearImage gaussian_blur(const LinearImage& img, const BlurParams& p, unsigned workers) {
  const auto taps = gaussian_taps(p);
  const int radius = p.kernel_size / 2;
  if (radius == 0) return img;

  const int w = img.width;
  const int h = img.height;
  LinearImage horizontal(w, h);
  parallel_rows(h, workers, [&](int y0, int y1) {
    std::vector<double> acc(static_cast<std::size_t>(3 * w));
    for (int y = y0; y < y1; ++y) {
      blur_row_horizontal(row_data(img, y), row_data(horizontal, y), w, taps, radius, acc);
    }
  });

  LinearImage out(w, h);
  const int n = 3 * w;
  parallel_rows(h, workers, [&](int y0, int y1) {
    std::vector<double> acc(static_cast<std::size_t>(n));
    for (int y = y0; y < y1; ++y) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (int k = -radius; k <= radius; ++k) {
        const double t = taps[static_cast<std::size_t>(k + radius)];
        const float* src = row_data(horizontal, std::clamp(y + k, 0, h - 1));
        for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)] += t * src[i];
      }
      float* dst = row_data(out, y);
      for (int i = 0; i < n; ++i) dst[i] = static_cast<float>(acc[static_cast<std::size_t>(i)]);
    }
  });
  return out;
}

RasterImage gaussian_blur(const RasterImage& img, const BlurParams& p, unsigned workers) {
  const LinearImage blurred = gaussian_blur(to_linear_image(img), p, workers);
  RasterImage out = to_raster_image(blurred);
  out.has_alpha = img.has_alpha;
  for (std::size_t k = 0; k < out.pixels.size(); ++k) out.pixels[k].a = img.pixels[k].a;
  return out;
}

void FovMapping::validate() const {
  if (!(std::isfinite(s_u) && std::isfinite(s_v) && std::isfinite(b_u) && std::isfinite(b_v))) {
    throw std::invalid_argument("FoV mapping values must be finite");
  }
  if (s_u <= 0.0 || s_v <= 0.0) throw std::invalid_argument("FoV scale factors must be positive");
  const bool overlaps_u = b_u < 1.0 && b_u + s_u > 0.0;
  const bool overlaps_v = b_v < 1.0 && b_v + s_v > 0.0;
  if (!overlaps_u || !overlaps_v) {
    throw std::invalid_argument("FoV mapping does not overlap the display frame");
  }
}

BackgroundCoord map_background_to_frame(double i, double j, const FovMapping& m) {
  const double u = m.s_u * i + m.b_u;
  const double v = m.s_v * j + m.b_v;
  return {u, v, u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0};
}

BackgroundCoord map_frame_to_background(double u, double v, const FovMapping& m) {
  const double i = (u - m.b_u) / m.s_u;
  const double j = (v - m.b_v) / m.s_v;
  return {i, j, i >= 0.0 && i <= 1.0 && j >= 0.0 && j <= 1.0};
}

namespace {

struct BilinearTaps {
  int x0, x1;
  double fx;
};

BilinearTaps taps_for(double coord, int extent) {
  const double pos = std::clamp(std::clamp(coord, 0.0, 1.0) * extent - 0.5, 0.0, extent - 1.0);
  const int x0 = static_cast<int>(pos);
  return {x0, std::min(x0 + 1, extent - 1), pos - x0};
}

}  // namespace

LinearRgb sample_bilinear(const LinearImage& img, double i, double j) {
  const auto tx = taps_for(i, img.width);
  const auto ty = taps_for(j, img.height);
  const auto& p00 = img.at(tx.x0, ty.x0);
  const auto& p10 = img.at(tx.x1, ty.x0);
  const auto& p01 = img.at(tx.x0, ty.x1);
  const auto& p11 = img.at(tx.x1, ty.x1);
  const double w00 = (1.0 - tx.fx) * (1.0 - ty.fx);
  const double w10 = tx.fx * (1.0 - ty.fx);
  const double w01 = (1.0 - tx.fx) * ty.fx;
  const double w11 = tx.fx * ty.fx;
  return {w00 * p00.r + w10 * p10.r + w01 * p01.r + w11 * p11.r,
          w00 * p00.g + w10 * p10.g + w01 * p01.g + w11 * p11.g,
          w00 * p00.b + w10 * p10.b + w01 * p01.b + w11 * p11.b};
}

LinearRgb sample_bilinear(const RasterImage& img, double i, double j) {
  const auto tx = taps_for(i, img.width);
  const auto ty = taps_for(j, img.height);
  const LinearRgb p00 = srgb_to_linear(img.at(tx.x0, ty.x0));
  const LinearRgb p10 = srgb_to_linear(img.at(tx.x1, ty.x0));
  const LinearRgb p01 = srgb_to_linear(img.at(tx.x0, ty.x1));
  const LinearRgb p11 = srgb_to_linear(img.at(tx.x1, ty.x1));
  const double w00 = (1.0 - tx.fx) * (1.0 - ty.fx);
  const double w10 = tx.fx * (1.0 - ty.fx);
  const double w01 = (1.0 - tx.fx) * ty.fx;
  const double w11 = tx.fx * ty.fx;
  return {w00 * p00.r + w10 * p10.r + w01 * p01.r + w11 * p11.r,
          w00 * p00.g + w10 * p10.g + w01 * p01.g + w11 * p11.g,
          w00 * p00.b + w10 * p10.b + w01 * p01.b + w11 * p11.b};
}

namespace {

void check_attenuation(double attenuation) {
  if (!(attenuation >= 0.0 && attenuation <= 1.0)) {
    throw std::invalid_argument("attenuation must lie in [0, 1]");
  }
}

}  // namespace

RasterImage attenuate(const RasterImage& img, double attenuation) {
  check_attenuation(attenuation);
  const double gain = 1.0 - attenuation;
  RasterImage out = img;
  for (auto& p : out.pixels) {
    const LinearRgb c = srgb_to_linear(p);
    p = linear_to_srgb({c.r * gain, c.g * gain, c.b * gain}, p.a);
  }
  return out;
}

LinearImage attenuate(const LinearImage& img, double attenuation) {
  check_attenuation(attenuation);
  const auto gain = static_cast<float>(1.0 - attenuation);
  LinearImage out = img;
  for (auto& p : out.pixels) p = {p.r * gain, p.g * gain, p.b * gain};
  return out;
}

LinearImage resample_to_display(const LinearImage& background, int width, int height,
                                const FovMapping& m, unsigned workers) {
  LinearImage out(width, height);
  parallel_rows(height, workers, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y) {
      for (int x = 0; x < width; ++x) {
        const auto c = map_frame_to_background(texel_center(x, width), texel_center(y, height), m);
        const LinearRgb s = sample_bilinear(background, c.i, c.j);
        out.at(x, y) = {static_cast<float>(s.r), static_cast<float>(s.g), static_cast<float>(s.b)};
      }
    }
  });
  return out;
}

Mask foreground_mask(const RasterImage& img) {
  Mask m(img.width, img.height);
  for (std::size_t k = 0; k < img.pixels.size(); ++k) {
    m.values[k] = is_foreground(img.pixels[k], img.has_alpha) ? 1 : 0;
  }
  return m;
}

LinearImage to_linear_image(const RasterImage& img, double gain) {
  LinearImage out(img.width, img.height);
  const auto& lut = detail::srgb_tables().decode;
  for (std::size_t k = 0; k < img.pixels.size(); ++k) {
    const auto& p = img.pixels[k];
    out.pixels[k] = {static_cast<float>(lut[p.r] * gain), static_cast<float>(lut[p.g] * gain),
                     static_cast<float>(lut[p.b] * gain)};
  }
  return out;
}

RasterImage to_raster_image(const LinearImage& img) {
  RasterImage out(img.width, img.height);
  for (std::size_t k = 0; k < img.pixels.size(); ++k) {
    out.pixels[k] = linear_to_srgb(to_linear_rgb(img.pixels[k]));
  }
  return out;
}

}  // namespace cce
