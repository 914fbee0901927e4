#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cce/pipeline.hpp"

namespace {

std::vector<cce::ScaledLab> random_ball_points(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cce::ScaledLab> out;
  while (out.size() < n) {
    const cce::ScaledLab p{u(rng), u(rng), u(rng)};
    if (p.norm() <= 1.0) out.push_back(p);
  }
  return out;
}

cce::RasterImage textured(int w, int h, bool alpha, unsigned seed) {
  cce::RasterImage img(w, h, alpha);
  std::mt19937 rng(seed);
  for (auto& p : img.pixels) {
    p = {static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), 255};
  }
  return img;
}

void BM_OptimizeColor(benchmark::State& state) {
  const auto d = random_ball_points(4096, 1);
  const auto b = random_ball_points(4096, 2);
  const cce::EnhanceParams p;
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cce::optimize_color(d[k & 4095], b[k & 4095], p));
    ++k;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OptimizeColor);

void BM_LinearToLab(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cce::LinearRgb> c(4096);
  for (auto& v : c) v = {u(rng), u(rng), u(rng)};
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cce::linear_to_lab(c[k++ & 4095]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LinearToLab);

void BM_EnhanceFrame(benchmark::State& state) {
  const auto virt = textured(1268, 720, true, 4);
  const auto bg = cce::to_linear_image(textured(1268, 720, false, 5), 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cce::enhance_frame(virt, bg, cce::FovMapping{}, cce::EnhanceParams{}));
  }
  state.SetItemsProcessed(state.iterations() * 1268 * 720);
}
BENCHMARK(BM_EnhanceFrame)->Unit(benchmark::kMillisecond);

void BM_PrepareBackground(benchmark::State& state) {
  const auto bg = textured(1268, 720, false, 6);
  for (auto _ : state) benchmark::DoNotOptimize(cce::prepare_background(bg, 0.4, cce::BlurParams{}));
}
BENCHMARK(BM_PrepareBackground)->Unit(benchmark::kMillisecond);

void BM_DisplayPath(benchmark::State& state) {
  const auto virt = textured(1268, 720, true, 7);
  const auto bg = textured(1268, 720, false, 8);
  const cce::PipelineConfig cfg;
  for (auto _ : state) {
    const auto blurred = cce::prepare_background(bg, 1.0 - cfg.attenuation, cfg.blur, cfg.workers);
    benchmark::DoNotOptimize(cce::apply_method(cce::Method::kOurs, virt, blurred, cfg));
  }
}
BENCHMARK(BM_DisplayPath)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
