#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "cce/png_io.hpp"
#include "synthetic.hpp"

namespace cce::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double mean_luminance(const RasterImage& img) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& p : img.pixels) {
    if (!is_foreground(p, img.has_alpha)) continue;
    sum += relative_luminance(srgb_to_linear(p));
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

struct FrameInput {
  fs::path path;
  RasterImage image;
};

std::vector<FrameInput> load_backgrounds(const fs::path& background) {
  std::vector<FrameInput> frames;
  for (const auto& p : list_frames(background)) frames.push_back({p, read_png(p)});
  return frames;
}

// Output names: bare for a single frame, prefixed with the frame stem
// otherwise.
std::string output_name(const fs::path& frame, bool multi, const std::string& suffix) {
  return multi ? frame.stem().string() + "_" + suffix : suffix;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

struct PendingOutputs {
  std::vector<std::pair<fs::path, RasterImage>> images;

  void add(const fs::path& p, RasterImage img) { images.emplace_back(p, std::move(img)); }
};

void commit(const RunConfig& cfg, const PendingOutputs& pending, const json& report) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create " + cfg.out_dir.string() + ": " + ec.message());
  for (const auto& [path, img] : pending.images) write_png(path, img);
  if (cfg.emit.report) write_json(cfg.report_path.value_or(cfg.out_dir / "report.json"), report);
}

// Methods side by side; rows are the blend and the enhanced-pixel overlay.
RasterImage comparison_grid(const std::vector<const FrameResult*>& results) {
  constexpr int kGap = 4;
  const int w = results.front()->blended.width;
  const int h = results.front()->blended.height;
  const int n = static_cast<int>(results.size());
  RasterImage grid(n * w + (n - 1) * kGap, 2 * h + kGap, false, Srgb8{0, 0, 0});
  for (int k = 0; k < n; ++k) {
    const RasterImage overlay = overlay_image(results[k]->blended, results[k]->enhanced);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        Srgb8 top = results[k]->blended.at(x, y);
        Srgb8 bottom = overlay.at(x, y);
        top.a = bottom.a = 255;
        grid.at(k * (w + kGap) + x, y) = top;
        grid.at(k * (w + kGap) + x, h + kGap + y) = bottom;
      }
    }
  }
  return grid;
}

void require_inputs(const RunConfig& cfg) {
  if (cfg.virtual_path.empty() || cfg.background_path.empty() || cfg.out_dir.empty()) {
    throw ParameterError("--virtual, --background and --out are required");
  }
}

}  // namespace

void RunConfig::validate() const {
  try {
    pipeline.validate();
  } catch (const std::invalid_argument& e) {
    throw ParameterError(e.what());
  }
  if (methods.empty()) throw ParameterError("at least one method is required");
  if (bench_samples < 1) throw ParameterError("bench samples must be >= 1");
  if (bench_width < 1 || bench_height < 1) throw ParameterError("bench frame size must be positive");
}

FovMapping parse_fov(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw std::invalid_argument("--fov expects SU,SV,BU,BV");
  double v[4];
  for (int k = 0; k < 4; ++k) {
    std::size_t used = 0;
    try {
      v[k] = std::stod(parts[k], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != parts[k].size()) throw std::invalid_argument("--fov: not a number: " + parts[k]);
  }
  return {v[0], v[1], v[2], v[3]};
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  for (const auto& name : split(text, ',')) {
    const auto m = parse_method(name);
    if (!m) throw ParameterError("unknown method: '" + name + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw ParameterError("no method given");
  return out;
}

std::vector<fs::path> list_frames(const fs::path& background) {
  std::error_code ec;
  if (fs::is_directory(background, ec)) {
    std::vector<fs::path> frames;
    for (const auto& entry : fs::directory_iterator(background, ec)) {
      std::string ext = entry.path().extension().string();
      std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
      if (entry.is_regular_file() && ext == ".png") frames.push_back(entry.path());
    }
    if (ec) throw IoError("cannot list " + background.string() + ": " + ec.message());
    if (frames.empty()) throw IoError("no PNG frames in " + background.string());
    std::sort(frames.begin(), frames.end());
    return frames;
  }
  if (!fs::is_regular_file(background, ec)) throw IoError("no such file: " + background.string());
  return {background};
}

json metrics_to_json(const MetricsReport& m, bool include_timing) {
  json j = {
      {"enhanced_percent", m.enhanced_percent},
      {"foreground_pixel_count", m.foreground_pixel_count},
      {"enhanced_pixel_count", m.enhanced_pixel_count},
      {"mean_delta_e_gain", m.mean_delta_e_gain},
      {"mean_display_luminance", m.mean_display_luminance},
  };
  if (include_timing) j["timing_ms"] = m.timing_ms;
  return j;
}

json params_to_json(const RunConfig& cfg) {
  const auto& p = cfg.pipeline;
  return {
      {"lambda_e", p.enhance.lambda_e},
      {"lambda_jnd_scaled", p.enhance.lambda_jnd_scaled},
      {"jnd", p.jnd_unscaled},
      {"blur_kernel", p.blur.kernel_size},
      {"blur_sigma", p.blur.sigma},
      {"attenuation", p.attenuation},
      {"fov", {p.fov.s_u, p.fov.s_v, p.fov.b_u, p.fov.b_v}},
      {"subtract_k_v", p.subtraction.k_v},
      {"subtract_k_b", p.subtraction.k_b},
  };
}

json run_enhance(const RunConfig& cfg) {
  require_inputs(cfg);
  cfg.validate();
  const Method method = cfg.methods.front();
  const RasterImage virt = read_png(cfg.virtual_path);
  const auto frames = load_backgrounds(cfg.background_path);
  const bool multi = frames.size() > 1;

  PendingOutputs pending;
  json report = {{"mode", "enhance"},
                 {"method", method_name(method)},
                 {"virtual", cfg.virtual_path.filename().string()},
                 {"params", params_to_json(cfg)},
                 {"frames", json::array()}};
  const double original_luminance = mean_luminance(virt);
  double percent_sum = 0.0;
  for (const auto& frame : frames) {
    FrameResult r = process_frame(virt, frame.image, method, cfg.pipeline);
    report["frames"].push_back({{"background", frame.path.filename().string()},
                                {"original_mean_display_luminance", original_luminance},
                                {"metrics", metrics_to_json(r.metrics)}});
    percent_sum += r.metrics.enhanced_percent;
    if (cfg.emit.enhanced) pending.add(cfg.out_dir / output_name(frame.path, multi, "enhanced.png"), r.display);
    if (cfg.emit.overlay) {
      pending.add(cfg.out_dir / output_name(frame.path, multi, "overlay.png"), overlay_image(r.blended, r.enhanced));
    }
    if (cfg.emit.blend) pending.add(cfg.out_dir / output_name(frame.path, multi, "blend.png"), std::move(r.blended));
  }
  report["summary"] = {{"frames", frames.size()},
                       {"mean_enhanced_percent", percent_sum / static_cast<double>(frames.size())}};
  commit(cfg, pending, report);
  return report;
}

json run_compare(const RunConfig& cfg) {
  require_inputs(cfg);
  cfg.validate();
  if (cfg.methods.size() < 2) throw ParameterError("comparison needs at least two methods");
  const RasterImage virt = read_png(cfg.virtual_path);
  const auto frames = load_backgrounds(cfg.background_path);
  const bool multi = frames.size() > 1;

  PendingOutputs pending;
  const std::size_t n = cfg.methods.size();
  std::vector<json> per_method(n, json::array());
  std::vector<double> percent_sum(n, 0.0);
  for (const auto& frame : frames) {
    std::vector<FrameResult> results;
    results.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      results.push_back(process_frame(virt, frame.image, cfg.methods[k], cfg.pipeline));
      percent_sum[k] += results.back().metrics.enhanced_percent;
      per_method[k].push_back({{"background", frame.path.filename().string()},
                               {"metrics", metrics_to_json(results.back().metrics)}});
    }
    std::vector<const FrameResult*> ptrs;
    for (const auto& r : results) ptrs.push_back(&r);
    pending.add(cfg.out_dir / output_name(frame.path, multi, "compare.png"), comparison_grid(ptrs));
    for (std::size_t k = 0; k < n; ++k) {
      const std::string name(method_name(cfg.methods[k]));
      if (cfg.emit.enhanced) {
        pending.add(cfg.out_dir / output_name(frame.path, multi, name + "_enhanced.png"), results[k].display);
      }
      if (cfg.emit.blend) {
        pending.add(cfg.out_dir / output_name(frame.path, multi, name + "_blend.png"), results[k].blended);
      }
      if (cfg.emit.overlay) {
        pending.add(cfg.out_dir / output_name(frame.path, multi, name + "_overlay.png"),
                    overlay_image(results[k].blended, results[k].enhanced));
      }
    }
  }

  json methods = json::array();
  std::vector<std::pair<double, std::string>> ranking;
  for (std::size_t k = 0; k < n; ++k) {
    const double mean = percent_sum[k] / static_cast<double>(frames.size());
    const std::string name(method_name(cfg.methods[k]));
    methods.push_back({{"method", name}, {"mean_enhanced_percent", mean}, {"frames", per_method[k]}});
    ranking.emplace_back(mean, name);
  }
  std::stable_sort(ranking.begin(), ranking.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  json rank = json::array();
  for (const auto& [mean, name] : ranking) rank.push_back({{"method", name}, {"mean_enhanced_percent", mean}});

  const json report = {{"mode", "compare"},
                       {"virtual", cfg.virtual_path.filename().string()},
                       {"params", params_to_json(cfg)},
                       {"original_mean_display_luminance", mean_luminance(virt)},
                       {"methods", methods},
                       {"ranking", rank}};
  commit(cfg, pending, report);
  return report;
}

json run_bench(const RunConfig& cfg) {
  cfg.validate();
  const Method method = cfg.methods.front();
  const RasterImage background = cfg.background_path.empty()
                                     ? make_background("foliage", cfg.bench_width, cfg.bench_height)
                                     : read_png(list_frames(cfg.background_path).front());

  json levels = json::array();
  double full_display_path = 0.0;
  for (int coverage = 0; coverage <= 100; coverage += 10) {
    const RasterImage virt = make_coverage_frame(cfg.bench_width, cfg.bench_height, coverage);
    process_frame(virt, background, method, cfg.pipeline);  // warm-up
    std::map<std::string, std::vector<double>> samples;
    for (int s = 0; s < cfg.bench_samples; ++s) {
      const FrameResult r = process_frame(virt, background, method, cfg.pipeline);
      for (const auto& [stage, ms] : r.metrics.timing_ms) samples[stage].push_back(ms);
    }
    json stages = json::object();
    for (const auto& [stage, v] : samples) {
      const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
      stages[stage] = {{"mean_ms", mean},
                       {"min_ms", *std::min_element(v.begin(), v.end())},
                       {"max_ms", *std::max_element(v.begin(), v.end())}};
      if (coverage == 100 && stage == "display_path") full_display_path = mean;
    }
    levels.push_back({{"coverage_percent", coverage},
                      {"foreground_pixels", foreground_mask(virt).count()},
                      {"stages", stages}});
    std::cout << "coverage " << std::setw(3) << coverage << "%  display_path "
              << std::fixed << std::setprecision(2) << stages["display_path"]["mean_ms"].get<double>()
              << " ms  optimize " << stages["optimize"]["mean_ms"].get<double>() << " ms  total "
              << stages["total"]["mean_ms"].get<double>() << " ms\n";
  }

  const json report = {{"mode", "bench"},
                       {"method", method_name(method)},
                       {"width", cfg.bench_width},
                       {"height", cfg.bench_height},
                       {"samples", cfg.bench_samples},
                       {"workers", cfg.pipeline.workers},
                       {"params", params_to_json(cfg)},
                       {"levels", levels},
                       {"full_coverage_display_path_mean_ms", full_display_path}};
  if (cfg.report_path || !cfg.out_dir.empty()) {
    if (!cfg.out_dir.empty()) {
      std::error_code ec;
      fs::create_directories(cfg.out_dir, ec);
      if (ec) throw IoError("cannot create " + cfg.out_dir.string() + ": " + ec.message());
    }
    write_json(cfg.report_path.value_or(cfg.out_dir / "bench.json"), report);
  }
  return report;
}

namespace {

// Reads "key = value" lines ('#' comments) into long-option arguments.
std::vector<std::string> config_arguments(const fs::path& path, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ConversionError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key == "config") throw CLI::ConversionError(path.string() + ": nested config is not supported");
    if (app.get_option_no_throw("--" + key) == nullptr) throw CLI::ConversionError(path.string() + ": unknown key '" + key + "'");
    // --key=value also covers flags, which accept true/false.
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string virtual_path, background_path, out_dir, report_path, fov_text = "0.65,0.65,0.13,0.17",
                                                                    method_text = "ours", config_path;
  double lambda_e = cfg.pipeline.enhance.lambda_e;
  double jnd = kJndUnscaled;
  unsigned threads = 0;

  CLI::App app{"Color contrast enhancement for optical see-through displays"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--virtual", virtual_path, "Rendered virtual content (PNG, alpha = coverage)");
  app.add_option("--background", background_path, "Background capture: PNG file or directory of frames");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--lambda-e", lambda_e, "Maximum shift in scaled LAB")->capture_default_str();
  app.add_option("--jnd", jnd, "Just noticeable difference, unscaled CIELAB")->capture_default_str();
  app.add_option("--blur-sigma", cfg.pipeline.blur.sigma, "Background blur sigma")->capture_default_str();
  app.add_option("--blur-kernel", cfg.pipeline.blur.kernel_size, "Background blur kernel size (odd)")
      ->capture_default_str();
  app.add_option("--attenuation", cfg.pipeline.attenuation, "Combiner attenuation in [0, 1]")
      ->capture_default_str();
  app.add_option("--fov", fov_text, "Field-of-view mapping SU,SV,BU,BV")->capture_default_str();
  app.add_option("--method", method_text,
                 "ours, subtract, lumchroma, opposite-hue or none; a comma list compares methods")
      ->capture_default_str();
  app.add_flag("--emit-overlay", cfg.emit.overlay, "Also write the enhanced-pixel overlay");
  app.add_option("--report", report_path, "Report path (default <out>/report.json)");
  app.add_flag("--bench", cfg.bench, "Run the throughput benchmark");
  app.add_option("--bench-samples", cfg.bench_samples, "Samples per coverage level")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  app.add_option("--config", config_path, "Key = value file; command-line flags win");

  std::vector<std::string> args;
  for (int k = argc - 1; k >= 1; --k) args.emplace_back(argv[k]);
  try {
    // Locate --config first so its values can be placed before the real
    // flags, which then win under TakeLast.
    for (std::size_t k = 0; k < args.size(); ++k) {
      const std::string& a = args[k];
      if (a.rfind("--config=", 0) == 0) config_path = a.substr(9);
      if (a == "--config" && k > 0) config_path = args[k - 1];
    }
    if (!config_path.empty()) {
      auto extra = config_arguments(config_path, app);
      for (auto it = extra.rbegin(); it != extra.rend(); ++it) args.push_back(*it);
    }
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    cfg.virtual_path = virtual_path;
    cfg.background_path = background_path;
    cfg.out_dir = out_dir;
    if (!report_path.empty()) cfg.report_path = report_path;
    cfg.pipeline.enhance.lambda_e = lambda_e;
    cfg.pipeline.jnd_unscaled = jnd;
    cfg.pipeline.enhance.lambda_jnd_scaled = jnd / kScaleAb;
    cfg.pipeline.workers = threads;
    try {
      cfg.pipeline.fov = parse_fov(fov_text);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    cfg.methods = parse_methods(method_text);

    if (cfg.bench) {
      run_bench(cfg);
    } else if (cfg.virtual_path.empty() || cfg.background_path.empty() || cfg.out_dir.empty()) {
      std::cerr << "error: --virtual, --background and --out are required\n" << app.help();
      return kExitUsage;
    } else if (cfg.methods.size() > 1) {
      const json report = run_compare(cfg);
      for (const auto& r : report["ranking"]) {
        std::cout << r["method"].get<std::string>() << ": " << r["mean_enhanced_percent"].get<double>()
                  << "% enhanced\n";
      }
    } else {
      const json report = run_enhance(cfg);
      std::cout << "enhanced " << report["summary"]["mean_enhanced_percent"].get<double>()
                << "% of foreground pixels\n";
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidParameter;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace cce::cli
