// Regenerates the bundled test fixtures:
//   make_fixtures OUT_DIR
// writes virtual_scene.png and backgrounds/<nn>_<kind>.png.

#include <cstdio>
#include <filesystem>
#include <string>

#include "cce/png_io.hpp"
#include "cli/synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s OUT_DIR\n", argv[0]);
    return 1;
  }
  const std::filesystem::path out = argv[1];
  std::filesystem::create_directories(out / "backgrounds");
  try {
    cce::write_png(out / "virtual_scene.png", cce::cli::make_virtual_scene(320, 180));
    int index = 0;
    for (const auto& kind : cce::cli::background_kinds()) {
      char prefix[16];
      std::snprintf(prefix, sizeof prefix, "%02d_", index++);
      cce::write_png(out / "backgrounds" / (prefix + kind + ".png"), cce::cli::make_background(kind, 480, 270));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
