#pragma once

// Deterministic synthetic frames: an AR-style virtual scene on a transparent
// background and a family of textured capture backgrounds. Used to generate
// the bundled fixtures and the benchmark workload.

#include <string>
#include <vector>

#include "cce/image.hpp"

namespace cce::cli {

/// Text, photo panel, UI buttons and props on a transparent canvas.
RasterImage make_virtual_scene(int width, int height);

/// Names accepted by make_background, in fixture order.
const std::vector<std::string>& background_kinds();

/// Opaque textured background of the given kind; throws
/// std::invalid_argument for an unknown kind.
RasterImage make_background(const std::string& kind, int width, int height, unsigned seed = 1);

/// Virtual frame where the first `coverage_percent` of pixels (row-major)
/// carry content tiled from the virtual scene; the rest are transparent.
RasterImage make_coverage_frame(int width, int height, int coverage_percent);

}  // namespace cce::cli
