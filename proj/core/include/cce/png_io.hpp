#pragma once

#include <filesystem>
#include <stdexcept>

#include "cce/image.hpp"

namespace cce {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes any PNG to 8-bit sRGB; has_alpha follows the file's color type.
RasterImage read_png(const std::filesystem::path& path);

/// Writes RGBA when img.has_alpha, RGB otherwise.
void write_png(const std::filesystem::path& path, const RasterImage& img);

}  // namespace cce
