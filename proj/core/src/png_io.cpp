#include "cce/png_io.hpp"

#include <png.h>

#include <cstring>
#include <vector>

namespace cce {

RasterImage read_png(const std::filesystem::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw IoError("cannot read PNG '" + path.string() + "': " + image.message);
  }
  const bool has_alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  image.format = PNG_FORMAT_RGBA;
  if (image.width < 1 || image.height < 1) {
    png_image_free(&image);
    throw IoError("PNG '" + path.string() + "' has no pixels");
  }
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    const std::string message = image.message;
    png_image_free(&image);
    throw IoError("cannot decode PNG '" + path.string() + "': " + message);
  }
  RasterImage out(static_cast<int>(image.width), static_cast<int>(image.height), has_alpha);
  for (std::size_t k = 0; k < out.pixels.size(); ++k) {
    const png_byte* p = &buffer[4 * k];
    out.pixels[k] = {p[0], p[1], p[2], has_alpha ? p[3] : png_byte{255}};
  }
  return out;
}

void write_png(const std::filesystem::path& path, const RasterImage& img) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  const int channels = img.has_alpha ? 4 : 3;
  image.format = img.has_alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
  std::vector<png_byte> buffer(img.pixels.size() * channels);
  for (std::size_t k = 0; k < img.pixels.size(); ++k) {
    const Srgb8& p = img.pixels[k];
    png_byte* q = &buffer[channels * k];
    q[0] = p.r;
    q[1] = p.g;
    q[2] = p.b;
    if (img.has_alpha) q[3] = p.a;
  }
  if (!png_image_write_to_file(&image, path.c_str(), 0, buffer.data(), 0, nullptr)) {
    throw IoError("cannot write PNG '" + path.string() + "': " + image.message);
  }
}

}  // namespace cce
