#ifndef GLARE_IMAGE_IO_HPP
#define GLARE_IMAGE_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "glare/image.hpp"

namespace glare {

// Frames: 8-bit RGB PNG or binary PPM (P6); samples map to reals by v/255.
// load_image dispatches on the file extension (.png / .ppm).
RasterImage load_image(const std::filesystem::path& path);
void save_image(const RasterImage& img, const std::filesystem::path& path);

RasterImage load_png(const std::filesystem::path& path);
void save_png(const RasterImage& img, const std::filesystem::path& path);
RasterImage load_ppm(const std::filesystem::path& path);
void save_ppm(const RasterImage& img, const std::filesystem::path& path);

// Masks: 8-bit grayscale PNG, 0 background / 255 reflection; any sample
// >= 128 reads back as set.
BinaryMask load_mask(const std::filesystem::path& path);
void save_mask(const BinaryMask& mask, const std::filesystem::path& path);

// Width/height from the PNG or PPM header without decoding pixel data.
std::optional<std::pair<int, int>> probe_dimensions(const std::filesystem::path& path);

} // namespace glare

#endif
