#ifndef GLARE_IMAGE_HPP
#define GLARE_IMAGE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "glare/errors.hpp"

namespace glare {

enum class ColorSpace { Rgb, Hsv };

// Single-channel 2D raster of reals, row-major. Also used for cost maps
// and the per-channel intermediate terms of the HSV detector.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    Raster() = default;
    Raster(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    double& at(int row, int col) { return values[static_cast<size_t>(row) * width + col]; }
    double at(int row, int col) const { return values[static_cast<size_t>(row) * width + col]; }
    size_t size() const { return values.size(); }
};

// Three-plane image with a color-space tag. Samples live in [0,1];
// hue is scaled so the full circle is [0,1).
struct RasterImage {
    int width = 0;
    int height = 0;
    ColorSpace space = ColorSpace::Rgb;
    std::array<Raster, 3> planes;

    RasterImage() = default;
    RasterImage(int w, int h, ColorSpace s, double fill = 0.0)
        : width(w), height(h), space(s), planes{Raster(w, h, fill), Raster(w, h, fill), Raster(w, h, fill)} {}

    double& at(int plane, int row, int col) { return planes[plane].at(row, col); }
    double at(int plane, int row, int col) const { return planes[plane].at(row, col); }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Boolean raster marking reflection pixels. uint8_t storage, 0 or 1.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false)
        : width(w), height(h), bits(static_cast<size_t>(w) * h, fill ? 1 : 0) {}

    bool at(int row, int col) const { return bits[static_cast<size_t>(row) * width + col] != 0; }
    void set(int row, int col, bool v = true) { bits[static_cast<size_t>(row) * width + col] = v ? 1 : 0; }
    size_t count() const {
        size_t n = 0;
        for (uint8_t b : bits) n += b;
        return n;
    }
    bool same_size(const BinaryMask& other) const {
        return width == other.width && height == other.height;
    }
};

inline void require_space(const RasterImage& img, ColorSpace expected, const char* op) {
    if (img.space != expected) {
        throw UsageError(std::string(op) + ": image is tagged " +
                         (img.space == ColorSpace::Rgb ? "RGB" : "HSV") + ", expected " +
                         (expected == ColorSpace::Rgb ? "RGB" : "HSV"));
    }
}

} // namespace glare

#endif
