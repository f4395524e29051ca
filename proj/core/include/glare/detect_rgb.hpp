#ifndef GLARE_DETECT_RGB_HPP
#define GLARE_DETECT_RGB_HPP

#include "glare/image.hpp"

namespace glare {

struct RgbDetectorParams {
    double k_rgb = 4.5; // threshold multiplier shared by all three channels
};

// Pixel set iff value > mu + k*sigma, with mu/sigma over the whole channel.
BinaryMask channel_threshold(const Raster& chan, double k);

// 2-of-3 vote over the per-channel threshold masks.
BinaryMask detect_rgb(const RasterImage& img, const RgbDetectorParams& params = {});

} // namespace glare

#endif
