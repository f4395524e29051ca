#ifndef GLARE_DETECT_HSV_HPP
#define GLARE_DETECT_HSV_HPP

#include "glare/image.hpp"

namespace glare {

// Per-pixel detection score; the upper tail marks reflections.
using HsvCostMap = Raster;

enum class ThresholdMode { FixedK, Percentile };

struct HsvDetectorParams {
    double k = 4.5;                            // FixedK multiplier
    ThresholdMode mode = ThresholdMode::FixedK;
    double pixel_fraction = 0.006;             // Percentile budget, in (0,1)
};

// Min-max normalized 3x3 local hue variance.
Raster hue_term(const Raster& h);

// max(0, zscore(-S) + 1): low saturation scores high, ramp kills the rest.
Raster saturation_term(const Raster& s);

// max(0, zscore(V) + 1): bright pixels score high.
Raster value_term(const Raster& v);

// hue_term(H) + saturation_term(S) * value_term(V), elementwise.
HsvCostMap cost_map(const RasterImage& img);

// FixedK: score > mu + k*sigma. Percentile: exactly floor(fraction*W*H)
// highest-scoring pixels, row-major order breaking ties (lower index wins).
BinaryMask threshold_cost(const HsvCostMap& cost, const HsvDetectorParams& params);

BinaryMask detect_hsv(const RasterImage& img, const HsvDetectorParams& params = {});

} // namespace glare

#endif
