#include "glare/detect_hsv.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "glare/color.hpp"
#include "glare/stats.hpp"

namespace glare {

Raster hue_term(const Raster& h) {
    return minmax_normalize(local_variance(h, 3));
}

Raster saturation_term(const Raster& s) {
    Raster neg(s.width, s.height);
    for (size_t i = 0; i < s.values.size(); ++i) neg.values[i] = -s.values[i];
    Raster z = zscore_normalize(neg);
    for (double& v : z.values) v = std::max(0.0, v + 1.0);
    return z;
}

Raster value_term(const Raster& v) {
    Raster z = zscore_normalize(v);
    for (double& x : z.values) x = std::max(0.0, x + 1.0);
    return z;
}

HsvCostMap cost_map(const RasterImage& img) {
    require_space(img, ColorSpace::Hsv, "cost_map");
    Raster hterm = hue_term(img.planes[0]);
    Raster sterm = saturation_term(img.planes[1]);
    Raster vterm = value_term(img.planes[2]);
    HsvCostMap cost(img.width, img.height);
    for (size_t i = 0; i < cost.values.size(); ++i) {
        cost.values[i] = hterm.values[i] + sterm.values[i] * vterm.values[i];
    }
    return cost;
}

BinaryMask threshold_cost(const HsvCostMap& cost, const HsvDetectorParams& params) {
    BinaryMask mask(cost.width, cost.height);
    if (params.mode == ThresholdMode::FixedK) {
        auto [mu, sigma] = mean_std(cost.values);
        double cutoff = mu + params.k * sigma;
        for (size_t i = 0; i < cost.values.size(); ++i) {
            mask.bits[i] = cost.values[i] > cutoff ? 1 : 0;
        }
        return mask;
    }

    size_t total = cost.values.size();
    size_t budget = static_cast<size_t>(std::floor(params.pixel_fraction * static_cast<double>(total)));
    if (budget < 1) {
        std::cerr << "warning: percentile budget rounds to zero pixels ("
                  << params.pixel_fraction << " of " << total << "), mask left empty\n";
        return mask;
    }
    std::vector<size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::nth_element(order.begin(), order.begin() + (budget - 1), order.end(),
                     [&cost](size_t a, size_t b) {
                         if (cost.values[a] != cost.values[b]) return cost.values[a] > cost.values[b];
                         return a < b;
                     });
    for (size_t i = 0; i < budget; ++i) mask.bits[order[i]] = 1;
    return mask;
}

BinaryMask detect_hsv(const RasterImage& img, const HsvDetectorParams& params) {
    require_space(img, ColorSpace::Rgb, "detect_hsv");
    return threshold_cost(cost_map(rgb_to_hsv(img)), params);
}

} // namespace glare
