#ifndef GLARE_STATS_HPP
#define GLARE_STATS_HPP

#include <utility>

#include "glare/image.hpp"

namespace glare {

// Population (divide-by-N) mean and standard deviation. This convention is
// used everywhere: channel statistics, features, thresholds, patch terms.
double mean_of(const std::vector<double>& values);
std::pair<double, double> mean_std(const std::vector<double>& values);

// Per-pixel population variance over an odd-sized sliding window, borders
// handled by edge replication. Throws UsageError for even/nonpositive sizes.
Raster local_variance(const Raster& chan, int window = 3);

// Maps the raster to mean 0 / population std 1; all zeros when the input
// is constant.
Raster zscore_normalize(const Raster& chan);

// Affine map of [min,max] onto [0,1]; all zeros when the input is constant.
Raster minmax_normalize(const Raster& chan);

} // namespace glare

#endif
