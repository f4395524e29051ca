#ifndef GLARE_FEATURES_HPP
#define GLARE_FEATURES_HPP

#include <array>
#include <vector>

#include "glare/image.hpp"

namespace glare {

// Fixed order: (mu_R, sd_R, mu_G, sd_G, mu_B, sd_B, mu_H, sd_H, mu_S, sd_S, mu_V, sd_V).
// Model files rely on this order implicitly by position.
constexpr int kFeatureCount = 12;
using FeatureVector = std::array<double, kFeatureCount>;

// Per-channel mean and population std over RGB and the internally derived HSV.
FeatureVector extract_features(const RasterImage& img);

// Per-feature training-set statistics; coordinates with std 0 map to 0.
struct FeatureNormalizer {
    FeatureVector mean{};
    FeatureVector std{};

    FeatureVector apply(const FeatureVector& f) const;
};

FeatureNormalizer fit_normalizer(const std::vector<FeatureVector>& examples);

} // namespace glare

#endif
