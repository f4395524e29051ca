#include "glare/features.hpp"

#include "glare/color.hpp"
#include "glare/stats.hpp"

namespace glare {

FeatureVector extract_features(const RasterImage& img) {
    require_space(img, ColorSpace::Rgb, "extract_features");
    RasterImage hsv = rgb_to_hsv(img);
    FeatureVector f{};
    for (int c = 0; c < 3; ++c) {
        auto [mu, sd] = mean_std(img.planes[c].values);
        f[2 * c] = mu;
        f[2 * c + 1] = sd;
    }
    for (int c = 0; c < 3; ++c) {
        auto [mu, sd] = mean_std(hsv.planes[c].values);
        f[6 + 2 * c] = mu;
        f[6 + 2 * c + 1] = sd;
    }
    return f;
}

FeatureVector FeatureNormalizer::apply(const FeatureVector& f) const {
    FeatureVector out{};
    for (int i = 0; i < kFeatureCount; ++i) {
        out[i] = std[i] > 0.0 ? (f[i] - mean[i]) / std[i] : 0.0;
    }
    return out;
}

FeatureNormalizer fit_normalizer(const std::vector<FeatureVector>& examples) {
    if (examples.empty()) throw UsageError("fit_normalizer: empty example set");
    FeatureNormalizer n;
    std::vector<double> column(examples.size());
    for (int i = 0; i < kFeatureCount; ++i) {
        for (size_t j = 0; j < examples.size(); ++j) column[j] = examples[j][i];
        auto [mu, sd] = mean_std(column);
        n.mean[i] = mu;
        n.std[i] = sd;
    }
    return n;
}

} // namespace glare
