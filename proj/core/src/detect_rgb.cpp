#include "glare/detect_rgb.hpp"

#include "glare/stats.hpp"

namespace glare {

BinaryMask channel_threshold(const Raster& chan, double k) {
    auto [mu, sigma] = mean_std(chan.values);
    double cutoff = mu + k * sigma;
    BinaryMask mask(chan.width, chan.height);
    for (size_t i = 0; i < chan.values.size(); ++i) {
        mask.bits[i] = chan.values[i] > cutoff ? 1 : 0;
    }
    return mask;
}

BinaryMask detect_rgb(const RasterImage& img, const RgbDetectorParams& params) {
    require_space(img, ColorSpace::Rgb, "detect_rgb");
    BinaryMask votes[3] = {
        channel_threshold(img.planes[0], params.k_rgb),
        channel_threshold(img.planes[1], params.k_rgb),
        channel_threshold(img.planes[2], params.k_rgb),
    };
    BinaryMask out(img.width, img.height);
    for (size_t i = 0; i < out.bits.size(); ++i) {
        int n = votes[0].bits[i] + votes[1].bits[i] + votes[2].bits[i];
        out.bits[i] = n >= 2 ? 1 : 0;
    }
    return out;
}

} // namespace glare
