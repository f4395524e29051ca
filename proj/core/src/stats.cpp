#include "glare/stats.hpp"

#include <algorithm>
#include <cmath>

namespace glare {

double mean_of(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
    if (values.empty()) return {0.0, 0.0};
    double mn = values[0], mx = values[0], sum = 0.0;
    for (double v : values) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
        sum += v;
    }
    // Constant input must give sigma exactly 0, not rounding dust.
    if (mn == mx) return {mn, 0.0};
    double mu = sum / static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) {
        double d = v - mu;
        acc += d * d;
    }
    return {mu, std::sqrt(acc / static_cast<double>(values.size()))};
}

Raster local_variance(const Raster& chan, int window) {
    if (window < 1 || window % 2 == 0) {
        throw UsageError("local_variance: window must be a positive odd integer, got " +
                         std::to_string(window));
    }
    Raster out(chan.width, chan.height);
    const int r = window / 2;
    const double n = static_cast<double>(window) * window;
    for (int row = 0; row < chan.height; ++row) {
        for (int col = 0; col < chan.width; ++col) {
            double sum = 0.0, sq = 0.0;
            double wmin = chan.at(std::clamp(row - r, 0, chan.height - 1),
                                  std::clamp(col - r, 0, chan.width - 1));
            double wmax = wmin;
            for (int dr = -r; dr <= r; ++dr) {
                int rr = std::clamp(row + dr, 0, chan.height - 1);
                for (int dc = -r; dc <= r; ++dc) {
                    int cc = std::clamp(col + dc, 0, chan.width - 1);
                    double v = chan.at(rr, cc);
                    sum += v;
                    sq += v * v;
                    wmin = std::min(wmin, v);
                    wmax = std::max(wmax, v);
                }
            }
            if (wmin == wmax) {
                out.at(row, col) = 0.0;
                continue;
            }
            double mu = sum / n;
            out.at(row, col) = std::max(0.0, sq / n - mu * mu);
        }
    }
    return out;
}

Raster zscore_normalize(const Raster& chan) {
    auto [mu, sigma] = mean_std(chan.values);
    Raster out(chan.width, chan.height);
    if (sigma <= 0.0) return out;
    for (size_t i = 0; i < chan.values.size(); ++i) {
        out.values[i] = (chan.values[i] - mu) / sigma;
    }
    return out;
}

Raster minmax_normalize(const Raster& chan) {
    Raster out(chan.width, chan.height);
    if (chan.values.empty()) return out;
    auto [mn_it, mx_it] = std::minmax_element(chan.values.begin(), chan.values.end());
    double mn = *mn_it, mx = *mx_it;
    if (mx <= mn) return out;
    double scale = 1.0 / (mx - mn);
    for (size_t i = 0; i < chan.values.size(); ++i) {
        out.values[i] = (chan.values[i] - mn) * scale;
    }
    return out;
}

} // namespace glare
