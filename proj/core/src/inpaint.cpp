#include "glare/inpaint.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "glare/rng.hpp"
#include "glare/stats.hpp"

namespace glare {

namespace {

bool rect_in_bounds(const BBox& r, int width, int height) {
    return r.top >= 0 && r.left >= 0 && r.top + r.height <= height && r.left + r.width <= width;
}

bool rect_touches_mask(const BBox& r, const BinaryMask& mask) {
    for (int row = r.top; row < r.top + r.height; ++row) {
        for (int col = r.left; col < r.left + r.width; ++col) {
            if (mask.at(row, col)) return true;
        }
    }
    return false;
}

std::array<double, 3> rect_channel_means(const BBox& r, const RasterImage& img) {
    std::array<double, 3> out{};
    double n = static_cast<double>(r.height) * r.width;
    for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int row = r.top; row < r.top + r.height; ++row) {
            for (int col = r.left; col < r.left + r.width; ++col) sum += img.at(c, row, col);
        }
        out[c] = sum / n;
    }
    return out;
}

std::array<double, 3> rect_channel_stds(const BBox& r, const RasterImage& img,
                                        const std::array<double, 3>& means) {
    std::array<double, 3> out{};
    double n = static_cast<double>(r.height) * r.width;
    for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (int row = r.top; row < r.top + r.height; ++row) {
            for (int col = r.left; col < r.left + r.width; ++col) {
                double d = img.at(c, row, col) - means[c];
                acc += d * d;
            }
        }
        out[c] = std::sqrt(acc / n);
    }
    return out;
}

// Pixels ordered by angle around a center, so the sequence walks around the
// ring; (row, col) breaks exact-angle ties.
std::vector<std::pair<int, int>> angular_order(std::vector<std::pair<int, int>> pixels,
                                               double center_row, double center_col) {
    std::sort(pixels.begin(), pixels.end(),
              [center_row, center_col](const auto& a, const auto& b) {
                  double aa = std::atan2(a.first - center_row, a.second - center_col);
                  double ab = std::atan2(b.first - center_row, b.second - center_col);
                  if (aa != ab) return aa < ab;
                  return a < b;
              });
    return pixels;
}

// Nearest-index resample of a per-channel sequence to length target.
std::vector<double> resample(const std::vector<double>& seq, size_t target) {
    std::vector<double> out(target);
    for (size_t t = 0; t < target; ++t) {
        out[t] = seq[t * seq.size() / target];
    }
    return out;
}

double centered_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    double ma = mean_of(a), mb = mean_of(b);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        dot += da * db;
        na += da * da;
        nb += db * db;
    }
    if (na <= 0.0 || nb <= 0.0) return 0.0; // constant sequence convention
    return dot / std::sqrt(na * nb);
}

// Channel-averaged normalized cross-correlation between the candidate
// rect's inner border and the hole ring, both walked by angle.
double border_correlation(const BBox& rect, const std::vector<std::pair<int, int>>& ring,
                          const RasterImage& img) {
    if (ring.empty()) return 0.0;

    std::vector<std::pair<int, int>> border;
    for (int col = rect.left; col < rect.left + rect.width; ++col) {
        border.emplace_back(rect.top, col);
        if (rect.height > 1) border.emplace_back(rect.top + rect.height - 1, col);
    }
    for (int row = rect.top + 1; row < rect.top + rect.height - 1; ++row) {
        border.emplace_back(row, rect.left);
        if (rect.width > 1) border.emplace_back(row, rect.left + rect.width - 1);
    }

    double rc = rect.top + (rect.height - 1) / 2.0;
    double cc = rect.left + (rect.width - 1) / 2.0;
    border = angular_order(std::move(border), rc, cc);

    double ring_rc = 0.0, ring_cc = 0.0;
    for (auto [r, c] : ring) {
        ring_rc += r;
        ring_cc += c;
    }
    ring_rc /= static_cast<double>(ring.size());
    ring_cc /= static_cast<double>(ring.size());
    auto ring_ordered = angular_order(ring, ring_rc, ring_cc);

    size_t len = std::max(border.size(), ring_ordered.size());
    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> a(border.size()), b(ring_ordered.size());
        for (size_t i = 0; i < border.size(); ++i) a[i] = img.at(c, border[i].first, border[i].second);
        for (size_t i = 0; i < ring_ordered.size(); ++i) {
            b[i] = img.at(c, ring_ordered[i].first, ring_ordered[i].second);
        }
        total += centered_correlation(resample(a, len), resample(b, len));
    }
    return total / 3.0;
}

std::array<double, 3> pixel_list_means(const std::vector<std::pair<int, int>>& pixels,
                                       const RasterImage& img) {
    std::array<double, 3> out{};
    for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (auto [r, col] : pixels) sum += img.at(c, r, col);
        out[c] = sum / static_cast<double>(pixels.size());
    }
    return out;
}

std::array<double, 3> pixel_list_stds(const std::vector<std::pair<int, int>>& pixels,
                                      const RasterImage& img, const std::array<double, 3>& means) {
    std::array<double, 3> out{};
    for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (auto [r, col] : pixels) {
            double d = img.at(c, r, col) - means[c];
            acc += d * d;
        }
        out[c] = std::sqrt(acc / static_cast<double>(pixels.size()));
    }
    return out;
}

void inpaint_component_inplace(RasterImage& img, const BinaryMask& mask,
                               const ComponentRegion& component);
void smooth_edges_inplace(RasterImage& img, const ComponentRegion& component,
                          const SmoothingSchedule& schedule);

} // namespace

std::vector<std::pair<int, int>> ring_pixels(const ComponentRegion& component,
                                             const BinaryMask& mask) {
    std::vector<uint8_t> seen(static_cast<size_t>(mask.width) * mask.height, 0);
    std::vector<std::pair<int, int>> ring;
    for (auto [r, c] : component.pixels) {
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                int rr = r + dr, cc = c + dc;
                if (rr < 0 || rr >= mask.height || cc < 0 || cc >= mask.width) continue;
                size_t idx = static_cast<size_t>(rr) * mask.width + cc;
                if (seen[idx] || mask.at(rr, cc)) continue;
                seen[idx] = 1;
                ring.emplace_back(rr, cc);
            }
        }
    }
    std::sort(ring.begin(), ring.end());
    return ring;
}

std::vector<PatchCandidate> candidate_patches(const ComponentRegion& component,
                                              const RasterImage& img, const BinaryMask& mask) {
    const BBox& b = component.bbox;
    const std::pair<PatchDirection, BBox> placements[4] = {
        {PatchDirection::Above, {b.top - b.height, b.left, b.height, b.width}},
        {PatchDirection::Below, {b.top + b.height, b.left, b.height, b.width}},
        {PatchDirection::Left, {b.top, b.left - b.width, b.height, b.width}},
        {PatchDirection::Right, {b.top, b.left + b.width, b.height, b.width}},
    };

    auto ring = ring_pixels(component, mask);

    std::vector<PatchCandidate> out;
    for (const auto& [dir, rect] : placements) {
        if (!rect_in_bounds(rect, img.width, img.height)) continue;
        if (rect_touches_mask(rect, mask)) continue;
        PatchCandidate cand;
        cand.direction = dir;
        cand.rect = rect;
        cand.mean = rect_channel_means(rect, img);
        cand.std = rect_channel_stds(rect, img, cand.mean);
        cand.nc = border_correlation(rect, ring, img);
        out.push_back(cand);
    }
    return out;
}

double patch_cost(PatchCandidate& candidate, const std::array<double, 3>& ring_mean,
                  const std::array<double, 3>& ring_std, double hole_centroid_row,
                  double hole_centroid_col, double image_diagonal) {
    double dm = 0.0, ds = 0.0;
    for (int c = 0; c < 3; ++c) {
        dm += std::abs(candidate.mean[c] - ring_mean[c]);
        ds += std::abs(candidate.std[c] - ring_std[c]);
    }
    candidate.delta_mean = dm / 3.0;
    candidate.delta_std = ds / 3.0;

    double rc = candidate.rect.top + (candidate.rect.height - 1) / 2.0;
    double cc = candidate.rect.left + (candidate.rect.width - 1) / 2.0;
    candidate.distance =
        std::hypot(rc - hole_centroid_row, cc - hole_centroid_col) / image_diagonal;

    candidate.cost =
        candidate.delta_mean * candidate.delta_std * candidate.distance * (1.0 - candidate.nc);
    return candidate.cost;
}

namespace {

void inpaint_component_inplace(RasterImage& img, const BinaryMask& mask,
                               const ComponentRegion& component) {
    auto ring = ring_pixels(component, mask);
    auto candidates = candidate_patches(component, img, mask);

    if (candidates.empty()) {
        std::array<double, 3> fill;
        if (!ring.empty()) {
            fill = pixel_list_means(ring, img);
        } else {
            std::cerr << "warning: component at (" << component.bbox.top << ","
                      << component.bbox.left
                      << ") has no clean ring or candidate patch, filling with global mean\n";
            for (int c = 0; c < 3; ++c) fill[c] = mean_of(img.planes[c].values);
        }
        for (auto [r, c] : component.pixels) {
            for (int ch = 0; ch < 3; ++ch) img.at(ch, r, c) = fill[ch];
        }
        return;
    }

    std::array<double, 3> ring_mean{}, ring_std{};
    if (!ring.empty()) {
        ring_mean = pixel_list_means(ring, img);
        ring_std = pixel_list_stds(ring, img, ring_mean);
    }
    double diagonal = std::hypot(static_cast<double>(img.width), static_cast<double>(img.height));

    size_t best = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        patch_cost(candidates[i], ring_mean, ring_std, component.centroid_row,
                   component.centroid_col, diagonal);
        if (candidates[i].cost < candidates[best].cost) best = i; // ties keep A,B,L,R order
    }

    const BBox& src = candidates[best].rect;
    const BBox& dst = component.bbox;
    for (auto [r, c] : component.pixels) {
        int sr = src.top + (r - dst.top);
        int sc = src.left + (c - dst.left);
        for (int ch = 0; ch < 3; ++ch) img.at(ch, r, c) = img.at(ch, sr, sc);
    }
}

void smooth_edges_inplace(RasterImage& img, const ComponentRegion& component,
                          const SmoothingSchedule& schedule) {
    const int w = img.width, h = img.height;

    BinaryMask comp_mask(w, h);
    for (auto [r, c] : component.pixels) comp_mask.set(r, c);

    // Two-pixel starting band: the component's outermost layer plus its
    // exterior 1-pixel boundary.
    BinaryMask ring(w, h);
    for (auto [r, c] : component.pixels) {
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                int rr = r + dr, cc = c + dc;
                if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                if (!comp_mask.at(rr, cc)) {
                    ring.set(rr, cc);     // exterior boundary pixel
                    ring.set(r, c);       // component pixel on the outermost layer
                }
            }
        }
    }

    // The draw stream depends only on (seed, component position), so far-apart
    // components smooth identically whether processed together or alone.
    Rng rng(mix_seed(schedule.seed,
                     (static_cast<uint64_t>(static_cast<uint32_t>(component.bbox.top)) << 32) |
                         static_cast<uint32_t>(component.bbox.left)));

    for (double coeff : schedule.coefficients) {
        if (ring.count() == 0) break;
        RasterImage snapshot = img; // patch statistics read the iteration-start state
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                if (!ring.at(r, c)) continue;
                for (int ch = 0; ch < 3; ++ch) {
                    double sum = 0.0, sq = 0.0;
                    double wmin = snapshot.at(ch, r, c), wmax = wmin;
                    for (int dr = -1; dr <= 1; ++dr) {
                        int rr = std::clamp(r + dr, 0, h - 1);
                        for (int dc = -1; dc <= 1; ++dc) {
                            int cc = std::clamp(c + dc, 0, w - 1);
                            double v = snapshot.at(ch, rr, cc);
                            sum += v;
                            sq += v * v;
                            wmin = std::min(wmin, v);
                            wmax = std::max(wmax, v);
                        }
                    }
                    double z = rng.normal();
                    if (wmin == wmax) continue; // constant patch: draw == mean == current value
                    double m = sum / 9.0;
                    double var = std::max(0.0, sq / 9.0 - m * m);
                    double draw = m + coeff * std::sqrt(var) * z;
                    img.at(ch, r, c) = std::clamp(draw, 0.0, 1.0);
                }
            }
        }
        // Next generation: grow the band by one pixel, keep only fresh pixels.
        BinaryMask grown = dilate(ring);
        for (size_t i = 0; i < grown.bits.size(); ++i) {
            grown.bits[i] = grown.bits[i] && !ring.bits[i];
        }
        ring = std::move(grown);
    }
}

} // namespace

RasterImage inpaint_component(const RasterImage& img, const BinaryMask& mask,
                              const ComponentRegion& component) {
    RasterImage out = img;
    inpaint_component_inplace(out, mask, component);
    return out;
}

RasterImage smooth_edges(const RasterImage& img, const BinaryMask& mask,
                         const ComponentRegion& component, const SmoothingSchedule& schedule) {
    (void)mask;
    RasterImage out = img;
    smooth_edges_inplace(out, component, schedule);
    return out;
}

RasterImage inpaint_all(const RasterImage& img, const BinaryMask& mask,
                        const SmoothingSchedule& schedule) {
    if (mask.width != img.width || mask.height != img.height) {
        throw DataError("inpaint_all: mask dimensions do not match image");
    }
    RasterImage out = img;
    for (const auto& component : connected_components(mask)) {
        inpaint_component_inplace(out, mask, component);
        smooth_edges_inplace(out, component, schedule);
    }
    return out;
}

} // namespace glare
