#include "glare/regions.hpp"

#include <algorithm>

namespace glare {

std::vector<ComponentRegion> connected_components(const BinaryMask& mask) {
    const int w = mask.width, h = mask.height;
    std::vector<int> label(static_cast<size_t>(w) * h, -1);
    std::vector<ComponentRegion> out;

    std::vector<std::pair<int, int>> stack;
    for (int row = 0; row < h; ++row) {
        for (int col = 0; col < w; ++col) {
            if (!mask.at(row, col) || label[static_cast<size_t>(row) * w + col] >= 0) continue;
            int id = static_cast<int>(out.size());
            ComponentRegion region;
            stack.clear();
            stack.emplace_back(row, col);
            label[static_cast<size_t>(row) * w + col] = id;
            while (!stack.empty()) {
                auto [r, c] = stack.back();
                stack.pop_back();
                region.pixels.emplace_back(r, c);
                for (int dr = -1; dr <= 1; ++dr) {
                    for (int dc = -1; dc <= 1; ++dc) {
                        if (dr == 0 && dc == 0) continue;
                        int rr = r + dr, cc = c + dc;
                        if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                        size_t idx = static_cast<size_t>(rr) * w + cc;
                        if (mask.at(rr, cc) && label[idx] < 0) {
                            label[idx] = id;
                            stack.emplace_back(rr, cc);
                        }
                    }
                }
            }
            std::sort(region.pixels.begin(), region.pixels.end());
            int top = region.pixels.front().first, bottom = top;
            int left = region.pixels.front().second, right = left;
            double sum_r = 0.0, sum_c = 0.0;
            for (auto [r, c] : region.pixels) {
                top = std::min(top, r);
                bottom = std::max(bottom, r);
                left = std::min(left, c);
                right = std::max(right, c);
                sum_r += r;
                sum_c += c;
            }
            region.bbox = {top, left, bottom - top + 1, right - left + 1};
            region.centroid_row = sum_r / static_cast<double>(region.pixels.size());
            region.centroid_col = sum_c / static_cast<double>(region.pixels.size());
            out.push_back(std::move(region));
        }
    }

    // (top, left) can tie for interleaved diagonal shapes; the first pixel
    // in row-major order makes the ordering total.
    std::sort(out.begin(), out.end(), [](const ComponentRegion& a, const ComponentRegion& b) {
        if (a.bbox.top != b.bbox.top) return a.bbox.top < b.bbox.top;
        if (a.bbox.left != b.bbox.left) return a.bbox.left < b.bbox.left;
        return a.pixels.front() < b.pixels.front();
    });
    return out;
}

BinaryMask dilate(const BinaryMask& mask) {
    BinaryMask out(mask.width, mask.height);
    for (int row = 0; row < mask.height; ++row) {
        for (int col = 0; col < mask.width; ++col) {
            if (!mask.at(row, col)) continue;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    int rr = row + dr, cc = col + dc;
                    if (rr < 0 || rr >= mask.height || cc < 0 || cc >= mask.width) continue;
                    out.set(rr, cc);
                }
            }
        }
    }
    return out;
}

} // namespace glare
