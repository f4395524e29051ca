#ifndef GLARE_REGIONS_HPP
#define GLARE_REGIONS_HPP

#include <utility>
#include <vector>

#include "glare/image.hpp"

namespace glare {

struct BBox {
    int top = 0;
    int left = 0;
    int height = 0;
    int width = 0;
};

// One 8-connected blob of set pixels. Pixels are kept in row-major order.
struct ComponentRegion {
    std::vector<std::pair<int, int>> pixels; // (row, col)
    BBox bbox;
    double centroid_row = 0.0;
    double centroid_col = 0.0;
};

// 8-connectivity labeling; components ordered by (bbox.top, bbox.left).
std::vector<ComponentRegion> connected_components(const BinaryMask& mask);

// One-pixel 8-neighborhood dilation, clipped at borders.
BinaryMask dilate(const BinaryMask& mask);

} // namespace glare

#endif
