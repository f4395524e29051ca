#ifndef GLARE_INPAINT_HPP
#define GLARE_INPAINT_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "glare/image.hpp"
#include "glare/regions.hpp"

namespace glare {

enum class PatchDirection { Above, Below, Left, Right };

// Rectangle adjacent to a reflection component, with the statistics and
// cost terms used to rank it. The stored cost always equals
// delta_mean * delta_std * distance * (1 - nc).
struct PatchCandidate {
    PatchDirection direction = PatchDirection::Above;
    BBox rect;
    std::array<double, 3> mean{};
    std::array<double, 3> std{};
    double nc = 0.0;         // border-sequence cross-correlation, in [-1,1]
    double delta_mean = 0.0; // channel-mean |patch mean - ring mean|
    double delta_std = 0.0;
    double distance = 0.0;   // rect center to hole centroid, / image diagonal
    double cost = 0.0;
};

// Per-iteration sigma coefficients for the edge-vanishing pass, plus the
// seed for its deterministic draws.
struct SmoothingSchedule {
    std::vector<double> coefficients = {0.71, 0.99, 1.2, 0.66, 0.66, 0.66, 0.66, 0.74};
    uint64_t seed = 0;
};

// 1-pixel 8-neighborhood boundary of the component: in-bounds pixels not
// covered by any mask pixel, in row-major order. Empty when the component
// has no clean exterior neighbor.
std::vector<std::pair<int, int>> ring_pixels(const ComponentRegion& component,
                                             const BinaryMask& mask);

// Up to four bbox-congruent rectangles (Above, Below, Left, Right order).
// Candidates falling out of bounds or overlapping any masked pixel are
// dropped, not shrunk. mean/std and nc are filled; cost terms are not.
std::vector<PatchCandidate> candidate_patches(const ComponentRegion& component,
                                              const RasterImage& img, const BinaryMask& mask);

// Fills the candidate's delta/distance terms and returns (and stores) the
// product cost.
double patch_cost(PatchCandidate& candidate, const std::array<double, 3>& ring_mean,
                  const std::array<double, 3>& ring_std, double hole_centroid_row,
                  double hole_centroid_col, double image_diagonal);

// Pastes the minimum-cost candidate over the component (component pixels
// only). Falls back to the ring mean, then to the global mean, when no
// candidate exists.
RasterImage inpaint_component(const RasterImage& img, const BinaryMask& mask,
                              const ComponentRegion& component);

// Edge vanishing: per schedule iteration, every ring pixel is redrawn per
// channel from Normal(patch mean, (coeff*patch std)^2), clamped to [0,1];
// patch statistics come from the iteration-start snapshot. The ring starts
// as the two-pixel band astride the component edge and grows by one pixel
// per iteration.
RasterImage smooth_edges(const RasterImage& img, const BinaryMask& mask,
                         const ComponentRegion& component, const SmoothingSchedule& schedule);

// Full removal pass: components in (bbox top, left) order, each inpainted
// then smoothed.
RasterImage inpaint_all(const RasterImage& img, const BinaryMask& mask,
                        const SmoothingSchedule& schedule = {});

} // namespace glare

#endif
