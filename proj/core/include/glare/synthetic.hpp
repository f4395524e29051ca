#ifndef GLARE_SYNTHETIC_HPP
#define GLARE_SYNTHETIC_HPP

#include <cstdint>
#include <filesystem>
#include <utility>

#include "glare/image.hpp"

namespace glare {

// Parameters for the synthetic ground-truth corpus: bright unsaturated
// blobs over a smooth reddish field, with the exact blob cores as GT.
struct SyntheticSpec {
    int width = 96;
    int height = 96;
    int min_blobs = 1;
    int max_blobs = 3;
    double min_radius = 4.0;
    double max_radius = 7.5;
    double min_brightness = 0.93; // inside (0.8, 1.0]
    double max_brightness = 1.0;
    double max_saturation = 0.06; // below 0.15
    uint64_t seed = 1;
};

// One (frame, ground truth) pair; depends only on (spec, index).
std::pair<RasterImage, BinaryMask> synth_frame(const SyntheticSpec& spec, int index);

// Writes n pairs as synth_<idx>.png / synth_<idx>_gt.png under out_dir.
void generate_synthetic(const SyntheticSpec& spec, int n, const std::filesystem::path& out_dir);

} // namespace glare

#endif
