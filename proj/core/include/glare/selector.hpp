#ifndef GLARE_SELECTOR_HPP
#define GLARE_SELECTOR_HPP

#include "glare/detect_hsv.hpp"
#include "glare/detect_rgb.hpp"
#include "glare/svm.hpp"

namespace glare {

// A frame paired with its manually (or synthetically) segmented reflections.
struct LabeledFrame {
    RasterImage image; // RGB
    BinaryMask gt;
};

// label_examples plus the per-image Dice scores behind each label; the
// scores drive leave-one-out model selection.
struct LabeledExample {
    TrainingExample example;
    double dice_rgb = 0.0;
    double dice_hsv = 0.0;
};

// Runs both detectors per frame and labels it with the winner
// (Dice ties go to HSV).
std::vector<LabeledExample> label_dataset(const std::vector<LabeledFrame>& dataset,
                                          const RgbDetectorParams& rgb_params,
                                          const HsvDetectorParams& hsv_params);

std::vector<TrainingExample> label_examples(const std::vector<LabeledFrame>& dataset,
                                            const RgbDetectorParams& rgb_params,
                                            const HsvDetectorParams& hsv_params);

struct SelectorTrainConfig {
    double c = 1.0;
    double gamma = 1.0 / kFeatureCount;
    double tol = 1e-3;
    uint64_t seed = 0;
    bool grid_search = false; // {0.1,1,10} x {1/48,1/12,1/3} by leave-one-out Dice
};

struct SelectorTrainResult {
    SvmModel model;
    double chosen_c = 0.0;
    double chosen_gamma = 0.0;
    double loo_dice = -1.0; // mean held-out Dice of the chosen grid cell, -1 without --grid
};

SelectorTrainResult train_selector(const std::vector<LabeledExample>& labeled,
                                   const SelectorTrainConfig& config);

} // namespace glare

#endif
