#include "glare/selector.hpp"

#include <algorithm>

#include "glare/metrics.hpp"

namespace glare {

std::vector<LabeledExample> label_dataset(const std::vector<LabeledFrame>& dataset,
                                          const RgbDetectorParams& rgb_params,
                                          const HsvDetectorParams& hsv_params) {
    if (dataset.empty()) throw UsageError("label_dataset: empty dataset");
    std::vector<LabeledExample> out;
    out.reserve(dataset.size());
    for (const auto& frame : dataset) {
        if (frame.gt.width != frame.image.width || frame.gt.height != frame.image.height) {
            throw DataError("label_dataset: ground-truth dimensions do not match frame");
        }
        LabeledExample ex;
        ex.example.features = extract_features(frame.image);
        ex.dice_rgb = compute_metrics(detect_rgb(frame.image, rgb_params), frame.gt).dice;
        ex.dice_hsv = compute_metrics(detect_hsv(frame.image, hsv_params), frame.gt).dice;
        ex.example.label = ex.dice_rgb > ex.dice_hsv ? SpaceChoice::Rgb : SpaceChoice::Hsv;
        out.push_back(std::move(ex));
    }
    return out;
}

std::vector<TrainingExample> label_examples(const std::vector<LabeledFrame>& dataset,
                                            const RgbDetectorParams& rgb_params,
                                            const HsvDetectorParams& hsv_params) {
    std::vector<TrainingExample> out;
    for (auto& ex : label_dataset(dataset, rgb_params, hsv_params)) {
        out.push_back(ex.example);
    }
    return out;
}

namespace {

// Mean Dice over held-out frames when each frame's color space is picked by
// a model trained on the remaining frames. Single-class training subsets
// fall back to predicting that class directly.
double loo_dice(const std::vector<LabeledExample>& labeled, double c, double gamma, double tol,
                uint64_t seed) {
    const size_t n = labeled.size();
    double total = 0.0;
    std::vector<TrainingExample> subset;
    subset.reserve(n - 1);
    for (size_t held = 0; held < n; ++held) {
        subset.clear();
        bool has_pos = false, has_neg = false;
        for (size_t i = 0; i < n; ++i) {
            if (i == held) continue;
            subset.push_back(labeled[i].example);
            (labeled[i].example.label == SpaceChoice::Rgb ? has_pos : has_neg) = true;
        }
        SpaceChoice choice;
        if (has_pos && has_neg) {
            SvmModel model = svm_train(subset, c, gamma, tol, seed);
            choice = svm_predict(model, labeled[held].example.features).label;
        } else {
            choice = has_pos ? SpaceChoice::Rgb : SpaceChoice::Hsv;
        }
        total += choice == SpaceChoice::Rgb ? labeled[held].dice_rgb : labeled[held].dice_hsv;
    }
    return total / static_cast<double>(n);
}

} // namespace

SelectorTrainResult train_selector(const std::vector<LabeledExample>& labeled,
                                   const SelectorTrainConfig& config) {
    if (labeled.size() < 2) throw UsageError("train_selector: need at least two examples");

    SelectorTrainResult result;
    result.chosen_c = config.c;
    result.chosen_gamma = config.gamma;

    if (config.grid_search) {
        const double c_grid[] = {0.1, 1.0, 10.0};
        const double gamma_grid[] = {1.0 / 48.0, 1.0 / 12.0, 1.0 / 3.0};
        double best = -1.0;
        for (double c : c_grid) {
            for (double gamma : gamma_grid) {
                double score = loo_dice(labeled, c, gamma, config.tol, config.seed);
                if (score > best) {
                    best = score;
                    result.chosen_c = c;
                    result.chosen_gamma = gamma;
                }
            }
        }
        result.loo_dice = best;
    }

    std::vector<TrainingExample> examples;
    examples.reserve(labeled.size());
    for (const auto& ex : labeled) examples.push_back(ex.example);
    result.model = svm_train(examples, result.chosen_c, result.chosen_gamma, config.tol, config.seed);
    return result;
}

} // namespace glare
