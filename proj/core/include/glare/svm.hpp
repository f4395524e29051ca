#ifndef GLARE_SVM_HPP
#define GLARE_SVM_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "glare/features.hpp"

namespace glare {

// Which detector to run for a frame. Encoded as +1 / -1 for the SVM.
enum class SpaceChoice { Rgb, Hsv };

inline double label_sign(SpaceChoice c) { return c == SpaceChoice::Rgb ? 1.0 : -1.0; }

struct TrainingExample {
    FeatureVector features; // raw (pre-normalization)
    SpaceChoice label = SpaceChoice::Hsv;
};

// Gaussian-kernel soft-margin classifier plus the feature normalizer it
// was trained with. Immutable once trained; prediction is pure.
struct SvmModel {
    std::vector<FeatureVector> support_vectors; // normalized feature space
    std::vector<double> coefficients;           // alpha_i * y_i
    double bias = 0.0;
    double gamma = 1.0;
    double c = 1.0;
    FeatureNormalizer normalizer;
};

struct SvmPrediction {
    SpaceChoice label = SpaceChoice::Hsv;
    double decision_value = 0.0;
};

double gaussian_kernel(const FeatureVector& a, const FeatureVector& b, double gamma);

// Solves the bias-constrained soft-margin dual by pairwise coordinate
// ascent with max-violating-pair selection, to KKT tolerance tol.
// Throws UsageError for bad arguments or single-class input and
// TrainingError (carrying the final violation) past the iteration cap.
// The solver is deterministic; seed is accepted for interface stability
// and does not influence the schedule.
SvmModel svm_train(const std::vector<TrainingExample>& examples, double c, double gamma,
                   double tol = 1e-3, uint64_t seed = 0);

SvmPrediction svm_predict(const SvmModel& model, const FeatureVector& raw_features);

// Line-oriented decimal text, 17 significant digits; save/load/save is
// byte-identical.
void save_model(const SvmModel& model, const std::filesystem::path& path);
SvmModel load_model(const std::filesystem::path& path);

} // namespace glare

#endif
