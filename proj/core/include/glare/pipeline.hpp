#ifndef GLARE_PIPELINE_HPP
#define GLARE_PIPELINE_HPP

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "glare/dataset.hpp"
#include "glare/detect_hsv.hpp"
#include "glare/detect_rgb.hpp"
#include "glare/inpaint.hpp"
#include "glare/metrics.hpp"
#include "glare/svm.hpp"

namespace glare {

enum class DetectMode { Auto, Rgb, Hsv };

struct DetectorParams {
    RgbDetectorParams rgb;
    HsvDetectorParams hsv;
};

// Detector dispatch for one frame. Auto requires a model; the SVM picks
// the color space from the frame's 12 features.
BinaryMask detect_frame(const RasterImage& img, DetectMode mode, const SvmModel* model,
                        const DetectorParams& params);

// Same, loading the frame from a dataset entry.
BinaryMask run_detect(const DatasetEntry& entry, DetectMode mode, const SvmModel* model,
                      const DetectorParams& params);

struct PipelineOutput {
    BinaryMask mask;
    RasterImage cleaned;
};

// Detect then inpaint; writes NAME_mask.png and NAME_clean.png (plus
// NAME_overlay.png when requested) under out_dir. Partial outputs are
// removed if anything fails mid-entry.
PipelineOutput run_pipeline(const DatasetEntry& entry, DetectMode mode, const SvmModel* model,
                            const DetectorParams& params, const SmoothingSchedule& schedule,
                            const std::filesystem::path& out_dir, bool write_overlay = false);

// Frame blended 50/50 with pure red wherever the mask is set.
RasterImage render_overlay(const RasterImage& img, const BinaryMask& mask);

struct EvalRow {
    std::string id;
    MetricsReport metrics;
};

struct EvalReport {
    std::vector<EvalRow> rows;              // sorted by id
    MetricsReport pooled;                   // counts summed over images, ratios recomputed
    std::array<double, 8> per_image_mean{}; // column means: tp,fp,fn,tn,dice,acc,spec,prec
};

EvalReport make_report(std::vector<EvalRow> rows);

// Runs the detector over every entry that has ground truth; entries
// without it are reported to skipped and excluded.
EvalReport evaluate_detector(const std::vector<DatasetEntry>& dataset, DetectMode mode,
                             const SvmModel* model, const DetectorParams& params,
                             std::vector<std::string>* skipped = nullptr);

// CSV with per-image rows plus aggregate rows ALL (pixel-pooled) and MEAN
// (per-image column means). Identical inputs produce identical bytes.
void write_report_csv(const EvalReport& report, std::ostream& out);
void write_report_csv(const EvalReport& report, const std::filesystem::path& path);

} // namespace glare

#endif
