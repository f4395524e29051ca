#include "glare/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "glare/features.hpp"
#include "glare/image_io.hpp"

namespace glare {

BinaryMask detect_frame(const RasterImage& img, DetectMode mode, const SvmModel* model,
                        const DetectorParams& params) {
    switch (mode) {
        case DetectMode::Rgb:
            return detect_rgb(img, params.rgb);
        case DetectMode::Hsv:
            return detect_hsv(img, params.hsv);
        case DetectMode::Auto:
            break;
    }
    if (!model) throw UsageError("detect_frame: auto mode requires a trained model");
    SpaceChoice choice = svm_predict(*model, extract_features(img)).label;
    return choice == SpaceChoice::Rgb ? detect_rgb(img, params.rgb) : detect_hsv(img, params.hsv);
}

BinaryMask run_detect(const DatasetEntry& entry, DetectMode mode, const SvmModel* model,
                      const DetectorParams& params) {
    return detect_frame(load_image(entry.frame_path), mode, model, params);
}

RasterImage render_overlay(const RasterImage& img, const BinaryMask& mask) {
    RasterImage out = img;
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            if (!mask.at(r, c)) continue;
            out.at(0, r, c) = 0.5 * img.at(0, r, c) + 0.5;
            out.at(1, r, c) = 0.5 * img.at(1, r, c);
            out.at(2, r, c) = 0.5 * img.at(2, r, c);
        }
    }
    return out;
}

PipelineOutput run_pipeline(const DatasetEntry& entry, DetectMode mode, const SvmModel* model,
                            const DetectorParams& params, const SmoothingSchedule& schedule,
                            const std::filesystem::path& out_dir, bool write_overlay) {
    std::vector<std::filesystem::path> written;
    try {
        RasterImage img = load_image(entry.frame_path);
        PipelineOutput out;
        out.mask = detect_frame(img, mode, model, params);
        out.cleaned = inpaint_all(img, out.mask, schedule);

        std::filesystem::create_directories(out_dir);
        std::filesystem::path mask_path = out_dir / (entry.id + "_mask.png");
        save_mask(out.mask, mask_path);
        written.push_back(mask_path);
        std::filesystem::path clean_path = out_dir / (entry.id + "_clean.png");
        save_png(out.cleaned, clean_path);
        written.push_back(clean_path);
        if (write_overlay) {
            std::filesystem::path overlay_path = out_dir / (entry.id + "_overlay.png");
            save_png(render_overlay(img, out.mask), overlay_path);
            written.push_back(overlay_path);
        }
        return out;
    } catch (...) {
        std::error_code ec;
        for (const auto& p : written) std::filesystem::remove(p, ec);
        throw;
    }
}

EvalReport make_report(std::vector<EvalRow> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const EvalRow& a, const EvalRow& b) { return a.id < b.id; });

    EvalReport report;
    uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    std::array<double, 8> sums{};
    for (const auto& row : rows) {
        const MetricsReport& m = row.metrics;
        tp += m.tp;
        fp += m.fp;
        fn += m.fn;
        tn += m.tn;
        sums[0] += static_cast<double>(m.tp);
        sums[1] += static_cast<double>(m.fp);
        sums[2] += static_cast<double>(m.fn);
        sums[3] += static_cast<double>(m.tn);
        sums[4] += m.dice;
        sums[5] += m.accuracy;
        sums[6] += m.specificity;
        sums[7] += m.precision;
    }
    report.pooled = metrics_from_counts(tp, fp, fn, tn);
    if (!rows.empty()) {
        for (auto& s : sums) s /= static_cast<double>(rows.size());
    }
    report.per_image_mean = sums;
    report.rows = std::move(rows);
    return report;
}

EvalReport evaluate_detector(const std::vector<DatasetEntry>& dataset, DetectMode mode,
                             const SvmModel* model, const DetectorParams& params,
                             std::vector<std::string>* skipped) {
    std::vector<EvalRow> rows;
    for (const auto& entry : dataset) {
        if (!entry.gt_path) {
            if (skipped) skipped->push_back(entry.id + ": no ground truth, excluded");
            continue;
        }
        BinaryMask pred = run_detect(entry, mode, model, params);
        BinaryMask gt = load_mask(*entry.gt_path);
        rows.push_back({entry.id, compute_metrics(pred, gt)});
    }
    return make_report(std::move(rows));
}

namespace {

std::string fmt_ratio(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

void write_report_csv(const EvalReport& report, std::ostream& out) {
    out << "# row ALL pools pixel counts over all images; row MEAN averages per-image columns\n";
    out << "# zero-denominator conventions: dice=1 when both masks empty, specificity=1 when no "
           "negatives, precision=1 when nothing predicted\n";
    out << "id,tp,fp,fn,tn,dice,accuracy,specificity,precision\n";
    for (const auto& row : report.rows) {
        const MetricsReport& m = row.metrics;
        out << row.id << "," << m.tp << "," << m.fp << "," << m.fn << "," << m.tn << ","
            << fmt_ratio(m.dice) << "," << fmt_ratio(m.accuracy) << "," << fmt_ratio(m.specificity)
            << "," << fmt_ratio(m.precision) << "\n";
    }
    const MetricsReport& p = report.pooled;
    out << "ALL," << p.tp << "," << p.fp << "," << p.fn << "," << p.tn << "," << fmt_ratio(p.dice)
        << "," << fmt_ratio(p.accuracy) << "," << fmt_ratio(p.specificity) << ","
        << fmt_ratio(p.precision) << "\n";
    out << "MEAN";
    for (double v : report.per_image_mean) out << "," << fmt_ratio(v);
    out << "\n";
}

void write_report_csv(const EvalReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open " + path.string() + " for writing");
    write_report_csv(report, out);
    if (!out) throw DataError("write failed: " + path.string());
}

} // namespace glare
