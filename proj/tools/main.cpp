// Command-line front end: detect / inpaint / pipeline / train / evaluate / synth.
// Exit codes: 0 ok, 1 usage error, 2 data error, 3 training non-convergence.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "glare/dataset.hpp"
#include "glare/image_io.hpp"
#include "glare/pipeline.hpp"
#include "glare/selector.hpp"
#include "glare/synthetic.hpp"

namespace fs = std::filesystem;
using namespace glare;

namespace {

struct DetectorFlags {
    std::string mode = "auto";
    std::string model_path;
    double k = 4.5;
    double fraction = 0.006;
    std::string threshold_mode = "fixedk";
};

void add_detector_flags(CLI::App* cmd, DetectorFlags& flags) {
    cmd->add_option("--mode", flags.mode, "Detector: auto|rgb|hsv")
        ->check(CLI::IsMember({"auto", "rgb", "hsv"}));
    cmd->add_option("--model", flags.model_path, "Trained SVM model file (required for auto)");
    cmd->add_option("--k", flags.k, "Threshold multiplier for both detectors");
    cmd->add_option("--fraction", flags.fraction, "Percentile-mode pixel budget in (0,1)");
    cmd->add_option("--threshold-mode", flags.threshold_mode, "HSV thresholding: fixedk|percentile")
        ->check(CLI::IsMember({"fixedk", "percentile"}));
}

DetectMode parse_mode(const std::string& mode) {
    if (mode == "rgb") return DetectMode::Rgb;
    if (mode == "hsv") return DetectMode::Hsv;
    return DetectMode::Auto;
}

DetectorParams make_params(const DetectorFlags& flags) {
    DetectorParams params;
    params.rgb.k_rgb = flags.k;
    params.hsv.k = flags.k;
    params.hsv.pixel_fraction = flags.fraction;
    params.hsv.mode =
        flags.threshold_mode == "percentile" ? ThresholdMode::Percentile : ThresholdMode::FixedK;
    if (params.hsv.mode == ThresholdMode::Percentile &&
        (flags.fraction <= 0.0 || flags.fraction >= 1.0)) {
        throw UsageError("--fraction must lie in (0,1)");
    }
    return params;
}

std::optional<SvmModel> maybe_load_model(const DetectorFlags& flags) {
    if (flags.model_path.empty()) {
        if (flags.mode == "auto") throw UsageError("--mode auto requires --model");
        return std::nullopt;
    }
    return load_model(flags.model_path);
}

std::vector<DatasetEntry> entries_from_input(const std::string& input) {
    fs::path path(input);
    if (fs::is_directory(path)) {
        std::vector<std::string> errors;
        auto entries = load_dataset(path, &errors);
        for (const auto& e : errors) std::cerr << "warning: " << e << "\n";
        return entries;
    }
    if (fs::is_regular_file(path)) {
        return {DatasetEntry{path.stem().string(), path, std::nullopt}};
    }
    throw DataError("input not found: " + input);
}

std::vector<double> parse_coeffs(const std::string& text) {
    std::vector<double> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            if (v < 0.0) throw UsageError("--coeffs entries must be nonnegative");
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            throw UsageError("--coeffs: cannot parse '" + item + "'");
        } catch (const std::out_of_range&) {
            throw UsageError("--coeffs: value out of range '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("--coeffs needs at least one coefficient");
    return out;
}

// Loads the dataset frames that carry ground truth, decoded and paired.
std::vector<LabeledFrame> load_labeled_frames(const fs::path& dir) {
    std::vector<std::string> errors;
    auto entries = load_dataset(dir, &errors);
    for (const auto& e : errors) std::cerr << "warning: " << e << "\n";
    std::vector<LabeledFrame> frames;
    for (const auto& entry : entries) {
        if (!entry.gt_path) {
            std::cerr << "warning: " << entry.id << " has no ground truth, excluded\n";
            continue;
        }
        frames.push_back({load_image(entry.frame_path), load_mask(*entry.gt_path)});
    }
    if (frames.empty()) throw DataError("no usable (frame, ground truth) pairs in " + dir.string());
    return frames;
}

int cmd_detect(const std::string& input, const std::string& out_dir, const DetectorFlags& flags) {
    auto model = maybe_load_model(flags);
    DetectorParams params = make_params(flags);
    DetectMode mode = parse_mode(flags.mode);
    auto entries = entries_from_input(input);
    fs::create_directories(out_dir);
    for (const auto& entry : entries) {
        BinaryMask mask = run_detect(entry, mode, model ? &*model : nullptr, params);
        save_mask(mask, fs::path(out_dir) / (entry.id + "_mask.png"));
        std::cout << entry.id << ": " << mask.count() << " reflection pixels\n";
    }
    return 0;
}

int cmd_inpaint(const std::string& in_dir, const std::string& masks_dir,
                const std::string& out_dir, const SmoothingSchedule& schedule) {
    auto entries = entries_from_input(in_dir);
    fs::create_directories(out_dir);
    for (const auto& entry : entries) {
        fs::path mask_path = fs::path(masks_dir) / (entry.id + "_mask.png");
        if (!fs::exists(mask_path)) mask_path = fs::path(masks_dir) / (entry.id + ".png");
        if (!fs::exists(mask_path)) {
            std::cerr << "warning: no mask for " << entry.id << ", skipped\n";
            continue;
        }
        RasterImage img = load_image(entry.frame_path);
        BinaryMask mask = load_mask(mask_path);
        save_png(inpaint_all(img, mask, schedule), fs::path(out_dir) / (entry.id + "_clean.png"));
        std::cout << entry.id << ": inpainted\n";
    }
    return 0;
}

int cmd_pipeline(const std::string& in_dir, const std::string& out_dir, const DetectorFlags& flags,
                 const SmoothingSchedule& schedule, bool overlay) {
    auto model = maybe_load_model(flags);
    DetectorParams params = make_params(flags);
    DetectMode mode = parse_mode(flags.mode);
    auto entries = entries_from_input(in_dir);
    for (const auto& entry : entries) {
        PipelineOutput out = run_pipeline(entry, mode, model ? &*model : nullptr, params, schedule,
                                          out_dir, overlay);
        std::cout << entry.id << ": " << out.mask.count() << " reflection pixels removed\n";
    }
    return 0;
}

int cmd_train(const std::string& data_dir, const std::string& out_file, double c, double gamma,
              double tol, bool grid) {
    auto frames = load_labeled_frames(data_dir);
    auto labeled = label_dataset(frames, RgbDetectorParams{}, HsvDetectorParams{});
    int rgb_labels = 0;
    for (const auto& ex : labeled) {
        if (ex.example.label == SpaceChoice::Rgb) ++rgb_labels;
    }

    SelectorTrainConfig config;
    config.c = c;
    config.gamma = gamma;
    config.tol = tol;
    config.grid_search = grid;
    SelectorTrainResult result = train_selector(labeled, config);

    save_model(result.model, out_file);
    std::cout << "trained on " << labeled.size() << " frames (" << rgb_labels << " RGB, "
              << labeled.size() - rgb_labels << " HSV), " << result.model.support_vectors.size()
              << " support vectors, c=" << result.chosen_c << " gamma=" << result.chosen_gamma;
    if (grid) std::cout << " (grid search, leave-one-out dice " << result.loo_dice << ")";
    std::cout << "\nmodel written to " << out_file << "\n";
    return 0;
}

std::string strip_suffix(const std::string& stem, const std::string& suffix) {
    if (stem.size() > suffix.size() &&
        stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return stem.substr(0, stem.size() - suffix.size());
    }
    return stem;
}

int cmd_evaluate(const std::string& pred_dir, const std::string& gt_dir,
                 const std::string& out_csv) {
    std::vector<fs::path> pred_files;
    for (const auto& item : fs::directory_iterator(pred_dir)) {
        if (item.is_regular_file() && item.path().extension() == ".png") {
            pred_files.push_back(item.path());
        }
    }
    std::sort(pred_files.begin(), pred_files.end());

    std::vector<EvalRow> rows;
    for (const auto& pred_path : pred_files) {
        std::string id = strip_suffix(pred_path.stem().string(), "_mask");
        fs::path gt_path = fs::path(gt_dir) / (id + "_gt.png");
        if (!fs::exists(gt_path)) gt_path = fs::path(gt_dir) / (id + ".png");
        if (!fs::exists(gt_path)) {
            std::cerr << "warning: " << id << ": no ground truth, excluded\n";
            continue;
        }
        try {
            rows.push_back({id, compute_metrics(load_mask(pred_path), load_mask(gt_path))});
        } catch (const DataError& e) {
            std::cerr << "warning: " << id << ": " << e.what() << ", excluded\n";
        }
    }
    if (rows.empty()) throw DataError("no (prediction, ground truth) pairs to evaluate");

    EvalReport report = make_report(std::move(rows));
    write_report_csv(report, fs::path(out_csv));
    std::cout << "evaluated " << report.rows.size() << " masks, pooled dice "
              << report.pooled.dice << ", report written to " << out_csv << "\n";
    return 0;
}

int cmd_synth(const std::string& out_dir, int n, const SyntheticSpec& spec) {
    generate_synthetic(spec, n, out_dir);
    std::cout << "wrote " << n << " (frame, ground truth) pairs to " << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Specular reflection detection, removal and evaluation for endoscopy-style frames"};
    app.require_subcommand(1);

    auto* detect = app.add_subcommand("detect", "Detect reflections, write NAME_mask.png per frame");
    std::string detect_in, detect_out;
    DetectorFlags detect_flags;
    detect->add_option("--in", detect_in, "Input frame file or directory")->required();
    detect->add_option("--out", detect_out, "Output directory")->required();
    add_detector_flags(detect, detect_flags);

    auto* inpaint = app.add_subcommand("inpaint", "Remove masked reflections, write NAME_clean.png");
    std::string inpaint_in, inpaint_masks, inpaint_out, inpaint_coeffs;
    int64_t inpaint_seed = 0;
    inpaint->add_option("--in", inpaint_in, "Input frame directory")->required();
    inpaint->add_option("--masks", inpaint_masks, "Directory with NAME_mask.png files")->required();
    inpaint->add_option("--out", inpaint_out, "Output directory")->required();
    inpaint->add_option("--seed", inpaint_seed, "Smoothing RNG seed");
    inpaint->add_option("--coeffs", inpaint_coeffs, "Comma-separated sigma coefficients");

    auto* pipeline = app.add_subcommand("pipeline", "Detect then inpaint every frame");
    std::string pipe_in, pipe_out, pipe_coeffs;
    int64_t pipe_seed = 0;
    bool pipe_overlay = false;
    DetectorFlags pipe_flags;
    pipeline->add_option("--in", pipe_in, "Input frame directory")->required();
    pipeline->add_option("--out", pipe_out, "Output directory")->required();
    add_detector_flags(pipeline, pipe_flags);
    pipeline->add_option("--seed", pipe_seed, "Smoothing RNG seed");
    pipeline->add_option("--coeffs", pipe_coeffs, "Comma-separated sigma coefficients");
    pipeline->add_flag("--overlay", pipe_overlay, "Also write NAME_overlay.png");

    auto* train = app.add_subcommand("train", "Train the color-space selector SVM");
    std::string train_data, train_out;
    double train_c = 1.0, train_gamma = 1.0 / kFeatureCount, train_tol = 1e-3;
    bool train_grid = false;
    train->add_option("--data", train_data, "Directory of NAME.png + NAME_gt.png pairs")->required();
    train->add_option("--out", train_out, "Output model file")->required();
    train->add_option("--c", train_c, "Soft-margin box constraint");
    train->add_option("--gamma", train_gamma, "Gaussian kernel width");
    train->add_option("--tol", train_tol, "KKT tolerance");
    train->add_flag("--grid", train_grid, "Grid-search c and gamma by leave-one-out dice");

    auto* evaluate = app.add_subcommand("evaluate", "Score predicted masks against ground truth");
    std::string eval_pred, eval_gt, eval_out;
    evaluate->add_option("--pred", eval_pred, "Directory of predicted masks")->required();
    evaluate->add_option("--gt", eval_gt, "Directory of ground-truth masks")->required();
    evaluate->add_option("--out", eval_out, "Output CSV path")->required();

    auto* synth = app.add_subcommand("synth", "Generate a synthetic ground-truth corpus");
    std::string synth_out;
    int synth_n = 0;
    SyntheticSpec spec;
    int64_t synth_seed = 1;
    synth->add_option("--out", synth_out, "Output directory")->required();
    synth->add_option("--n", synth_n, "Number of frames")->required();
    synth->add_option("--seed", synth_seed, "Corpus seed");
    synth->add_option("--width", spec.width, "Frame width");
    synth->add_option("--height", spec.height, "Frame height");
    synth->add_option("--min-blobs", spec.min_blobs, "Minimum blobs per frame");
    synth->add_option("--max-blobs", spec.max_blobs, "Maximum blobs per frame");
    synth->add_option("--min-radius", spec.min_radius, "Minimum blob radius (px)");
    synth->add_option("--max-radius", spec.max_radius, "Maximum blob radius (px)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // help exits 0, anything else is a usage error
    }

    try {
        if (*detect) return cmd_detect(detect_in, detect_out, detect_flags);
        if (*inpaint) {
            SmoothingSchedule schedule;
            schedule.seed = static_cast<uint64_t>(inpaint_seed);
            if (!inpaint_coeffs.empty()) schedule.coefficients = parse_coeffs(inpaint_coeffs);
            return cmd_inpaint(inpaint_in, inpaint_masks, inpaint_out, schedule);
        }
        if (*pipeline) {
            SmoothingSchedule schedule;
            schedule.seed = static_cast<uint64_t>(pipe_seed);
            if (!pipe_coeffs.empty()) schedule.coefficients = parse_coeffs(pipe_coeffs);
            return cmd_pipeline(pipe_in, pipe_out, pipe_flags, schedule, pipe_overlay);
        }
        if (*train) return cmd_train(train_data, train_out, train_c, train_gamma, train_tol, train_grid);
        if (*evaluate) return cmd_evaluate(eval_pred, eval_gt, eval_out);
        if (*synth) {
            spec.seed = static_cast<uint64_t>(synth_seed);
            return cmd_synth(synth_out, synth_n, spec);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const TrainingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
