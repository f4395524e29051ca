#include "glare/dataset.hpp"

#include <algorithm>
#include <cctype>

#include "glare/image_io.hpp"

namespace glare {

namespace {

bool has_suffix(const std::string& stem, const std::string& suffix) {
    return stem.size() >= suffix.size() &&
           stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Output artifacts from earlier runs are not frames.
bool is_reserved_stem(const std::string& stem) {
    return has_suffix(stem, "_gt") || has_suffix(stem, "_mask") || has_suffix(stem, "_clean") ||
           has_suffix(stem, "_overlay");
}

void report(std::vector<std::string>* errors, const std::string& message) {
    if (errors) errors->push_back(message);
}

} // namespace

std::vector<DatasetEntry> load_dataset(const std::filesystem::path& dir,
                                       std::vector<std::string>* errors) {
    if (!std::filesystem::is_directory(dir)) {
        throw UsageError("load_dataset: not a directory: " + dir.string());
    }

    std::vector<std::filesystem::path> files;
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        if (!item.is_regular_file()) continue;
        std::string ext = item.path().extension().string();
        for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (ext == ".png" || ext == ".ppm") files.push_back(item.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    std::vector<DatasetEntry> entries;
    for (const auto& path : files) {
        std::string stem = path.stem().string();
        if (is_reserved_stem(stem)) continue;

        auto frame_dims = probe_dimensions(path);
        if (!frame_dims) {
            report(errors, path.string() + ": unreadable frame, skipped");
            continue;
        }

        DatasetEntry entry;
        entry.id = stem;
        entry.frame_path = path;

        std::filesystem::path gt = path.parent_path() / (stem + "_gt.png");
        if (std::filesystem::exists(gt)) {
            auto gt_dims = probe_dimensions(gt);
            if (!gt_dims) {
                report(errors, gt.string() + ": unreadable ground truth, entry skipped");
                continue;
            }
            if (*gt_dims != *frame_dims) {
                report(errors, path.string() + ": ground-truth size " +
                                   std::to_string(gt_dims->first) + "x" +
                                   std::to_string(gt_dims->second) + " does not match frame " +
                                   std::to_string(frame_dims->first) + "x" +
                                   std::to_string(frame_dims->second) + ", entry skipped");
                continue;
            }
            entry.gt_path = gt;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace glare
