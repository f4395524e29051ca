#ifndef GLARE_DATASET_HPP
#define GLARE_DATASET_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "glare/image.hpp"

namespace glare {

struct DatasetEntry {
    std::string id; // frame filename stem
    std::filesystem::path frame_path;
    std::optional<std::filesystem::path> gt_path;
};

// Scans a directory for frames (.png/.ppm), pairing NAME.png with
// NAME_gt.png by convention. Entries are ordered lexicographically by
// filename; unreadable or size-mismatched pairs are skipped with one
// message per entry appended to errors.
std::vector<DatasetEntry> load_dataset(const std::filesystem::path& dir,
                                       std::vector<std::string>* errors = nullptr);

} // namespace glare

#endif
