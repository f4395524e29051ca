#ifndef GLARE_METRICS_HPP
#define GLARE_METRICS_HPP

#include <cstdint>

#include "glare/image.hpp"

namespace glare {

// Pixel confusion counts plus the derived ratios. 0/0 cases resolve to 1
// (dice, specificity, precision) so clean frames score perfectly.
struct MetricsReport {
    uint64_t tp = 0;
    uint64_t fp = 0;
    uint64_t fn = 0;
    uint64_t tn = 0;
    double dice = 1.0;
    double accuracy = 1.0;
    double specificity = 1.0;
    double precision = 1.0;
};

MetricsReport compute_metrics(const BinaryMask& pred, const BinaryMask& gt);

// Ratios recomputed from already-pooled counts.
MetricsReport metrics_from_counts(uint64_t tp, uint64_t fp, uint64_t fn, uint64_t tn);

} // namespace glare

#endif
