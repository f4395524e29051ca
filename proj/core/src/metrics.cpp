#include "glare/metrics.hpp"

namespace glare {

MetricsReport metrics_from_counts(uint64_t tp, uint64_t fp, uint64_t fn, uint64_t tn) {
    MetricsReport m;
    m.tp = tp;
    m.fp = fp;
    m.fn = fn;
    m.tn = tn;
    uint64_t dice_den = 2 * tp + fp + fn;
    m.dice = dice_den == 0 ? 1.0 : 2.0 * static_cast<double>(tp) / static_cast<double>(dice_den);
    uint64_t total = tp + fp + fn + tn;
    m.accuracy = total == 0 ? 1.0 : static_cast<double>(tp + tn) / static_cast<double>(total);
    m.specificity = (tn + fp) == 0 ? 1.0 : static_cast<double>(tn) / static_cast<double>(tn + fp);
    m.precision = (tp + fp) == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    return m;
}

MetricsReport compute_metrics(const BinaryMask& pred, const BinaryMask& gt) {
    if (!pred.same_size(gt)) {
        throw DataError("compute_metrics: mask dimensions differ (" + std::to_string(pred.width) +
                        "x" + std::to_string(pred.height) + " vs " + std::to_string(gt.width) + "x" +
                        std::to_string(gt.height) + ")");
    }
    uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (size_t i = 0; i < pred.bits.size(); ++i) {
        bool p = pred.bits[i] != 0, g = gt.bits[i] != 0;
        if (p && g) ++tp;
        else if (p && !g) ++fp;
        else if (!p && g) ++fn;
        else ++tn;
    }
    return metrics_from_counts(tp, fp, fn, tn);
}

} // namespace glare
