#include <benchmark/benchmark.h>

#include "glare/color.hpp"
#include "glare/detect_hsv.hpp"
#include "glare/detect_rgb.hpp"
#include "glare/inpaint.hpp"
#include "glare/rng.hpp"
#include "glare/selector.hpp"
#include "glare/synthetic.hpp"

using namespace glare;

namespace {

RasterImage make_frame(int size) {
    SyntheticSpec spec;
    spec.width = size;
    spec.height = size;
    spec.max_blobs = 4;
    spec.min_radius = 3.0;
    spec.max_radius = std::max(spec.min_radius, 0.05 * size);
    spec.seed = 5;
    return synth_frame(spec, 0).first;
}

void BM_RgbToHsv(benchmark::State& state) {
    RasterImage img = make_frame(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rgb_to_hsv(img));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.pixel_count()));
}
BENCHMARK(BM_RgbToHsv)->Arg(96)->Arg(256);

void BM_DetectRgb(benchmark::State& state) {
    RasterImage img = make_frame(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_rgb(img));
    }
}
BENCHMARK(BM_DetectRgb)->Arg(96)->Arg(256);

void BM_DetectHsv(benchmark::State& state) {
    RasterImage img = make_frame(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_hsv(img));
    }
}
BENCHMARK(BM_DetectHsv)->Arg(96)->Arg(256);

void BM_InpaintAll(benchmark::State& state) {
    RasterImage img = make_frame(static_cast<int>(state.range(0)));
    BinaryMask mask = detect_hsv(img);
    SmoothingSchedule schedule;
    for (auto _ : state) {
        benchmark::DoNotOptimize(inpaint_all(img, mask, schedule));
    }
}
BENCHMARK(BM_InpaintAll)->Arg(96)->Arg(256);

void BM_SvmTrain(benchmark::State& state) {
    Rng rng(7);
    std::vector<TrainingExample> ex;
    const int n = static_cast<int>(state.range(0));
    for (int i = 0; i < n; ++i) {
        TrainingExample e;
        e.label = i % 2 == 0 ? SpaceChoice::Rgb : SpaceChoice::Hsv;
        double center = e.label == SpaceChoice::Rgb ? 1.0 : -1.0;
        for (double& v : e.features) v = center + rng.normal() * 0.6;
        ex.push_back(e);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(svm_train(ex, 1.0, 1.0 / 12.0));
    }
}
BENCHMARK(BM_SvmTrain)->Arg(100)->Arg(200);

} // namespace

BENCHMARK_MAIN();
