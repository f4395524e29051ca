#include "glare/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "glare/color.hpp"
#include "glare/image_io.hpp"
#include "glare/rng.hpp"

namespace glare {

namespace {

// Bilinearly interpolated lattice of scalar node values in [lo, hi].
Raster value_noise(int width, int height, Rng& rng, int cell, double lo, double hi) {
    const int gw = width / cell + 2, gh = height / cell + 2;
    std::vector<double> grid(static_cast<size_t>(gw) * gh);
    for (double& node : grid) node = rng.uniform(lo, hi);

    Raster out(width, height);
    for (int r = 0; r < height; ++r) {
        double gy = static_cast<double>(r) / cell;
        int y0 = static_cast<int>(gy);
        double fy = gy - y0;
        for (int col = 0; col < width; ++col) {
            double gx = static_cast<double>(col) / cell;
            int x0 = static_cast<int>(gx);
            double fx = gx - x0;
            double n00 = grid[static_cast<size_t>(y0) * gw + x0];
            double n01 = grid[static_cast<size_t>(y0) * gw + x0 + 1];
            double n10 = grid[static_cast<size_t>(y0 + 1) * gw + x0];
            double n11 = grid[static_cast<size_t>(y0 + 1) * gw + x0 + 1];
            double top = n00 * (1.0 - fx) + n01 * fx;
            double bot = n10 * (1.0 - fx) + n11 * fx;
            out.at(r, col) = top * (1.0 - fy) + bot * fy;
        }
    }
    return out;
}

// Smooth reddish field. Saturation and value are independent bounded
// low-frequency fields with generous spreads: wide spreads keep the
// detector thresholds resting on background statistics (so they barely
// move when reflections are removed), boundedness plus independence keep
// the bright-AND-unsaturated joint tail empty of false specular cones.
RasterImage reddish_background(int width, int height, Rng& rng) {
    const int cell = 4 << rng.uniform_int(1, 3); // 8, 16 or 32 px texture
    double hue_center = rng.uniform(-0.03, 0.05); // around red, may wrap
    double hue_halfwidth = rng.uniform(0.01, 0.05);
    double s_lo = rng.uniform(0.25, 0.40);
    double s_hi = s_lo + rng.uniform(0.25, 0.40);
    double v_lo = rng.uniform(0.22, 0.34);
    double v_hi = v_lo + rng.uniform(0.15, 0.26);

    Raster hue_field = value_noise(width, height, rng, cell, hue_center - hue_halfwidth,
                                   hue_center + hue_halfwidth);
    // Overshoot the node range and clamp the interpolated fields: the
    // saturated plateaus this creates are common values rather than rare
    // extremes, so the fields have hard-bounded z-scores and the
    // bright-unsaturated joint tail stays empty.
    double s_margin = 0.5 * (s_hi - s_lo), v_margin = 0.5 * (v_hi - v_lo);
    Raster s_field = value_noise(width, height, rng, cell, s_lo - s_margin, s_hi + s_margin);
    Raster v_field = value_noise(width, height, rng, cell, v_lo - v_margin, v_hi + v_margin);
    for (double& s : s_field.values) s = std::clamp(s, s_lo, s_hi);
    for (double& v : v_field.values) v = std::clamp(v, v_lo, v_hi);

    // Fine octave: small per-channel mucosal texture keeps local statistics
    // alive, so inpainted pixels do not stand out against a flat field.
    const int fine_cell = rng.uniform_int(4, 7);
    const double amp = rng.uniform(0.02, 0.05);
    Raster fine[3] = {value_noise(width, height, rng, fine_cell, -amp, amp),
                      value_noise(width, height, rng, fine_cell, -amp, amp),
                      value_noise(width, height, rng, fine_cell, -amp, amp)};

    RasterImage img(width, height, ColorSpace::Rgb);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            double hue = hue_field.at(r, c);
            if (hue < 0.0) hue += 1.0;
            if (hue >= 1.0) hue -= 1.0;
            double pr, pg, pb;
            hsv_to_rgb_pixel(hue, s_field.at(r, c), v_field.at(r, c), pr, pg, pb);
            img.at(0, r, c) = std::clamp(pr + fine[0].at(r, c), 0.0, 1.0);
            img.at(1, r, c) = std::clamp(pg + fine[1].at(r, c), 0.0, 1.0);
            img.at(2, r, c) = std::clamp(pb + fine[2].at(r, c), 0.0, 1.0);
        }
    }
    return img;
}

} // namespace

std::pair<RasterImage, BinaryMask> synth_frame(const SyntheticSpec& spec, int index) {
    if (spec.width < 8 || spec.height < 8 || spec.min_blobs < 0 ||
        spec.max_blobs < spec.min_blobs || spec.min_radius <= 0.0 ||
        spec.max_radius < spec.min_radius) {
        throw UsageError("synth_frame: invalid synthetic spec");
    }

    Rng rng(mix_seed(spec.seed, static_cast<uint64_t>(index)));
    RasterImage img = reddish_background(spec.width, spec.height, rng);
    BinaryMask gt(spec.width, spec.height);

    int blob_count = rng.uniform_int(spec.min_blobs, spec.max_blobs);
    // Blobs within a frame share a narrow brightness/saturation band;
    // wildly unequal reflections would let the brightest one push the
    // adaptive threshold past its dimmer siblings.
    double frame_val = rng.uniform(spec.min_brightness,
                                   std::max(spec.min_brightness, spec.max_brightness - 0.015));
    double frame_sat = rng.uniform(0.0, std::max(0.0, spec.max_saturation - 0.015));
    for (int b = 0; b < blob_count; ++b) {
        double radius = rng.uniform(spec.min_radius, spec.max_radius);
        // Keep blob plus its 1px falloff fully inside the frame.
        double margin = radius + 2.0;
        double cy = rng.uniform(margin, spec.height - margin);
        double cx = rng.uniform(margin, spec.width - margin);
        double hue = rng.uniform();
        double sat = frame_sat + rng.uniform(0.0, 0.015);
        double val = std::min(spec.max_brightness, frame_val + rng.uniform(0.0, 0.015));
        double br, bg, bb;
        hsv_to_rgb_pixel(hue, sat, val, br, bg, bb);

        int r0 = std::max(0, static_cast<int>(std::floor(cy - radius - 1.0)));
        int r1 = std::min(spec.height - 1, static_cast<int>(std::ceil(cy + radius + 1.0)));
        int c0 = std::max(0, static_cast<int>(std::floor(cx - radius - 1.0)));
        int c1 = std::min(spec.width - 1, static_cast<int>(std::ceil(cx + radius + 1.0)));
        for (int r = r0; r <= r1; ++r) {
            for (int c = c0; c <= c1; ++c) {
                double d = std::hypot(r - cy, c - cx);
                if (d <= radius) {
                    img.at(0, r, c) = br;
                    img.at(1, r, c) = bg;
                    img.at(2, r, c) = bb;
                    gt.set(r, c);
                } else if (d <= radius + 1.0) {
                    double t = radius + 1.0 - d;
                    double a = t * t * t; // steep soft falloff: the rim fades fast
                    img.at(0, r, c) = a * br + (1.0 - a) * img.at(0, r, c);
                    img.at(1, r, c) = a * bg + (1.0 - a) * img.at(1, r, c);
                    img.at(2, r, c) = a * bb + (1.0 - a) * img.at(2, r, c);
                }
            }
        }
    }
    return {std::move(img), std::move(gt)};
}

void generate_synthetic(const SyntheticSpec& spec, int n, const std::filesystem::path& out_dir) {
    if (n < 0) throw UsageError("generate_synthetic: negative count");
    if (n == 0) return;
    std::filesystem::create_directories(out_dir);
    for (int i = 0; i < n; ++i) {
        auto [img, gt] = synth_frame(spec, i);
        char name[32];
        std::snprintf(name, sizeof(name), "synth_%03d", i);
        save_png(img, out_dir / (std::string(name) + ".png"));
        save_mask(gt, out_dir / (std::string(name) + "_gt.png"));
    }
}

} // namespace glare
