#include "glare/color.hpp"

#include <algorithm>
#include <cmath>

namespace glare {

void rgb_to_hsv_pixel(double r, double g, double b, double& h, double& s, double& v) {
    double mx = std::max({r, g, b});
    double mn = std::min({r, g, b});
    double delta = mx - mn;

    v = mx;
    s = (mx > 0.0) ? delta / mx : 0.0;

    if (delta <= 0.0) {
        h = 0.0;
        return;
    }
    double h6;
    if (mx == r) {
        h6 = (g - b) / delta;
        if (h6 < 0.0) h6 += 6.0;
    } else if (mx == g) {
        h6 = (b - r) / delta + 2.0;
    } else {
        h6 = (r - g) / delta + 4.0;
    }
    h = h6 / 6.0;
    if (h >= 1.0) h -= 1.0;
}

void hsv_to_rgb_pixel(double h, double s, double v, double& r, double& g, double& b) {
    if (s <= 0.0) {
        r = g = b = v;
        return;
    }
    double h6 = h * 6.0;
    if (h6 >= 6.0) h6 -= 6.0;
    int sector = static_cast<int>(h6);
    double f = h6 - sector;
    double p = v * (1.0 - s);
    double q = v * (1.0 - s * f);
    double t = v * (1.0 - s * (1.0 - f));
    switch (sector) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
}

RasterImage rgb_to_hsv(const RasterImage& img) {
    require_space(img, ColorSpace::Rgb, "rgb_to_hsv");
    RasterImage out(img.width, img.height, ColorSpace::Hsv);
    size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        rgb_to_hsv_pixel(img.planes[0].values[i], img.planes[1].values[i], img.planes[2].values[i],
                         out.planes[0].values[i], out.planes[1].values[i], out.planes[2].values[i]);
    }
    return out;
}

RasterImage hsv_to_rgb(const RasterImage& img) {
    require_space(img, ColorSpace::Hsv, "hsv_to_rgb");
    RasterImage out(img.width, img.height, ColorSpace::Rgb);
    size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        hsv_to_rgb_pixel(img.planes[0].values[i], img.planes[1].values[i], img.planes[2].values[i],
                         out.planes[0].values[i], out.planes[1].values[i], out.planes[2].values[i]);
    }
    return out;
}

} // namespace glare
