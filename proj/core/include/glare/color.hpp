#ifndef GLARE_COLOR_HPP
#define GLARE_COLOR_HPP

#include "glare/image.hpp"

namespace glare {

// Hexcone conversion for one pixel. H is scaled to [0,1);
// achromatic pixels (max==min) get H=0, S=0; V=0 gets S=0.
void rgb_to_hsv_pixel(double r, double g, double b, double& h, double& s, double& v);
void hsv_to_rgb_pixel(double h, double s, double v, double& r, double& g, double& b);

RasterImage rgb_to_hsv(const RasterImage& img);
RasterImage hsv_to_rgb(const RasterImage& img);

} // namespace glare

#endif
