#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "periodviz/equidistribution.hpp"
#include "periodviz/supercharacter.hpp"

namespace periodviz {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

struct RenderConfig {
    unsigned size_px = 1024;          // square canvas, >= 64
    double viewport_radius = 0.0;     // <= 0 means auto: 1.05 * |X|
    std::vector<Rgb> palette;         // empty = auto hue wheel by layer
    Rgb background{255, 255, 255};
    unsigned point_radius_px = 1;
};

struct Raster {
    unsigned width = 0, height = 0;
    std::vector<std::uint8_t> pixels;  // row-major RGB

    Rgb at(unsigned x, unsigned y) const {
        const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
        return {pixels[i], pixels[i + 1], pixels[i + 2]};
    }
};

// Hue = layer / layer_count at full saturation and value, standard sextant
// formula with floor rounding.
Rgb hue_color(std::uint32_t layer, std::uint64_t layer_count);

// Plots every image point as a filled disc, ascending layer order (ties by
// representative) so overdraw is deterministic. Pure function of its inputs.
Raster rasterize(const PeriodImage& img, const RenderConfig& cfg);

// Scatter of a 2-dimensional lambda set over the unit square.
Raster scatter_torus(const LambdaSet& lambda, const RenderConfig& cfg);

// .ppm -> binary P6 (byte-exact: "P6\n<w> <h>\n255\n" + raw triples),
// .png -> 8-bit RGB, no alpha. Anything else -> IoError.
void write_image(const Raster& raster, const std::string& path);

// PNG encoding of the raster (also used by write_image).
std::vector<std::uint8_t> encode_png(const Raster& raster);

}  // namespace periodviz
