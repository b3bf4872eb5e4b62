#include "periodviz/render.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "periodviz/errors.hpp"

namespace periodviz {

Rgb hue_color(std::uint32_t layer, std::uint64_t layer_count) {
    if (layer_count == 0) layer_count = 1;
    const double h6 = 6.0 * static_cast<double>(layer) / static_cast<double>(layer_count);
    const int sector = static_cast<int>(h6) % 6;
    const double f = h6 - std::floor(h6);
    const auto byte = [](double v) { return static_cast<std::uint8_t>(std::floor(v * 255.0)); };
    const std::uint8_t t = byte(f), u = byte(1.0 - f), full = 255, zero = 0;
    switch (sector) {
        case 0: return {full, t, zero};
        case 1: return {u, full, zero};
        case 2: return {zero, full, t};
        case 3: return {zero, u, full};
        case 4: return {t, zero, full};
        default: return {full, zero, u};
    }
}

namespace {

Raster blank(unsigned size, Rgb bg) {
    Raster r;
    r.width = r.height = size;
    r.pixels.resize(static_cast<std::size_t>(size) * size * 3);
    for (std::size_t i = 0; i < r.pixels.size(); i += 3) {
        r.pixels[i] = bg.r;
        r.pixels[i + 1] = bg.g;
        r.pixels[i + 2] = bg.b;
    }
    return r;
}

void put(Raster& r, long x, long y, Rgb c) {
    if (x < 0 || y < 0 || x >= static_cast<long>(r.width) || y >= static_cast<long>(r.height))
        return;
    const std::size_t i = (static_cast<std::size_t>(y) * r.width + x) * 3;
    r.pixels[i] = c.r;
    r.pixels[i + 1] = c.g;
    r.pixels[i + 2] = c.b;
}

void disc(Raster& r, long cx, long cy, long rad, Rgb c) {
    for (long dy = -rad; dy <= rad; ++dy)
        for (long dx = -rad; dx <= rad; ++dx)
            if (dx * dx + dy * dy <= rad * rad) put(r, cx + dx, cy + dy, c);
}

void validate(const RenderConfig& cfg) {
    if (cfg.size_px < 64) throw Error(ErrorKind::Usage, "render: canvas must be >= 64 px");
}

}  // namespace

Raster rasterize(const PeriodImage& img, const RenderConfig& cfg) {
    validate(cfg);
    if (img.points.empty()) throw EmptyImageError("rasterize: empty image");

    const double radius = cfg.viewport_radius > 0.0
                              ? cfg.viewport_radius
                              : 1.05 * static_cast<double>(img.spec.order);
    const double half = static_cast<double>(cfg.size_px) / 2.0;

    // Ascending layer, ties by representative: later layers overdraw.
    std::vector<const PeriodPoint*> order;
    order.reserve(img.points.size());
    for (const auto& p : img.points) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(), [](const PeriodPoint* a, const PeriodPoint* b) {
        if (a->layer != b->layer) return a->layer < b->layer;
        return a->representative < b->representative;
    });

    Raster raster = blank(cfg.size_px, cfg.background);
    for (const PeriodPoint* p : order) {
        const long px = static_cast<long>(std::floor((p->value.real() / radius + 1.0) * half));
        const long py = static_cast<long>(std::floor((1.0 - p->value.imag() / radius) * half));
        const Rgb color = cfg.palette.empty()
                              ? hue_color(p->layer, img.layer_mod)
                              : cfg.palette[p->layer % cfg.palette.size()];
        disc(raster, px, py, static_cast<long>(cfg.point_radius_px), color);
    }
    return raster;
}

Raster scatter_torus(const LambdaSet& lambda, const RenderConfig& cfg) {
    validate(cfg);
    if (lambda.dim != 2)
        throw DimensionNot2Error("scatter_torus: lambda set has dimension " +
                                 std::to_string(lambda.dim));
    Raster raster = blank(cfg.size_px, cfg.background);
    const double size = static_cast<double>(cfg.size_px);
    const Rgb color = cfg.palette.empty() ? Rgb{0, 0, 0} : cfg.palette[0];
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const auto u = lambda.point(i);
        const long px = static_cast<long>(std::floor(u[0] * size));
        long py = static_cast<long>(std::floor((1.0 - u[1]) * size));
        if (py == static_cast<long>(cfg.size_px)) --py;  // u[1] == 0 lands on the bottom row
        disc(raster, px, py, static_cast<long>(cfg.point_radius_px), color);
    }
    return raster;
}

namespace {

void push_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void push_chunk(std::vector<std::uint8_t>& out, const char type[4],
                const std::vector<std::uint8_t>& data) {
    push_be32(out, static_cast<std::uint32_t>(data.size()));
    const std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    const auto crc = crc32(0, out.data() + start, static_cast<uInt>(out.size() - start));
    push_be32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Raster& raster) {
    if (raster.width == 0 || raster.height == 0)
        throw Error(ErrorKind::Usage, "encode_png: empty raster");

    std::vector<std::uint8_t> out{0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};

    std::vector<std::uint8_t> ihdr;
    push_be32(ihdr, raster.width);
    push_be32(ihdr, raster.height);
    ihdr.push_back(8);   // bit depth
    ihdr.push_back(2);   // truecolor
    ihdr.push_back(0);   // deflate
    ihdr.push_back(0);   // adaptive filtering
    ihdr.push_back(0);   // no interlace
    push_chunk(out, "IHDR", ihdr);

    // Filter byte 0 per scanline.
    const std::size_t row = static_cast<std::size_t>(raster.width) * 3;
    std::vector<std::uint8_t> raw((row + 1) * raster.height);
    for (unsigned y = 0; y < raster.height; ++y) {
        raw[y * (row + 1)] = 0;
        std::memcpy(raw.data() + y * (row + 1) + 1, raster.pixels.data() + y * row, row);
    }

    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> idat(bound);
    if (compress2(idat.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                  Z_DEFAULT_COMPRESSION) != Z_OK)
        throw InternalError("encode_png: deflate failed");
    idat.resize(bound);
    push_chunk(out, "IDAT", idat);

    push_chunk(out, "IEND", {});
    return out;
}

void write_image(const Raster& raster, const std::string& path) {
    const auto ends_with = [&](const char* suffix) {
        const std::size_t n = std::strlen(suffix);
        return path.size() >= n && path.compare(path.size() - n, n, suffix) == 0;
    };

    std::vector<std::uint8_t> bytes;
    if (ends_with(".ppm")) {
        char header[64];
        const int len = std::snprintf(header, sizeof(header), "P6\n%u %u\n255\n", raster.width,
                                      raster.height);
        bytes.assign(header, header + len);
        bytes.insert(bytes.end(), raster.pixels.begin(), raster.pixels.end());
    } else if (ends_with(".png")) {
        bytes = encode_png(raster);
    } else {
        throw IoError("write_image: unsupported format for '" + path +
                      "' (expected .png or .ppm)");
    }

    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("write_image: cannot open '" + path + "'");
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("write_image: short write to '" + path + "'");
}

}  // namespace periodviz
