#include <doctest.h>

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <vector>

#include "periodviz/equidistribution.hpp"
#include "periodviz/errors.hpp"
#include "periodviz/render.hpp"
#include "periodviz/supercharacter.hpp"

using namespace periodviz;

namespace {

// Connected components of non-background pixels (4-neighborhood).
int blob_count(const Raster& r, Rgb background) {
    std::vector<char> seen(static_cast<std::size_t>(r.width) * r.height, 0);
    const auto is_ink = [&](unsigned x, unsigned y) { return !(r.at(x, y) == background); };
    int blobs = 0;
    std::vector<std::pair<unsigned, unsigned>> stack;
    for (unsigned y = 0; y < r.height; ++y) {
        for (unsigned x = 0; x < r.width; ++x) {
            if (!is_ink(x, y) || seen[y * r.width + x]) continue;
            ++blobs;
            stack.push_back({x, y});
            seen[y * r.width + x] = 1;
            while (!stack.empty()) {
                const auto [cx, cy] = stack.back();
                stack.pop_back();
                const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
                for (int i = 0; i < 4; ++i) {
                    const long nx = static_cast<long>(cx) + dx[i];
                    const long ny = static_cast<long>(cy) + dy[i];
                    if (nx < 0 || ny < 0 || nx >= static_cast<long>(r.width) ||
                        ny >= static_cast<long>(r.height))
                        continue;
                    const auto ux = static_cast<unsigned>(nx), uy = static_cast<unsigned>(ny);
                    if (is_ink(ux, uy) && !seen[uy * r.width + ux]) {
                        seen[uy * r.width + ux] = 1;
                        stack.push_back({ux, uy});
                    }
                }
            }
        }
    }
    return blobs;
}

std::vector<std::uint8_t> slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("hue wheel endpoints") {
    CHECK(hue_color(0, 1) == Rgb{255, 0, 0});
    CHECK(hue_color(0, 6) == Rgb{255, 0, 0});
    CHECK(hue_color(2, 6) == Rgb{0, 255, 0});
    CHECK(hue_color(4, 6) == Rgb{0, 0, 255});
}

TEST_CASE("golden image rasterizes to three clusters at known pixels") {
    const auto img = image(OrbitSpec::make(5, 4));
    RenderConfig cfg;
    cfg.size_px = 256;
    const auto raster = rasterize(img, cfg);

    CHECK(blob_count(raster, cfg.background) == 3);

    // Value 2 + 0i with viewport 1.05 * 2: column floor((2 / 2.1 + 1) * 128).
    const unsigned px = 249, py = 128;
    CHECK_FALSE(raster.at(px, py) == cfg.background);
}

TEST_CASE("all-zero values collapse to a center cluster") {
    PeriodImage img;
    img.spec = OrbitSpec::make(5, 4);
    img.layer_mod = 1;
    img.superclass_count = 1;
    img.points = {{0, 0, {0.0, 0.0}}, {1, 0, {0.0, 0.0}}};
    RenderConfig cfg;
    cfg.size_px = 128;
    const auto raster = rasterize(img, cfg);
    CHECK(blob_count(raster, cfg.background) == 1);
    CHECK_FALSE(raster.at(64, 64) == cfg.background);
}

TEST_CASE("rasterization is deterministic and uses only palette colors") {
    const auto img = image(OrbitSpec::make(36, 5), 6);
    RenderConfig cfg;
    cfg.size_px = 128;
    cfg.palette = {{10, 20, 30}, {200, 100, 0}};
    const auto a = rasterize(img, cfg);
    const auto b = rasterize(img, cfg);
    CHECK(a.pixels == b.pixels);

    std::set<std::array<std::uint8_t, 3>> colors;
    for (unsigned y = 0; y < a.height; ++y)
        for (unsigned x = 0; x < a.width; ++x) {
            const auto c = a.at(x, y);
            colors.insert({c.r, c.g, c.b});
        }
    for (const auto& c : colors) {
        const Rgb rgb{c[0], c[1], c[2]};
        const bool known = rgb == cfg.background || rgb == cfg.palette[0] || rgb == cfg.palette[1];
        CHECK(known);
    }
}

TEST_CASE("images computed with different worker counts render identically") {
    const auto one = rasterize(image(OrbitSpec::make(1001, 155), 7, 1), RenderConfig{.size_px = 128});
    const auto four = rasterize(image(OrbitSpec::make(1001, 155), 7, 4), RenderConfig{.size_px = 128});
    CHECK(one.pixels == four.pixels);
}

TEST_CASE("empty inputs are rejected") {
    PeriodImage img;
    img.spec = OrbitSpec::make(5, 4);
    CHECK_THROWS_AS(rasterize(img, RenderConfig{}), EmptyImageError);
    CHECK_THROWS_AS(rasterize(image(OrbitSpec::make(5, 4)), RenderConfig{.size_px = 32}), Error);
}

TEST_CASE("torus scatter plots every lambda point") {
    const auto lambda = lambda_set(7, 3);
    RenderConfig cfg;
    cfg.size_px = 256;
    const auto raster = scatter_torus(lambda, cfg);
    CHECK(blob_count(raster, cfg.background) == 7);

    const auto big = scatter_torus(lambda_set(73, 3), cfg);
    CHECK(blob_count(big, cfg.background) == 73);

    CHECK_THROWS_AS(scatter_torus(lambda_set(11, 5), cfg), DimensionNot2Error);
}

TEST_CASE("ppm bytes are exact") {
    Raster white;
    white.width = white.height = 1;
    white.pixels = {255, 255, 255};
    const std::string path = "test_white.ppm";
    write_image(white, path);
    const auto bytes = slurp(path);
    const std::vector<std::uint8_t> expected{'P', '6', '\n', '1', ' ', '1', '\n',
                                             '2', '5', '5', '\n', 255, 255, 255};
    CHECK(bytes == expected);
    std::remove(path.c_str());
}

TEST_CASE("png bytes inflate back to the original pixels") {
    const auto img = image(OrbitSpec::make(7, 2));
    RenderConfig cfg;
    cfg.size_px = 64;
    const auto raster = rasterize(img, cfg);
    const auto png = encode_png(raster);

    // signature + IHDR
    REQUIRE(png.size() > 45);
    const std::vector<std::uint8_t> signature{0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    CHECK(std::equal(signature.begin(), signature.end(), png.begin()));

    // locate IDAT, inflate, strip filter bytes
    std::vector<std::uint8_t> compressed;
    for (std::size_t i = 8; i + 8 < png.size();) {
        const std::size_t len = (png[i] << 24) | (png[i + 1] << 16) | (png[i + 2] << 8) | png[i + 3];
        const std::string type(png.begin() + i + 4, png.begin() + i + 8);
        if (type == "IDAT")
            compressed.insert(compressed.end(), png.begin() + i + 8, png.begin() + i + 8 + len);
        i += 12 + len;
    }
    REQUIRE(!compressed.empty());
    const std::size_t row = raster.width * 3;
    std::vector<std::uint8_t> raw((row + 1) * raster.height);
    uLongf raw_len = raw.size();
    REQUIRE(uncompress(raw.data(), &raw_len, compressed.data(), compressed.size()) == Z_OK);
    REQUIRE(raw_len == raw.size());
    for (unsigned y = 0; y < raster.height; ++y) {
        CHECK(raw[y * (row + 1)] == 0);
        for (std::size_t i = 0; i < row; ++i)
            CHECK(raw[y * (row + 1) + 1 + i] == raster.pixels[y * row + i]);
    }
}

TEST_CASE("unsupported extensions raise an io error") {
    Raster r;
    r.width = r.height = 1;
    r.pixels = {0, 0, 0};
    CHECK_THROWS_AS(write_image(r, "out.gif"), IoError);
    CHECK_THROWS_AS(write_image(r, "/nonexistent-dir-xyz/out.ppm"), IoError);
}
