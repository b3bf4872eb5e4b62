// periodviz: Gaussian-period images over Z/nZ and mechanical checks of their
// structure (symmetry, multiplicativity, Laurent-image containment,
// hypocycloid geometry, equidistribution).

#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "periodviz/arith.hpp"
#include "periodviz/cyclotomic.hpp"
#include "periodviz/equidistribution.hpp"
#include "periodviz/errors.hpp"
#include "periodviz/hypocycloid.hpp"
#include "periodviz/laurent.hpp"
#include "periodviz/render.hpp"
#include "periodviz/supercharacter.hpp"

using json = nlohmann::json;
using namespace periodviz;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;

// Numeric flags accept underscores as digit separators: 357_193 == 357193.
std::uint64_t parse_u64(const std::string& text, const std::string& flag) {
    std::string digits;
    for (char c : text)
        if (c != '_') digits.push_back(c);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::Usage, flag + ": expected a nonnegative integer, got '" + text + "'");
    try {
        return std::stoull(digits);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, flag + ": integer out of range: '" + text + "'");
    }
}

std::int64_t parse_i64(const std::string& text, const std::string& flag) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(body.begin());
    }
    const std::uint64_t mag = parse_u64(body, flag);
    if (mag > static_cast<std::uint64_t>(negative ? -(INT64_MIN + 1) : INT64_MAX))
        throw Error(ErrorKind::Usage, flag + ": integer out of range: '" + text + "'");
    return negative ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const std::string& flag) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_u64(item, flag));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::int64_t> parse_i64_list(const std::string& text, const std::string& flag) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_i64(item, flag));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + out_path + "'");
    file << text;
    if (!file) throw IoError("short write to '" + out_path + "'");
}

void emit_report(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_number_float())
            std::cout << key << "=" << fmt17(value.get<double>()) << "\n";
        else
            std::cout << key << "=" << value.dump() << "\n";
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Gaussian-period images and structure checks"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker count for sweeps (0 = auto)")
        ->envname("PERIODVIZ_THREADS");

    int exit_code = kExitPass;

    // ---- periods ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("periods", "Evaluate one period image as CSV or JSON");
        cmd->fallthrough();
        auto modulus = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        auto layer = std::make_shared<std::string>("1");
        auto format = std::make_shared<std::string>("csv");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--modulus", *modulus, "Modulus n")->required();
        cmd->add_option("--omega", *omega, "Generator omega")->required();
        cmd->add_option("--layer-mod", *layer, "Layer modulus c (1 or a proper divisor of n)");
        cmd->add_option("--format", *format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", *out, "Write to a file instead of stdout");
        cmd->callback([=, &threads]() {
            const auto n = parse_u64(*modulus, "--modulus");
            const auto w = parse_i64(*omega, "--omega");
            const auto c = parse_u64(*layer, "--layer-mod");
            const auto img = image(OrbitSpec::make(n, w), c, threads);
            if (*format == "csv") {
                std::string text = "y,layer,re,im\n";
                for (const auto& p : img.points)
                    text += std::to_string(p.representative) + "," + std::to_string(p.layer) +
                            "," + fmt17(p.value.real()) + "," + fmt17(p.value.imag()) + "\n";
                write_text_output(text, *out);
            } else {
                json doc;
                doc["modulus"] = img.spec.modulus;
                doc["omega"] = img.spec.generator;
                doc["order"] = img.spec.order;
                doc["layer_mod"] = img.layer_mod;
                doc["superclass_count"] = img.superclass_count;
                auto& pts = doc["points"] = json::array();
                for (const auto& p : img.points)
                    pts.push_back({{"y", p.representative},
                                   {"layer", p.layer},
                                   {"re", p.value.real()},
                                   {"im", p.value.imag()}});
                auto& dst = doc["distinct"] = json::array();
                for (const auto& z : img.distinct) dst.push_back({z.real(), z.imag()});
                write_text_output(doc.dump(2) + "\n", *out);
            }
        });
    }

    // ---- cyclotomic -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("cyclotomic", "Print cyclotomic polynomial coefficients");
        cmd->fallthrough();
        auto dtext = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("text");
        cmd->add_option("--d", *dtext, "Index d")->required();
        cmd->add_option("--format", *format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->callback([=]() {
            const auto poly = cyclotomic_poly(parse_u64(*dtext, "--d"));
            if (*format == "text") {
                std::string line;
                for (std::size_t i = 0; i < poly.coefficients.size(); ++i) {
                    if (i) line += ' ';
                    line += std::to_string(poly.coefficients[i]);
                }
                std::cout << line << "\n";
            } else {
                json doc;
                doc["d"] = poly.index;
                doc["degree"] = poly.degree();
                doc["coefficients"] = poly.coefficients;
                std::cout << doc.dump(2) << "\n";
            }
        });
    }

    // ---- gd ---------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("gd", "Sample the degree-d Laurent map on random torus points");
        cmd->fallthrough();
        auto dtext = std::make_shared<std::string>();
        auto samples = std::make_shared<std::string>("10000");
        auto seed = std::make_shared<std::string>("1");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--d", *dtext, "Index d")->required();
        cmd->add_option("--samples", *samples, "Sample count");
        cmd->add_option("--seed", *seed, "RNG seed");
        cmd->add_option("--out", *out, "CSV output file (default stdout)");
        cmd->callback([=]() {
            const auto d = parse_u64(*dtext, "--d");
            const auto count = parse_u64(*samples, "--samples");
            const auto seed_v = parse_u64(*seed, "--seed");
            const auto rm = reduction_matrix(d);
            std::mt19937_64 rng(seed_v);
            std::string text = "re,im\n";
            for (std::uint64_t i = 0; i < count; ++i) {
                const auto z = eval_laurent(rm, random_torus_point(rm.rows, rng));
                text += fmt17(z.real()) + "," + fmt17(z.imag()) + "\n";
            }
            write_text_output(text, *out);
            std::cerr << "gd: d=" << d << " samples=" << count << " seed=" << seed_v << "\n";
        });
    }

    // ---- weyl -------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("weyl", "Exponential sum over a lambda set vs prediction");
        cmd->fallthrough();
        auto qtext = std::make_shared<std::string>();
        auto dtext = std::make_shared<std::string>();
        auto vtext = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--q", *qtext, "Odd prime power q")->required();
        cmd->add_option("--d", *dtext, "Order d (>= 2, dividing phi(q))")->required();
        cmd->add_option("--v", *vtext, "Frequency vector, comma separated")->required();
        cmd->add_flag("--json,!--text", *as_json, "Emit a JSON object");
        cmd->callback([=]() {
            const auto lambda = lambda_set(parse_u64(*qtext, "--q"), parse_u64(*dtext, "--d"));
            const auto v = parse_i64_list(*vtext, "--v");
            const auto sum = weyl_sum(lambda, v);
            json doc;
            doc["q"] = lambda.q;
            doc["d"] = lambda.d;
            doc["root"] = lambda.root;
            doc["v"] = v;
            doc["computed_re"] = sum.computed.real();
            doc["computed_im"] = sum.computed.imag();
            doc["predicted_re"] = sum.predicted.real();
            doc["predicted_im"] = sum.predicted.imag();
            doc["defect"] = std::abs(sum.computed - sum.predicted);
            emit_report(doc, *as_json);
        });
    }

    // ---- discrepancy ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("discrepancy", "Grid-box discrepancy estimates of lambda sets");
        cmd->fallthrough();
        auto dtext = std::make_shared<std::string>();
        auto qlist = std::make_shared<std::string>();
        auto grid = std::make_shared<std::string>("20");
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--d", *dtext, "Order d")->required();
        cmd->add_option("--q-list", *qlist, "Comma-separated odd prime powers")->required();
        cmd->add_option("--grid", *grid, "Box corners restricted to {k/G}");
        cmd->add_flag("--json,!--text", *as_json, "Emit a JSON object");
        cmd->callback([=]() {
            const auto d = parse_u64(*dtext, "--d");
            const auto g = parse_u64(*grid, "--grid");
            json rows = json::array();
            for (const auto q : parse_u64_list(*qlist, "--q-list")) {
                const auto lambda = lambda_set(q, d);
                rows.push_back({{"q", q},
                                {"root", lambda.root},
                                {"estimate", discrepancy_estimate(lambda, static_cast<unsigned>(g))}});
            }
            if (*as_json) {
                json doc;
                doc["d"] = d;
                doc["grid"] = g;
                doc["estimates"] = rows;
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& row : rows)
                    std::cout << "q=" << row["q"].get<std::uint64_t>()
                              << " root=" << row["root"].get<std::uint64_t>()
                              << " estimate=" << fmt17(row["estimate"].get<double>()) << "\n";
            }
        });
    }

    // ---- render -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("render", "Rasterize a period image to PNG or PPM");
        cmd->fallthrough();
        auto modulus = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        auto layer = std::make_shared<std::string>("1");
        auto size = std::make_shared<std::string>("1024");
        auto viewport = std::make_shared<double>(0.0);
        auto radius = std::make_shared<std::string>("1");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--modulus", *modulus)->required();
        cmd->add_option("--omega", *omega)->required();
        cmd->add_option("--layer-mod", *layer);
        cmd->add_option("--size", *size, "Canvas size in pixels");
        cmd->add_option("--viewport", *viewport, "Viewport radius (default 1.05 * order)");
        cmd->add_option("--point-radius", *radius, "Point disc radius in pixels");
        cmd->add_option("--out", *out, "Output file (.png or .ppm)")->required();
        cmd->callback([=, &threads]() {
            RenderConfig cfg;
            cfg.size_px = static_cast<unsigned>(parse_u64(*size, "--size"));
            cfg.viewport_radius = *viewport;
            cfg.point_radius_px = static_cast<unsigned>(parse_u64(*radius, "--point-radius"));
            const auto img = image(OrbitSpec::make(parse_u64(*modulus, "--modulus"),
                                                   parse_i64(*omega, "--omega")),
                                   parse_u64(*layer, "--layer-mod"), threads);
            write_image(rasterize(img, cfg), *out);
        });
    }

    // ---- render-torus -----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("render-torus", "Scatter a 2-d lambda set over the unit square");
        cmd->fallthrough();
        auto qtext = std::make_shared<std::string>();
        auto dtext = std::make_shared<std::string>();
        auto size = std::make_shared<std::string>("1024");
        auto radius = std::make_shared<std::string>("1");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--q", *qtext)->required();
        cmd->add_option("--d", *dtext)->required();
        cmd->add_option("--size", *size, "Canvas size in pixels");
        cmd->add_option("--point-radius", *radius, "Point disc radius in pixels");
        cmd->add_option("--out", *out, "Output file (.png or .ppm)")->required();
        cmd->callback([=]() {
            RenderConfig cfg;
            cfg.size_px = static_cast<unsigned>(parse_u64(*size, "--size"));
            cfg.point_radius_px = static_cast<unsigned>(parse_u64(*radius, "--point-radius"));
            write_image(scatter_torus(lambda_set(parse_u64(*qtext, "--q"),
                                                 parse_u64(*dtext, "--d")),
                                      cfg),
                        *out);
        });
    }

    // ---- verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Structure checks with pass/fail reports");
    verify->require_subcommand(1);
    auto as_json = std::make_shared<bool>(false);
    verify->add_flag("--json,!--text", *as_json, "Emit reports as JSON objects");

    {
        auto* cmd = verify->add_subcommand("gauss17", "Nested-radical identity for the 17-gon cosine");
        cmd->fallthrough();
        auto tol = std::make_shared<double>(1e-12);
        cmd->add_option("--tolerance", *tol);
        cmd->callback([=, &exit_code]() {
            Timer timer;
            const auto r = gauss17_check();
            const bool pass = r.defect < *tol;
            json doc{{"check", "gauss17"}, {"lhs", r.lhs},      {"rhs", r.rhs},
                     {"defect", r.defect}, {"tolerance", *tol}, {"pass", pass},
                     {"elapsed_s", timer.seconds()}};
            emit_report(doc, *as_json);
            if (!pass) exit_code = kExitVerificationFailed;
        });
    }
    {
        auto* cmd = verify->add_subcommand("symmetry", "Dihedral symmetry of one period image");
        cmd->fallthrough();
        auto modulus = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(kSetTolerance);
        cmd->add_option("--modulus", *modulus)->required();
        cmd->add_option("--omega", *omega)->required();
        cmd->add_option("--tolerance", *tol);
        cmd->callback([=, &threads, &exit_code]() {
            Timer timer;
            const auto img = image(OrbitSpec::make(parse_u64(*modulus, "--modulus"),
                                                   parse_i64(*omega, "--omega")),
                                   1, threads);
            const auto r = verify_symmetry(img, *tol);
            json doc{{"check", "symmetry"},
                     {"modulus", img.spec.modulus},
                     {"omega", img.spec.generator},
                     {"k", r.k},
                     {"max_conjugation_defect", r.max_conjugation_defect},
                     {"max_rotation_defect", r.max_rotation_defect},
                     {"tolerance", r.tolerance},
                     {"pass", r.passed},
                     {"elapsed_s", timer.seconds()}};
            emit_report(doc, *as_json);
            if (!r.passed) exit_code = kExitVerificationFailed;
        });
    }
    {
        auto* cmd = verify->add_subcommand("containment",
                                           "Pointwise identity between periods and the Laurent map");
        cmd->fallthrough();
        auto modulus = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(kPointwiseTolerance);
        cmd->add_option("--modulus", *modulus)->required();
        cmd->add_option("--omega", *omega)->required();
        cmd->add_option("--tolerance", *tol);
        cmd->callback([=, &threads, &exit_code]() {
            Timer timer;
            const auto r = verify_containment(parse_u64(*modulus, "--modulus"),
                                              parse_i64(*omega, "--omega"), *tol, threads);
            json doc{{"check", "containment"},
                     {"q", r.q},
                     {"omega", r.omega},
                     {"prime", r.prime},
                     {"exponent", r.exponent},
                     {"order", r.order},
                     {"superclasses", r.superclasses},
                     {"max_defect", r.max_defect},
                     {"worst_representative", r.worst_representative},
                     {"tolerance", r.tolerance},
                     {"pass", r.passed},
                     {"elapsed_s", timer.seconds()}};
            emit_report(doc, *as_json);
            if (!r.passed) exit_code = kExitVerificationFailed;
        });
    }
    {
        auto* cmd = verify->add_subcommand("hypocycloid",
                                           "Period values lie inside the cusped region");
        cmd->fallthrough();
        auto modulus = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        auto eps = std::make_shared<double>(kSetTolerance);
        auto boundary = std::make_shared<std::string>("32768");
        cmd->add_option("--modulus", *modulus)->required();
        cmd->add_option("--omega", *omega)->required();
        cmd->add_option("--eps", *eps, "Boundary band width");
        cmd->add_option("--boundary-samples", *boundary, "Polyline resolution");
        cmd->callback([=, &threads, &exit_code]() {
            Timer timer;
            const auto r = verify_hypocycloid(parse_u64(*modulus, "--modulus"),
                                              parse_i64(*omega, "--omega"), *eps, threads,
                                              parse_u64(*boundary, "--boundary-samples"));
            json doc{{"check", "hypocycloid"},
                     {"q", r.q},
                     {"omega", r.omega},
                     {"cusps", r.cusps},
                     {"boundary_samples", r.boundary_samples},
                     {"points_checked", r.points_checked},
                     {"outside", r.outside},
                     {"eps", r.eps},
                     {"pass", r.passed},
                     {"elapsed_s", timer.seconds()}};
            emit_report(doc, *as_json);
            if (!r.passed) exit_code = kExitVerificationFailed;
        });
    }
    {
        auto* cmd = verify->add_subcommand("minkowski",
                                           "Prime-power Laurent map splits into degree-r copies");
        cmd->fallthrough();
        auto rtext = std::make_shared<std::string>();
        auto btext = std::make_shared<std::string>("2");
        auto samples = std::make_shared<std::string>("10000");
        auto seed = std::make_shared<std::string>("1");
        auto tol = std::make_shared<double>(kPointwiseTolerance);
        cmd->add_option("--r", *rtext, "Odd prime r")->required();
        cmd->add_option("--b", *btext, "Exponent b >= 2");
        cmd->add_option("--samples", *samples);
        cmd->add_option("--seed", *seed);
        cmd->add_option("--tolerance", *tol);
        cmd->callback([=, &exit_code]() {
            Timer timer;
            const auto r = minkowski_decomposition_check(
                parse_u64(*rtext, "--r"), static_cast<unsigned>(parse_u64(*btext, "--b")),
                parse_u64(*samples, "--samples"), parse_u64(*seed, "--seed"), *tol);
            json doc{{"check", "minkowski"},
                     {"r", r.r},
                     {"b", r.b},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"max_defect", r.max_defect},
                     {"tolerance", r.tolerance},
                     {"sfs_radius", r.sfs_radius},
                     {"pass", r.passed},
                     {"elapsed_s", timer.seconds()}};
            emit_report(doc, *as_json);
            if (!r.passed) exit_code = kExitVerificationFailed;
        });
    }
    {
        auto* cmd = verify->add_subcommand("multiplicativity",
                                           "Product structure of images over coprime moduli");
        cmd->fallthrough();
        auto mtext = std::make_shared<std::string>();
        auto ntext = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(kSetTolerance);
        cmd->add_option("--m", *mtext)->required();
        cmd->add_option("--n", *ntext)->required();
        cmd->add_option("--omega", *omega, "Unit mod m*n")->required();
        cmd->add_option("--tolerance", *tol);
        cmd->callback([=, &threads, &exit_code]() {
            Timer timer;
            const auto r = verify_multiplicativity(parse_u64(*mtext, "--m"),
                                                   parse_u64(*ntext, "--n"),
                                                   parse_i64(*omega, "--omega"), *tol, threads);
            json doc{{"check", "multiplicativity"},
                     {"m", r.m},
                     {"n", r.n},
                     {"omega", r.omega},
                     {"order_m", r.order_m},
                     {"order_n", r.order_n},
                     {"image_size", r.image_size},
                     {"product_size", r.product_size},
                     {"max_defect", r.max_defect},
                     {"tolerance", r.tolerance},
                     {"pass", r.passed},
                     {"elapsed_s", timer.seconds()}};
            emit_report(doc, *as_json);
            if (!r.passed) exit_code = kExitVerificationFailed;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Hypothesis: return kExitHypothesis;
            case ErrorKind::Usage:
            case ErrorKind::Io:
            case ErrorKind::Internal: return kExitUsage;
        }
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
