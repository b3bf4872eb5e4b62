// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line each. Exits nonzero if any criterion fails.
//
// Usage: acceptance --cli /path/to/periodviz

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "periodviz/arith.hpp"
#include "periodviz/cyclotomic.hpp"
#include "periodviz/equidistribution.hpp"
#include "periodviz/hypocycloid.hpp"
#include "periodviz/laurent.hpp"
#include "periodviz/render.hpp"
#include "periodviz/supercharacter.hpp"

using namespace periodviz;
using cplx = std::complex<double>;

namespace {

std::string g_cli;
int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& body) {
    try {
        const std::string detail = body();
        std::printf("PASS criterion %2d: %s%s%s\n", number, name.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("FAIL criterion %2d: %s -- %s\n", number, name.c_str(), e.what());
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::runtime_error(message);
}

int run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args;
    const int rc = std::system(cmd.c_str());
    if (rc == -1) throw std::runtime_error("failed to spawn: " + cmd);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::vector<std::uint8_t> slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    require(static_cast<bool>(file), "cannot read " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

struct CsvRow {
    std::uint64_t y;
    std::uint32_t layer;
    double re, im;
};

std::vector<CsvRow> parse_period_csv(const std::string& path) {
    std::ifstream file(path);
    require(static_cast<bool>(file), "cannot read " + path);
    std::string line;
    require(static_cast<bool>(std::getline(file, line)), "empty csv");
    require(line == "y,layer,re,im", "unexpected csv header: " + line);
    std::vector<CsvRow> rows;
    while (std::getline(file, line)) {
        if (line.empty()) continue;
        CsvRow row;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        require(static_cast<bool>(ss >> row.y >> row.layer >> row.re >> row.im),
                "bad csv row: " + line);
        rows.push_back(row);
    }
    return rows;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double elapsed_s(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criteria -------------------------------------------------------------

std::string golden_ratio_image() {
    const int rc = run_cli("periods --modulus 5 --omega 4 --out acceptance_periods.csv");
    require(rc == 0, "periods exited with " + std::to_string(rc));
    const auto rows = parse_period_csv("acceptance_periods.csv");
    require(rows.size() == 3, "expected 3 rows, got " + std::to_string(rows.size()));
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    const std::vector<cplx> expected{{2.0, 0.0}, {golden, 0.0}, {-golden - 1.0, 0.0}};
    for (std::size_t i = 0; i < 3; ++i) {
        const cplx got{rows[i].re, rows[i].im};
        require(std::abs(got - expected[i]) < 1e-9,
                "row " + std::to_string(i) + " off by " + fmt(std::abs(got - expected[i])));
    }

    // Library-level timing; best of several runs to dodge scheduler noise.
    const auto spec = OrbitSpec::make(5, 4);
    double best = 1e9;
    for (int i = 0; i < 25; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const auto img = image(spec, 1, 1);
        best = std::min(best, elapsed_s(start));
        require(img.distinct.size() == 3, "distinct size");
    }
    require(best < 1e-3, "image() took " + fmt(best) + " s");
    return "3 values within 1e-9, " + fmt(best * 1e6) + " us";
}

std::string cyclotomic_ledger() {
    const auto start = std::chrono::steady_clock::now();
    using coeffs = std::vector<std::int64_t>;
    require(cyclotomic_poly(1).coefficients == coeffs{-1, 1}, "index 1");
    require(cyclotomic_poly(2).coefficients == coeffs{1, 1}, "index 2");
    require(cyclotomic_poly(3).coefficients == coeffs{1, 1, 1}, "index 3");
    require(cyclotomic_poly(4).coefficients == coeffs{1, 0, 1}, "index 4");
    require(cyclotomic_poly(5).coefficients == coeffs{1, 1, 1, 1, 1}, "index 5");
    for (std::uint64_t d = 1; d < 105; ++d)
        for (const auto c : cyclotomic_poly(d).coefficients)
            require(c >= -1 && c <= 1, "coefficient outside {-1,0,1} at d=" + std::to_string(d));
    bool has_minus_two = false;
    for (const auto c : cyclotomic_poly(105).coefficients) has_minus_two |= c == -2;
    require(has_minus_two, "no -2 coefficient at d=105");
    for (std::uint64_t d = 1; d <= 200; ++d) cyclotomic_poly(d);
    const double total = elapsed_s(start);
    require(total < 1.0, "ledger took " + fmt(total) + " s");
    return "indices 1..200 in " + fmt(total) + " s";
}

std::string containment_identity() {
    std::string detail;
    for (const auto& [q, w, d] :
         std::vector<std::tuple<std::uint64_t, std::int64_t, std::uint64_t>>{
             {7, 2, 3}, {31, 2, 5}, {912673, 61074, 3}}) {
        const auto start = std::chrono::steady_clock::now();
        const auto report = verify_containment(q, w, 1e-8, 0);
        const double t = elapsed_s(start);
        require(report.order == d, "unexpected order at q=" + std::to_string(q));
        require(report.passed, "defect " + fmt(report.max_defect) + " at q=" + std::to_string(q));
        if (q == 912673) {
            require(t < 60.0, "containment at q=97^3 took " + fmt(t) + " s");
            detail = "q=97^3: defect " + fmt(report.max_defect) + " over " +
                     std::to_string(report.superclasses) + " superclasses in " + fmt(t) + " s";
        }
    }
    return detail;
}

std::string hypocycloid_containment() {
    const auto report = verify_hypocycloid(912673, 61074, 1e-6, 0);
    require(report.cusps == 3, "expected 3 cusps");
    require(report.passed, std::to_string(report.outside) + " values outside");

    // Diagonal values land on the polygonized boundary.
    const auto region = hypocycloid(3, 4096);
    const auto& rm = reduction_matrix(3);
    double worst = 0.0;
    for (std::size_t k = 0; k < region.boundary.size(); k += 3) {
        const double theta = static_cast<double>(k) / static_cast<double>(region.boundary.size());
        const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * theta);
        const auto diag = eval_laurent(rm, TorusPoint{z, z});
        worst = std::max(worst, std::abs(diag - region.boundary[k]));
        require(in_hypocycloid(region, diag, 1e-6), "diagonal point escaped the region");
    }
    require(worst < 1e-6, "diagonal defect " + fmt(worst));
    return std::to_string(report.points_checked) + " values inside, diagonal defect " + fmt(worst);
}

std::string dihedral_symmetry() {
    std::string detail;
    for (const auto& [n, w, k] : std::vector<std::tuple<std::uint64_t, std::int64_t, std::uint64_t>>{
             {255255, 254, 11}, {455175, 3599, 7}, {1001, 155, 77}}) {
        const auto start = std::chrono::steady_clock::now();
        const auto img = image(OrbitSpec::make(n, w), 1, 0);
        const auto report = verify_symmetry(img, 1e-6);
        require(report.k == k, "k=" + std::to_string(report.k) + " at n=" + std::to_string(n));
        require(report.passed, "defects " + fmt(report.max_conjugation_defect) + "/" +
                                   fmt(report.max_rotation_defect) + " at n=" + std::to_string(n));
        if (n == 255255)
            detail = "n=255255: k=11, defects " + fmt(report.max_conjugation_defect) + "/" +
                     fmt(report.max_rotation_defect) + " in " + fmt(elapsed_s(start)) + " s";
    }
    return detail;
}

std::string multiplicativity() {
    const auto small = verify_multiplicativity(7, 5, 9, 1e-9, 0);
    require(small.passed, "m=7,n=5 defect " + fmt(small.max_defect));
    const auto big = verify_multiplicativity(70531, 5, 54184, 1e-6, 0);
    require(big.passed, "m=70531,n=5 defect " + fmt(big.max_defect));
    return "defects " + fmt(small.max_defect) + " and " + fmt(big.max_defect);
}

std::string weyl_dichotomy() {
    const auto lambda = lambda_set(7, 3);
    require(lambda.root == 2, "expected root 2 mod 7");
    for (std::int64_t v0 = -3; v0 <= 3; ++v0)
        for (std::int64_t v1 = -3; v1 <= 3; ++v1) {
            if (v0 == 0 && v1 == 0) continue;
            const auto s = weyl_sum(lambda, std::vector<std::int64_t>{v0, v1});
            require(std::abs(s.computed - s.predicted) < 1e-9 * 7.0,
                    "sum mismatch at v=(" + std::to_string(v0) + "," + std::to_string(v1) + ")");
        }

    const double d73 = discrepancy_estimate(lambda_set(73, 3), 20);
    const double d961 = discrepancy_estimate(lambda_set(961, 3), 20);
    const double d3571 = discrepancy_estimate(lambda_set(3571, 3), 20);
    const std::string values =
        "estimates " + fmt(d73) + " > " + fmt(d961) + " > " + fmt(d3571) + " expected";
    require(d73 > d961 && d961 > d3571, "not strictly decreasing: " + values);
    return values;
}

std::string minkowski_identity() {
    const auto report = minkowski_decomposition_check(3, 2, 10000, 20240214, 1e-9);
    require(report.passed, "max defect " + fmt(report.max_defect));
    const double expected = 3.0 * std::sqrt(6.0);
    require(std::abs(report.sfs_radius - expected) < 1e-12,
            "radius off by " + fmt(std::abs(report.sfs_radius - expected)));
    return "max defect " + fmt(report.max_defect) + ", radius " + fmt(report.sfs_radius);
}

std::string even_reality_and_range() {
    std::mt19937_64 rng(424242);
    double worst_im = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto g4 = eval_laurent(4, random_torus_point(2, rng));
        const auto g6 = eval_laurent(6, random_torus_point(2, rng));
        worst_im = std::max({worst_im, std::abs(g4.imag()), std::abs(g6.imag())});
        require(g4.real() >= -4.0 - 1e-9 && g4.real() <= 4.0 + 1e-9,
                "degree-4 value " + fmt(g4.real()) + " out of range");
    }
    require(worst_im < 1e-9, "imaginary part " + fmt(worst_im));
    const auto hi = eval_laurent(4, TorusPoint(2, cplx{1.0, 0.0}));
    const auto lo = eval_laurent(4, TorusPoint(2, cplx{-1.0, 0.0}));
    require(std::abs(hi - cplx{4.0, 0.0}) < 1e-12, "upper endpoint missed");
    require(std::abs(lo + cplx{4.0, 0.0}) < 1e-12, "lower endpoint missed");
    return "10^4 samples, |Im| <= " + fmt(worst_im) + ", endpoints attained";
}

std::string gauss17() {
    const auto report = gauss17_check();
    require(report.defect < 1e-12, "defect " + fmt(report.defect));
    return "defect " + fmt(report.defect);
}

std::string render_determinism() {
    const std::string flags = " render --modulus 5 --omega 4 --size 256 --out ";
    require(run_cli("--threads 1" + flags + "acceptance_a.ppm") == 0, "render 1 failed");
    require(run_cli("--threads 4" + flags + "acceptance_b.ppm") == 0, "render 2 failed");
    require(run_cli("--threads 4" + flags + "acceptance_c.ppm") == 0, "render 3 failed");
    const auto a = slurp("acceptance_a.ppm");
    const auto b = slurp("acceptance_b.ppm");
    const auto c = slurp("acceptance_c.ppm");
    require(a == b && b == c, "renders differ across runs/threads");
    require(!a.empty(), "empty render");
    return std::to_string(a.size()) + " bytes, identical across runs and thread counts";
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
    if (g_cli.empty()) {
        std::cerr << "usage: acceptance --cli /path/to/periodviz\n";
        return 2;
    }

    criterion(1, "golden-ratio image (modulus 5)", golden_ratio_image);
    criterion(2, "cyclotomic coefficient ledger", cyclotomic_ledger);
    criterion(3, "containment identity at odd prime powers", containment_identity);
    criterion(4, "hypocycloid containment at q=97^3", hypocycloid_containment);
    criterion(5, "dihedral symmetry", dihedral_symmetry);
    criterion(6, "multiplicativity over coprime moduli", multiplicativity);
    criterion(7, "weyl-sum dichotomy and discrepancy decay", weyl_dichotomy);
    criterion(8, "minkowski decomposition of the degree-9 map", minkowski_identity);
    criterion(9, "even-degree reality and range", even_reality_and_range);
    criterion(10, "17-gon radical identity", gauss17);
    criterion(11, "render determinism", render_determinism);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
