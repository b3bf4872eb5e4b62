#include "periodviz/supercharacter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "periodviz/errors.hpp"
#include "periodviz/neighbors.hpp"
#include "periodviz/parallel.hpp"

namespace periodviz {

RootTable::RootTable(std::uint64_t n) : n_(n) {
    if (n == 0) throw Error(ErrorKind::Usage, "root table: modulus must be >= 1");
    if (n > kMaxSweepModulus)
        throw Error(ErrorKind::Usage,
                    "root table: modulus " + std::to_string(n) + " exceeds the dense-sweep cap " +
                        std::to_string(kMaxSweepModulus));
    roots_.resize(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::uint64_t t = 0; t < n; ++t) {
        const double theta = step * static_cast<double>(t);
        roots_[t] = {std::cos(theta), std::sin(theta)};
    }
}

std::complex<double> eval_supercharacter(const OrbitSpec& spec, std::int64_t y,
                                         const RootTable& table) {
    const std::uint64_t n = spec.modulus;
    const std::uint64_t yr = mod_reduce(y, n);
    std::complex<double> acc = 0.0;
    for (std::uint64_t x : spec.orbit) acc += table[mul_mod(x, yr, n)];
    return acc;
}

std::complex<double> eval_supercharacter(const OrbitSpec& spec, std::int64_t y) {
    return eval_supercharacter(spec, y, RootTable(spec.modulus));
}

std::vector<std::uint64_t> superclass_minima(const OrbitSpec& spec) {
    const std::uint64_t n = spec.modulus;
    const std::uint64_t w = spec.generator;
    std::vector<bool> visited(n, false);
    std::vector<std::uint64_t> minima;
    for (std::uint64_t y = 0; y < n; ++y) {
        if (visited[y]) continue;
        // Scanning ascending, the first unvisited member is the orbit minimum.
        minima.push_back(y);
        visited[y] = true;
        for (std::uint64_t t = mul_mod(w, y, n); t != y; t = mul_mod(w, t, n)) visited[t] = true;
    }
    return minima;
}

std::complex<double> round_to_grid(std::complex<double> z) {
    const double inv = 1.0 / kValueGrid;
    return {std::llround(z.real() * inv) * kValueGrid, std::llround(z.imag() * inv) * kValueGrid};
}

namespace {

struct GridKey {
    std::int64_t re, im;
    bool operator==(const GridKey&) const = default;
};

struct GridKeyHash {
    std::size_t operator()(const GridKey& k) const {
        return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(k.re) * 0x9e3779b97f4a7c15ULL ^
                                          static_cast<std::uint64_t>(k.im));
    }
};

GridKey grid_key(std::complex<double> z) {
    const double inv = 1.0 / kValueGrid;
    return {std::llround(z.real() * inv), std::llround(z.imag() * inv)};
}

bool lex_less(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Grid-deduplicated exact values of a point list ordered by representative:
// the first point seen in a cell (the one with the smallest representative)
// stays. Deterministic because the input order is.
std::vector<std::complex<double>> dedup_exact(const std::vector<PeriodPoint>& points) {
    std::unordered_map<GridKey, std::complex<double>, GridKeyHash> cells;
    cells.reserve(points.size() * 2);
    std::vector<std::complex<double>> out;
    for (const auto& p : points)
        if (cells.emplace(grid_key(p.value), p.value).second) out.push_back(p.value);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

std::vector<std::complex<double>> PeriodImage::distinct_exact() const {
    return dedup_exact(points);
}

PeriodImage image(const OrbitSpec& spec, std::uint64_t layer_mod, unsigned threads) {
    const std::uint64_t n = spec.modulus;
    if (layer_mod == 0 || (layer_mod != 1 && (n % layer_mod != 0 || layer_mod >= n)))
        throw InvalidLayerModulusError("image: layer modulus " + std::to_string(layer_mod) +
                                       " must be 1 or a proper divisor of " + std::to_string(n));

    PeriodImage img;
    img.spec = spec;
    img.layer_mod = layer_mod;

    const RootTable table(n);
    const auto minima = superclass_minima(spec);
    img.superclass_count = minima.size();

    // One evaluation per superclass, one emitted point per layer its members
    // hit; the value is replicated, never recomputed.
    if (layer_mod == 1) {
        img.points.resize(minima.size());
        parallel_chunks(0, minima.size(), threads,
                        [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                            for (std::uint64_t i = lo; i < hi; ++i)
                                img.points[i] = {minima[i], 0,
                                                 eval_supercharacter(spec, minima[i], table)};
                        });
    } else {
        std::vector<std::vector<PeriodPoint>> emitted(minima.size());
        parallel_chunks(0, minima.size(), threads, [&](unsigned, std::uint64_t lo,
                                                       std::uint64_t hi) {
            std::vector<std::uint64_t> members;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const std::uint64_t rep = minima[i];
                const std::complex<double> value = eval_supercharacter(spec, rep, table);
                members.clear();
                members.push_back(rep);
                for (std::uint64_t t = mul_mod(spec.generator, rep, n); t != rep;
                     t = mul_mod(spec.generator, t, n))
                    members.push_back(t);
                // Smallest member per layer becomes that layer's representative.
                std::sort(members.begin(), members.end());
                std::vector<std::uint32_t> seen;
                for (std::uint64_t m : members) {
                    const auto layer = static_cast<std::uint32_t>(m % layer_mod);
                    if (std::find(seen.begin(), seen.end(), layer) == seen.end()) {
                        seen.push_back(layer);
                        emitted[i].push_back({m, layer, value});
                    }
                }
            }
        });
        std::size_t total = 0;
        for (const auto& v : emitted) total += v.size();
        img.points.reserve(total);
        for (const auto& v : emitted) img.points.insert(img.points.end(), v.begin(), v.end());
        std::sort(img.points.begin(), img.points.end(),
                  [](const PeriodPoint& a, const PeriodPoint& b) {
                      return a.representative < b.representative;
                  });
    }

    img.distinct.reserve(img.points.size());
    for (const auto& p : img.points) img.distinct.push_back(round_to_grid(p.value));
    std::sort(img.distinct.begin(), img.distinct.end(), lex_less);
    img.distinct.erase(std::unique(img.distinct.begin(), img.distinct.end()),
                       img.distinct.end());
    return img;
}

SymmetryReport verify_symmetry(const PeriodImage& img, double tolerance) {
    if (img.points.empty()) throw EmptyImageError("verify_symmetry: empty image");

    SymmetryReport report;
    report.tolerance = tolerance;
    const std::uint64_t n = img.spec.modulus;
    // gcd(n, 0) = n covers omega = 1, whose image is the full set of n-th
    // roots of unity with n-fold symmetry.
    report.k = gcd_u64(n, mod_reduce(static_cast<std::int64_t>(img.spec.generator) - 1, n));

    std::vector<std::complex<double>> values;
    values.reserve(img.points.size());
    for (const auto& p : img.points) values.push_back(p.value);
    const PlanarNeighborIndex index(values);

    const double angle = 2.0 * std::numbers::pi / static_cast<double>(report.k);
    const std::complex<double> rot{std::cos(angle), std::sin(angle)};

    double conj_defect = 0.0, rot_defect = 0.0;
    for (const auto& z : values) {
        conj_defect = std::max(conj_defect, index.nearest_distance(std::conj(z)));
        rot_defect = std::max(rot_defect, index.nearest_distance(z * rot));
    }
    report.max_conjugation_defect = conj_defect;
    report.max_rotation_defect = rot_defect;
    report.passed = conj_defect < tolerance && rot_defect < tolerance;
    return report;
}

MultiplicativityReport verify_multiplicativity(std::uint64_t m, std::uint64_t n,
                                               std::int64_t omega, double tolerance,
                                               unsigned threads) {
    if (m == 0 || n == 0)
        throw Error(ErrorKind::Usage, "verify_multiplicativity: moduli must be >= 1");
    if (gcd_u64(m, n) != 1)
        throw NotCoprimeError("verify_multiplicativity: moduli " + std::to_string(m) + " and " +
                              std::to_string(n) + " are not coprime");

    MultiplicativityReport report;
    report.m = m;
    report.n = n;
    report.tolerance = tolerance;

    const std::uint64_t mn = m * n;
    report.omega = mod_reduce(omega, mn);

    const auto spec_m = OrbitSpec::make(m, static_cast<std::int64_t>(report.omega % m));
    const auto spec_n = OrbitSpec::make(n, static_cast<std::int64_t>(report.omega % n));
    report.order_m = spec_m.order;
    report.order_n = spec_n.order;
    if (gcd_u64(spec_m.order, spec_n.order) != 1)
        throw OrdersNotCoprimeError(
            "verify_multiplicativity: component orders " + std::to_string(spec_m.order) + " and " +
            std::to_string(spec_n.order) + " share a factor; the product identity does not apply");

    const auto spec_mn = OrbitSpec::make(mn, static_cast<std::int64_t>(report.omega));

    const auto values_mn = image(spec_mn, 1, threads).distinct_exact();
    const auto values_m = image(spec_m, 1, threads).distinct_exact();
    const auto values_n = image(spec_n, 1, threads).distinct_exact();

    std::vector<PeriodPoint> product_points;
    product_points.reserve(values_m.size() * values_n.size());
    std::uint64_t tag = 0;
    for (const auto& w : values_m)
        for (const auto& z : values_n) product_points.push_back({tag++, 0, w * z});
    const auto products = dedup_exact(product_points);

    report.image_size = values_mn.size();
    report.product_size = products.size();

    const PlanarNeighborIndex idx_image(values_mn);
    const PlanarNeighborIndex idx_products(products);
    double defect = 0.0;
    for (const auto& z : values_mn) defect = std::max(defect, idx_products.nearest_distance(z));
    for (const auto& z : products) defect = std::max(defect, idx_image.nearest_distance(z));

    report.max_defect = defect;
    report.passed = defect < tolerance;
    return report;
}

}  // namespace periodviz
