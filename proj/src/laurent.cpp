#include "periodviz/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "periodviz/arith.hpp"
#include "periodviz/errors.hpp"
#include "periodviz/neighbors.hpp"
#include "periodviz/parallel.hpp"
#include "periodviz/supercharacter.hpp"

namespace periodviz {

namespace {

// z^e for |z| = 1; negative exponents via conjugation, |e| by squaring.
std::complex<double> unit_pow(std::complex<double> z, std::int64_t e) {
    if (e < 0) {
        z = std::conj(z);
        e = -e;
    }
    std::complex<double> acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

const ReductionMatrix& cached_reduction_matrix(std::uint64_t d) {
    static std::map<std::uint64_t, ReductionMatrix> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, reduction_matrix(d)).first;
    return it->second;
}

}  // namespace

std::complex<double> eval_laurent(const ReductionMatrix& rm,
                                  std::span<const std::complex<double>> z) {
    if (z.size() != rm.rows)
        throw Error(ErrorKind::Usage,
                    "eval_laurent: expected " + std::to_string(rm.rows) + " coordinates, got " +
                        std::to_string(z.size()));
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < rm.cols; ++k) {
        std::complex<double> mono = 1.0;
        for (std::size_t j = 0; j < rm.rows; ++j) {
            const std::int64_t e = rm.at(j, k);
            if (e != 0) mono *= unit_pow(z[j], e);
        }
        sum += mono;
    }
    return sum;
}

std::complex<double> eval_laurent(std::uint64_t d, std::span<const std::complex<double>> z) {
    return eval_laurent(cached_reduction_matrix(d), z);
}

std::complex<double> eval_laurent_crt(std::uint64_t r, std::uint64_t s,
                                      std::span<const std::complex<double>> grid,
                                      CrtSumConvention convention) {
    if (r == s || r < 3 || s < 3 || !is_prime(r) || !is_prime(s))
        throw Error(ErrorKind::Usage, "eval_laurent_crt: r and s must be distinct odd primes");
    const std::size_t rows = r - 1, cols = s - 1;
    if (grid.size() != rows * cols)
        throw Error(ErrorKind::Usage,
                    "eval_laurent_crt: expected " + std::to_string(rows * cols) +
                        " grid entries, got " + std::to_string(grid.size()));
    const auto at = [&](std::size_t i, std::size_t j) { return grid[i * cols + j]; };

    const std::size_t first_col = convention == CrtSumConvention::IncludeFirstColumn ? 0 : 1;
    std::complex<double> plain = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = first_col; j < cols; ++j) plain += at(i, j);

    std::complex<double> row_inverses = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        std::complex<double> prod = 1.0;
        for (std::size_t j = 0; j < cols; ++j) prod *= at(i, j);
        row_inverses += std::conj(prod);
    }

    std::complex<double> col_inverses = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
        std::complex<double> prod = 1.0;
        for (std::size_t i = 0; i < rows; ++i) prod *= at(i, j);
        col_inverses += std::conj(prod);
    }

    std::complex<double> full = 1.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) full *= at(i, j);

    return plain + row_inverses + col_inverses + full;
}

TorusPoint random_torus_point(std::size_t dim, std::mt19937_64& rng) {
    TorusPoint z(dim);
    for (auto& c : z) {
        const double u =
            static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);  // [0, 1)
        const double theta = 2.0 * std::numbers::pi * u;
        c = {std::cos(theta), std::sin(theta)};
    }
    return z;
}

ContainmentReport verify_containment(std::uint64_t q, std::int64_t omega, double tolerance,
                                     unsigned threads) {
    ContainmentReport report;
    report.q = q;
    report.tolerance = tolerance;

    const auto f = factorize(q);
    if (f.pairs.size() != 1 || f.pairs[0].first == 2)
        throw HypothesisViolatedError("verify_containment: modulus " + std::to_string(q) +
                                      " is not an odd prime power");
    report.prime = f.pairs[0].first;
    report.exponent = f.pairs[0].second;

    const auto spec = OrbitSpec::make(q, omega);
    report.omega = spec.generator;
    report.order = spec.order;
    if ((report.prime - 1) % spec.order != 0)
        throw HypothesisViolatedError("verify_containment: order " + std::to_string(spec.order) +
                                      " does not divide p - 1 = " +
                                      std::to_string(report.prime - 1));

    const auto& rm = cached_reduction_matrix(spec.order);
    const std::size_t dim = rm.rows;  // phi(d)
    // e(w^j y / q) needs w^j mod q for j < phi(d); these are the leading
    // entries of the orbit of 1.
    std::vector<std::uint64_t> basis(spec.orbit.begin(), spec.orbit.begin() + dim);

    const RootTable table(q);
    const auto minima = superclass_minima(spec);
    report.superclasses = minima.size();

    struct Worst {
        double defect = 0.0;
        std::uint64_t rep = 0;
    };
    const unsigned workers = resolve_thread_count(threads);
    std::vector<Worst> per_chunk(workers);
    parallel_chunks(0, minima.size(), workers, [&](unsigned chunk, std::uint64_t lo,
                                                   std::uint64_t hi) {
        TorusPoint z(dim);
        Worst w;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const std::uint64_t y = minima[i];
            for (std::size_t j = 0; j < dim; ++j) z[j] = table[mul_mod(basis[j], y, q)];
            const auto lhs = eval_supercharacter(spec, y, table);
            const auto rhs = eval_laurent(rm, z);
            const double defect = std::abs(lhs - rhs);
            if (defect > w.defect || (defect == w.defect && y < w.rep)) w = {defect, y};
        }
        per_chunk[chunk] = w;
    });

    Worst overall;
    for (const auto& w : per_chunk)
        if (w.defect > overall.defect || (w.defect == overall.defect && w.rep < overall.rep))
            overall = w;
    report.max_defect = overall.defect;
    report.worst_representative = overall.rep;
    report.passed = overall.defect < tolerance;
    return report;
}

MinkowskiReport minkowski_decomposition_check(std::uint64_t r, unsigned b, std::size_t samples,
                                              std::uint64_t seed, double tolerance) {
    if (r < 3 || !is_prime(r))
        throw Error(ErrorKind::Usage, "minkowski check: r must be an odd prime");
    if (b < 2) throw Error(ErrorKind::Usage, "minkowski check: b must be >= 2");

    MinkowskiReport report;
    report.r = r;
    report.b = b;
    report.samples = samples;
    report.seed = seed;
    report.tolerance = tolerance;
    report.sfs_radius = 2.0 * std::sqrt(2.0) * static_cast<double>(r) *
                        std::sin(std::numbers::pi / static_cast<double>(r));

    std::uint64_t rb = 1, stride = 1;
    for (unsigned i = 0; i + 1 < b; ++i) stride *= r;  // r^(b-1)
    rb = stride * r;

    const auto& rm_big = cached_reduction_matrix(rb);
    const auto& rm_small = cached_reduction_matrix(r);
    const std::size_t dim = rm_big.rows;  // r^b - r^(b-1) = (r-1) * stride

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    TorusPoint slice(r - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto z = random_torus_point(dim, rng);
        const auto whole = eval_laurent(rm_big, z);
        std::complex<double> split = 0.0;
        for (std::uint64_t j = 0; j < stride; ++j) {
            for (std::uint64_t l = 0; l + 1 < r; ++l) slice[l] = z[j + l * stride];
            split += eval_laurent(rm_small, slice);
        }
        worst = std::max(worst, std::abs(whole - split));
    }
    report.max_defect = worst;
    report.passed = worst < tolerance;
    return report;
}

Gauss17Report gauss17_check() {
    Gauss17Report report;
    report.lhs = 16.0 * std::cos(2.0 * std::numbers::pi / 17.0);
    const double s17 = std::sqrt(17.0);
    const double a = std::sqrt(34.0 - 2.0 * s17);
    const double c = std::sqrt(34.0 + 2.0 * s17);
    report.rhs = -1.0 + s17 + a + 2.0 * std::sqrt(17.0 + 3.0 * s17 - a - 2.0 * c);
    report.defect = std::abs(report.lhs - report.rhs);
    return report;
}

HImageReport h_image_heuristic(std::uint64_t r, std::uint64_t s, std::size_t samples,
                               std::uint64_t seed) {
    HImageReport report;
    report.r = r;
    report.s = s;
    report.samples = samples;
    report.seed = seed;
    report.tolerance = 0.05 * static_cast<double>(r * s);

    std::mt19937_64 rng(seed);
    const std::size_t grid_dim = (r - 1) * (s - 1);
    std::vector<std::complex<double>> crt_values(samples), plain_values(samples);
    for (std::size_t i = 0; i < samples; ++i)
        crt_values[i] = eval_laurent_crt(r, s, random_torus_point(grid_dim, rng));
    const auto& rm = cached_reduction_matrix(r * s);
    for (std::size_t i = 0; i < samples; ++i)
        plain_values[i] = eval_laurent(rm, random_torus_point(rm.rows, rng));

    const PlanarNeighborIndex idx_crt(crt_values);
    const PlanarNeighborIndex idx_plain(plain_values);
    const auto sweep = [](const std::vector<std::complex<double>>& queries,
                          const PlanarNeighborIndex& targets, double& sup, double& q999) {
        std::vector<double> distances(queries.size());
        for (std::size_t i = 0; i < queries.size(); ++i)
            distances[i] = targets.nearest_distance(queries[i]);
        sup = *std::max_element(distances.begin(), distances.end());
        const auto at = distances.begin() +
                        static_cast<std::ptrdiff_t>(0.999 * static_cast<double>(distances.size() - 1));
        std::nth_element(distances.begin(), at, distances.end());
        q999 = *at;
    };
    sweep(crt_values, idx_plain, report.max_crt_to_plain, report.q999_crt_to_plain);
    sweep(plain_values, idx_crt, report.max_plain_to_crt, report.q999_plain_to_crt);
    report.passed = report.max_crt_to_plain < report.tolerance &&
                    report.max_plain_to_crt < report.tolerance;
    return report;
}

}  // namespace periodviz
