#include "periodviz/equidistribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "periodviz/arith.hpp"
#include "periodviz/errors.hpp"

namespace periodviz {

std::uint64_t find_root_of_unity(std::uint64_t q, std::uint64_t d) {
    if (q < 2) throw Error(ErrorKind::Usage, "find_root_of_unity: q must be >= 2");
    if (d == 0 || totient(q) % d != 0)
        throw NoSuchRootError("find_root_of_unity: no element of order " + std::to_string(d) +
                              " mod " + std::to_string(q));
    if (d == 1) return 1;
    for (std::uint64_t w = 2; w < q; ++w) {
        if (gcd_u64(w, q) != 1) continue;
        if (mult_order(static_cast<std::int64_t>(w), q) == d) return w;
    }
    throw NoSuchRootError("find_root_of_unity: no element of order " + std::to_string(d) +
                          " mod " + std::to_string(q));
}

LambdaSet lambda_set(std::uint64_t q, std::uint64_t d) {
    const auto f = factorize(q);
    if (f.pairs.size() != 1 || f.pairs[0].first == 2)
        throw HypothesisViolatedError("lambda_set: q = " + std::to_string(q) +
                                      " is not an odd prime power");
    if (d < 2) throw Error(ErrorKind::Usage, "lambda_set: d must be >= 2");

    LambdaSet lambda;
    lambda.q = q;
    lambda.d = d;
    lambda.root = find_root_of_unity(q, d);
    lambda.dim = totient(d);
    lambda.coords.resize(q * lambda.dim);

    std::vector<std::uint64_t> powers(lambda.dim);
    powers[0] = 1;
    for (std::size_t j = 1; j < lambda.dim; ++j) powers[j] = mul_mod(powers[j - 1], lambda.root, q);

    for (std::uint64_t l = 0; l < q; ++l)
        for (std::size_t j = 0; j < lambda.dim; ++j)
            lambda.coords[l * lambda.dim + j] =
                static_cast<double>(mul_mod(l, powers[j], q)) / static_cast<double>(q);
    return lambda;
}

WeylSum weyl_sum(const LambdaSet& lambda, std::span<const std::int64_t> v) {
    if (v.size() != lambda.dim)
        throw Error(ErrorKind::Usage, "weyl_sum: frequency vector must have dimension " +
                                          std::to_string(lambda.dim));
    WeylSum result;
    std::complex<double> acc = 0.0;
    const double tau = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const auto u = lambda.point(i);
        double dot = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) dot += u[j] * static_cast<double>(v[j]);
        acc += std::complex<double>{std::cos(tau * dot), std::sin(tau * dot)};
    }
    result.computed = acc;

    // f(root) mod q, Horner with signed 128-bit steps.
    const __int128 q = static_cast<__int128>(lambda.q);
    __int128 value = 0;
    for (std::size_t j = v.size(); j-- > 0;) {
        value = (value * static_cast<__int128>(lambda.root) + static_cast<__int128>(v[j])) % q;
    }
    if (value < 0) value += q;
    result.predicted = value == 0 ? static_cast<double>(lambda.q) : 0.0;
    return result;
}

double discrepancy_estimate(std::span<const double> coords, std::size_t dim, unsigned grid) {
    if (grid < 2) throw Error(ErrorKind::Usage, "discrepancy: grid must be >= 2");
    if (dim < 1 || dim > 3)
        throw DimensionTooHighError("discrepancy: dimension " + std::to_string(dim) +
                                    " unsupported (1..3)");
    if (coords.empty() || coords.size() % dim != 0)
        throw Error(ErrorKind::Usage, "discrepancy: point list empty or not a multiple of dim");

    const std::size_t count = coords.size() / dim;
    const std::size_t g = grid;

    const auto cell = [&](double x) {
        auto c = static_cast<std::int64_t>(std::floor(x * static_cast<double>(g)));
        return static_cast<std::size_t>(std::clamp<std::int64_t>(c, 0, static_cast<std::int64_t>(g) - 1));
    };

    // Histogram on the g^dim cell grid, then inclusion-exclusion prefix sums;
    // every grid-corner box is a union of whole cells, so counts are exact.
    const std::size_t stride = g + 1;
    if (dim == 1) {
        std::vector<std::int64_t> pref(stride, 0);
        for (std::size_t i = 0; i < count; ++i) ++pref[cell(coords[i]) + 1];
        for (std::size_t a = 1; a < stride; ++a) pref[a] += pref[a - 1];
        double worst = 0.0;
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = a + 1; b <= g; ++b) {
                const double frac = static_cast<double>(pref[b] - pref[a]) /
                                    static_cast<double>(count);
                const double vol = static_cast<double>(b - a) / static_cast<double>(g);
                worst = std::max(worst, std::abs(frac - vol));
            }
        return worst;
    }
    if (dim == 2) {
        std::vector<std::int64_t> pref(stride * stride, 0);
        for (std::size_t i = 0; i < count; ++i)
            ++pref[(cell(coords[2 * i]) + 1) * stride + cell(coords[2 * i + 1]) + 1];
        for (std::size_t x = 1; x <= g; ++x)
            for (std::size_t y = 0; y <= g; ++y) pref[x * stride + y] += pref[(x - 1) * stride + y];
        for (std::size_t x = 0; x <= g; ++x)
            for (std::size_t y = 1; y <= g; ++y) pref[x * stride + y] += pref[x * stride + y - 1];
        const auto rect = [&](std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2) {
            return pref[b1 * stride + b2] - pref[a1 * stride + b2] - pref[b1 * stride + a2] +
                   pref[a1 * stride + a2];
        };
        double worst = 0.0;
        const double inv_count = 1.0 / static_cast<double>(count);
        const double inv_g2 = 1.0 / static_cast<double>(g * g);
        for (std::size_t a1 = 0; a1 < g; ++a1)
            for (std::size_t b1 = a1 + 1; b1 <= g; ++b1)
                for (std::size_t a2 = 0; a2 < g; ++a2)
                    for (std::size_t b2 = a2 + 1; b2 <= g; ++b2) {
                        const double frac = static_cast<double>(rect(a1, b1, a2, b2)) * inv_count;
                        const double vol = static_cast<double>((b1 - a1) * (b2 - a2)) * inv_g2;
                        worst = std::max(worst, std::abs(frac - vol));
                    }
        return worst;
    }

    // dim == 3
    const auto at = [&](std::vector<std::int64_t>& v, std::size_t x, std::size_t y,
                        std::size_t z) -> std::int64_t& {
        return v[(x * stride + y) * stride + z];
    };
    std::vector<std::int64_t> pref(stride * stride * stride, 0);
    for (std::size_t i = 0; i < count; ++i)
        ++at(pref, cell(coords[3 * i]) + 1, cell(coords[3 * i + 1]) + 1,
             cell(coords[3 * i + 2]) + 1);
    for (std::size_t x = 1; x <= g; ++x)
        for (std::size_t y = 0; y <= g; ++y)
            for (std::size_t z = 0; z <= g; ++z) at(pref, x, y, z) += at(pref, x - 1, y, z);
    for (std::size_t x = 0; x <= g; ++x)
        for (std::size_t y = 1; y <= g; ++y)
            for (std::size_t z = 0; z <= g; ++z) at(pref, x, y, z) += at(pref, x, y - 1, z);
    for (std::size_t x = 0; x <= g; ++x)
        for (std::size_t y = 0; y <= g; ++y)
            for (std::size_t z = 1; z <= g; ++z) at(pref, x, y, z) += at(pref, x, y, z - 1);
    const auto box = [&](std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2,
                         std::size_t a3, std::size_t b3) {
        return at(pref, b1, b2, b3) - at(pref, a1, b2, b3) - at(pref, b1, a2, b3) -
               at(pref, b1, b2, a3) + at(pref, a1, a2, b3) + at(pref, a1, b2, a3) +
               at(pref, b1, a2, a3) - at(pref, a1, a2, a3);
    };
    double worst = 0.0;
    const double inv_count = 1.0 / static_cast<double>(count);
    const double inv_g3 = 1.0 / static_cast<double>(g * g * g);
    for (std::size_t a1 = 0; a1 < g; ++a1)
        for (std::size_t b1 = a1 + 1; b1 <= g; ++b1)
            for (std::size_t a2 = 0; a2 < g; ++a2)
                for (std::size_t b2 = a2 + 1; b2 <= g; ++b2)
                    for (std::size_t a3 = 0; a3 < g; ++a3)
                        for (std::size_t b3 = a3 + 1; b3 <= g; ++b3) {
                            const double frac =
                                static_cast<double>(box(a1, b1, a2, b2, a3, b3)) * inv_count;
                            const double vol = static_cast<double>((b1 - a1) * (b2 - a2) *
                                                                   (b3 - a3)) *
                                               inv_g3;
                            worst = std::max(worst, std::abs(frac - vol));
                        }
    return worst;
}

double discrepancy_estimate(const LambdaSet& lambda, unsigned grid) {
    return discrepancy_estimate(lambda.coords, lambda.dim, grid);
}

}  // namespace periodviz
