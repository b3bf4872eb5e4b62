#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace periodviz {

// Smallest unit of multiplicative order exactly d mod q. Throws
// NoSuchRootError when d does not divide phi(q).
std::uint64_t find_root_of_unity(std::uint64_t q, std::uint64_t d);

// q points in [0,1)^phi(d): point l has coordinate j equal to
// frac(l * w^j / q) for the smallest order-d root w. Requires q an odd prime
// power and 2 <= d | phi(q).
struct LambdaSet {
    std::uint64_t q = 0;
    std::uint64_t d = 0;
    std::uint64_t root = 0;
    std::size_t dim = 0;
    std::vector<double> coords;  // row-major, q * dim

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dim, dim};
    }
};

LambdaSet lambda_set(std::uint64_t q, std::uint64_t d);

struct WeylSum {
    std::complex<double> computed;   // direct summation of e(u . v)
    std::complex<double> predicted;  // q when q | f(root), else 0
};

// Frequency vector v must have dimension phi(d).
WeylSum weyl_sum(const LambdaSet& lambda, std::span<const std::int64_t> v);

// Max over all boxes with corners on the {k/G} grid of
// |fraction of points inside - box volume|. Supports dimensions 1..3.
double discrepancy_estimate(std::span<const double> coords, std::size_t dim, unsigned grid);
double discrepancy_estimate(const LambdaSet& lambda, unsigned grid);

}  // namespace periodviz
