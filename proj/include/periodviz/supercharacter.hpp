#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "periodviz/arith.hpp"

namespace periodviz {

// Dedup grid pitch for distinct-value sets.
inline constexpr double kValueGrid = 1e-6;

// Set-matching and pointwise-identity default tolerances.
inline constexpr double kSetTolerance = 1e-6;
inline constexpr double kPointwiseTolerance = 1e-9;

// Table of e(t/n) = exp(2*pi*i*t/n) for t in [0, n), built with one cos/sin
// pair per entry. Immutable after construction and safe to share across
// threads. Dense in n, so the modulus is capped at kMaxSweepModulus.
class RootTable {
public:
    static constexpr std::uint64_t kMaxSweepModulus = 1ull << 24;

    explicit RootTable(std::uint64_t n);

    std::uint64_t modulus() const { return n_; }
    const std::complex<double>& operator[](std::uint64_t t) const { return roots_[t]; }

private:
    std::uint64_t n_;
    std::vector<std::complex<double>> roots_;
};

// sum over x in the orbit of e(x*y/n), via table lookups indexed by
// x*y mod n (128-bit intermediate products).
std::complex<double> eval_supercharacter(const OrbitSpec& spec, std::int64_t y,
                                         const RootTable& table);

// Convenience overload that builds the table; fine for one-off evaluations.
std::complex<double> eval_supercharacter(const OrbitSpec& spec, std::int64_t y);

// Ascending list of orbit minima of the multiplication action on Z/nZ;
// every residue belongs to exactly one listed orbit.
std::vector<std::uint64_t> superclass_minima(const OrbitSpec& spec);

struct PeriodPoint {
    std::uint64_t representative;  // smallest member of (superclass ∩ layer)
    std::uint32_t layer;           // representative mod layer_mod
    std::complex<double> value;
};

// The full value set of one cyclic supercharacter. The sum is evaluated once
// per superclass (it is constant on superclasses) and replicated across the
// layer labels its members hit, so |points| counts (superclass, layer) pairs.
// `distinct` holds the value set rounded to the kValueGrid lattice, sorted by
// (re, im); it is bit-identical for any worker count.
struct PeriodImage {
    OrbitSpec spec;
    std::uint64_t layer_mod = 1;
    std::size_t superclass_count = 0;
    std::vector<PeriodPoint> points;                // sorted by representative
    std::vector<std::complex<double>> distinct;

    // Exact (unrounded) values deduplicated on the same grid, each cell
    // represented by the value at its smallest representative. Theorem checks
    // use these so grid rounding never eats their tolerance.
    std::vector<std::complex<double>> distinct_exact() const;
};

// layer_mod must be 1 or a proper divisor of n.
PeriodImage image(const OrbitSpec& spec, std::uint64_t layer_mod = 1, unsigned threads = 0);

std::complex<double> round_to_grid(std::complex<double> z);

struct SymmetryReport {
    std::uint64_t k = 1;
    double max_conjugation_defect = 0.0;
    double max_rotation_defect = 0.0;
    double tolerance = kSetTolerance;
    bool passed = false;
};

// k = gcd(n, omega-1); checks that conjugation and rotation by e(1/k) map the
// value set into itself within `tolerance` (nearest-neighbor defects).
SymmetryReport verify_symmetry(const PeriodImage& img, double tolerance = kSetTolerance);

struct MultiplicativityReport {
    std::uint64_t m = 0, n = 0, omega = 0;
    std::uint64_t order_m = 0, order_n = 0;
    std::size_t image_size = 0;    // distinct values mod m*n
    std::size_t product_size = 0;  // distinct pairwise products
    double max_defect = 0.0;       // bidirectional Hausdorff defect
    double tolerance = kSetTolerance;
    bool passed = false;
};

// Compares the value set mod m*n against the pairwise product of the value
// sets mod m and mod n. Requires gcd(m, n) = 1 and coprime component orders
// (OrdersNotCoprimeError otherwise: the property does not apply).
MultiplicativityReport verify_multiplicativity(std::uint64_t m, std::uint64_t n,
                                               std::int64_t omega,
                                               double tolerance = kSetTolerance,
                                               unsigned threads = 0);

}  // namespace periodviz
