#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "periodviz/cyclotomic.hpp"

namespace periodviz {

using TorusPoint = std::vector<std::complex<double>>;

// Sum over k < d of the monomial with exponent column k of the reduction
// matrix. Coordinates must lie on the unit circle; negative exponents are
// taken by conjugation, powers by repeated squaring.
std::complex<double> eval_laurent(const ReductionMatrix& rm,
                                  std::span<const std::complex<double>> z);

// Same map with the reduction matrix fetched (memoized) by index.
std::complex<double> eval_laurent(std::uint64_t d, std::span<const std::complex<double>> z);

// Index convention for the plain double sum in the two-prime Laurent map.
// IncludeFirstColumn sums the full (r-1) x (s-1) grid, which makes the
// all-ones value r*s and matches eval_laurent's value there; SkipFirstColumn
// drops column j = 0 (giving r*s - (r-1) at all-ones) and is kept only so the
// discrepancy between the two conventions stays observable.
enum class CrtSumConvention { IncludeFirstColumn, SkipFirstColumn };

// Laurent map with the same image as eval_laurent(r*s, .) for distinct odd
// primes r and s, written in a CRT-factored exponent basis over a grid of
// (r-1)*(s-1) unit coordinates, row-major with stride s-1.
std::complex<double> eval_laurent_crt(std::uint64_t r, std::uint64_t s,
                                      std::span<const std::complex<double>> grid,
                                      CrtSumConvention convention =
                                          CrtSumConvention::IncludeFirstColumn);

// Uniform point on the unit torus of the given dimension.
TorusPoint random_torus_point(std::size_t dim, std::mt19937_64& rng);

struct ContainmentReport {
    std::uint64_t q = 0, omega = 0;
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::uint64_t order = 0;
    std::size_t superclasses = 0;
    std::uint64_t worst_representative = 0;
    double max_defect = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// Checks |sigma(y) - eval_laurent(d, (e(w^j y / q))_j)| < tolerance at every
// superclass representative. Requires q an odd prime power and the order of
// omega dividing p - 1 (HypothesisViolatedError otherwise).
ContainmentReport verify_containment(std::uint64_t q, std::int64_t omega, double tolerance,
                                     unsigned threads = 0);

struct MinkowskiReport {
    std::uint64_t r = 0;
    unsigned b = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double max_defect = 0.0;
    double tolerance = 0.0;
    double sfs_radius = 0.0;  // 2*sqrt(2)*r*sin(pi/r)
    bool passed = false;
};

// Verifies on random torus points that the degree-r^b map splits into
// r^(b-1) copies of the degree-r map over interleaved coordinate slices.
MinkowskiReport minkowski_decomposition_check(std::uint64_t r, unsigned b, std::size_t samples,
                                              std::uint64_t seed, double tolerance = 1e-9);

struct Gauss17Report {
    double lhs = 0.0;     // 16*cos(2*pi/17)
    double rhs = 0.0;     // the nested-radical expression
    double defect = 0.0;
};

Gauss17Report gauss17_check();

struct HImageReport {
    std::uint64_t r = 0, s = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double max_crt_to_plain = 0.0;   // sup over crt samples of NN distance into plain samples
    double max_plain_to_crt = 0.0;
    // 99.9th-percentile NN distances. The sup statistic is dominated by
    // boundary neighborhoods where both sampling densities vanish, so it
    // swings by a factor of ~3 across seeds; the quantile is stable.
    double q999_crt_to_plain = 0.0;
    double q999_plain_to_crt = 0.0;
    double tolerance = 0.0;          // 0.05 * r * s
    bool passed = false;             // both sup distances under tolerance
};

// Heuristic image-equality check between the CRT-basis map and the plain map
// of index r*s: sampled bidirectional near-containment, NOT a verification.
HImageReport h_image_heuristic(std::uint64_t r, std::uint64_t s, std::size_t samples,
                               std::uint64_t seed);

}  // namespace periodviz
