#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace periodviz {

// Integer coefficients of the d-th cyclotomic polynomial, lowest degree
// first; degree phi(d), leading coefficient 1.
struct CyclotomicPolynomial {
    std::uint64_t index = 0;
    std::vector<std::int64_t> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }
};

// Computed by exact division of x^d - 1 by the product of the cyclotomic
// polynomials of all proper divisors (recursive, memoized per process).
// All coefficient arithmetic is checked; CoefficientOverflowError on any
// value leaving the signed 64-bit range.
CyclotomicPolynomial cyclotomic_poly(std::uint64_t d);

// Column k holds the coefficients of x^k reduced mod the d-th cyclotomic
// polynomial in the power basis 1, x, ..., x^(phi(d)-1). Columns k < phi(d)
// are standard basis vectors.
struct ReductionMatrix {
    std::uint64_t index = 0;
    std::size_t rows = 0;  // phi(d)
    std::size_t cols = 0;  // d
    std::vector<std::int64_t> entries;  // column-major

    std::int64_t at(std::size_t row, std::size_t col) const {
        return entries[col * rows + row];
    }
};

ReductionMatrix reduction_matrix(std::uint64_t d);

}  // namespace periodviz
