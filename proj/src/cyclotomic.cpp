#include "periodviz/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <string>

#include "periodviz/arith.hpp"
#include "periodviz/errors.hpp"

namespace periodviz {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw CoefficientOverflowError("cyclotomic: coefficient exceeds 64-bit range");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw CoefficientOverflowError("cyclotomic: coefficient exceeds 64-bit range");
    return out;
}

// Exact division of integer polynomials, lowest degree first. The divisor is
// monic here, so no coefficient division ever occurs; a nonzero remainder is
// an internal error, never a rounding issue.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(dn - dd + 1, 0);
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        const std::int64_t q = num[k + dd];  // den is monic
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            num[k + j] = checked_sub(num[k + j], checked_mul(q, den[j]));
    }
    for (std::int64_t c : num)
        if (c != 0) throw InternalError("cyclotomic: exact division left a remainder");
    return quot;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t d) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factorize(d).pairs) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

std::map<std::uint64_t, std::vector<std::int64_t>>& memo_table() {
    static std::map<std::uint64_t, std::vector<std::int64_t>> table;
    return table;
}

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::int64_t> compute_coefficients(std::uint64_t d);

std::vector<std::int64_t> memoized_coefficients(std::uint64_t d) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo_table().find(d);
        if (it != memo_table().end()) return it->second;
    }
    auto coeffs = compute_coefficients(d);
    std::lock_guard<std::mutex> lock(memo_mutex());
    return memo_table().emplace(d, std::move(coeffs)).first->second;
}

std::vector<std::int64_t> compute_coefficients(std::uint64_t d) {
    if (d == 1) return {-1, 1};  // x - 1
    // x^d - 1
    std::vector<std::int64_t> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (std::uint64_t e : divisors_of(d)) {
        if (e == d) continue;
        num = exact_divide(std::move(num), memoized_coefficients(e));
    }
    return num;
}

}  // namespace

CyclotomicPolynomial cyclotomic_poly(std::uint64_t d) {
    if (d < 1 || d > 1000000)
        throw Error(ErrorKind::Usage, "cyclotomic_poly: d must be in [1, 10^6], got " +
                                          std::to_string(d));
    return CyclotomicPolynomial{d, memoized_coefficients(d)};
}

ReductionMatrix reduction_matrix(std::uint64_t d) {
    if (d < 2)
        throw Error(ErrorKind::Usage, "reduction_matrix: d must be >= 2");
    const auto phi = cyclotomic_poly(d).coefficients;  // monic, degree phi(d)
    const std::size_t rows = phi.size() - 1;

    ReductionMatrix rm;
    rm.index = d;
    rm.rows = rows;
    rm.cols = d;
    rm.entries.assign(rows * d, 0);

    std::vector<std::int64_t> col(rows, 0);
    col[0] = 1;  // x^0
    for (std::uint64_t k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < rows; ++j) rm.entries[k * rows + j] = col[j];
        // col <- x * col mod Phi_d
        const std::int64_t top = col[rows - 1];
        for (std::size_t j = rows - 1; j > 0; --j) col[j] = col[j - 1];
        col[0] = 0;
        if (top != 0)
            for (std::size_t j = 0; j < rows; ++j)
                col[j] = checked_sub(col[j], checked_mul(top, phi[j]));
    }
    return rm;
}

}  // namespace periodviz
