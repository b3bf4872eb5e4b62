#include "periodviz/arith.hpp"

#include <numeric>
#include <string>

#include "periodviz/errors.hpp"

namespace periodviz {

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (const auto& [p, e] : pairs)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::Usage, "factorize: n must be >= 1");
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.pairs.emplace_back(p, e);
    }
    if (n > 1) f.pairs.emplace_back(n, 1);
    return f;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n).pairs) phi -= phi / p;
    return phi;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mod_reduce(std::int64_t x, std::uint64_t n) {
    std::int64_t m = static_cast<std::int64_t>(n);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    if (n == 1) return 0;
    std::uint64_t acc = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mult_order(std::int64_t omega, std::uint64_t n) {
    if (n == 1) return 1;
    const std::uint64_t w = mod_reduce(omega, n);
    if (gcd_u64(w, n) != 1)
        throw NotAUnitError("mult_order: " + std::to_string(omega) + " is not a unit mod " +
                            std::to_string(n));
    std::uint64_t d = totient(n);
    for (const auto& [p, e] : factorize(d).pairs) {
        for (unsigned i = 0; i < e && d % p == 0; ++i) {
            if (pow_mod(w, d / p, n) == 1)
                d /= p;
            else
                break;
        }
    }
    return d;
}

std::pair<std::uint64_t, std::uint64_t> crt_split(std::int64_t omega, std::uint64_t m,
                                                  std::uint64_t n) {
    if (gcd_u64(m, n) != 1)
        throw NotCoprimeError("crt_split: moduli " + std::to_string(m) + " and " +
                              std::to_string(n) + " are not coprime");
    const std::uint64_t mn = m * n;
    const std::uint64_t w = mod_reduce(omega, mn);
    if (gcd_u64(w, mn) != 1)
        throw NotAUnitError("crt_split: " + std::to_string(omega) + " is not a unit mod " +
                            std::to_string(mn));
    return {w % m, w % n};
}

namespace {

// Extended gcd on signed 128-bit to keep intermediates exact.
__int128 egcd(__int128 a, __int128 b, __int128& x, __int128& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    __int128 x1, y1;
    __int128 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

std::uint64_t crt_combine(std::uint64_t rm, std::uint64_t m, std::uint64_t rn, std::uint64_t n) {
    if (gcd_u64(m, n) != 1)
        throw NotCoprimeError("crt_combine: moduli " + std::to_string(m) + " and " +
                              std::to_string(n) + " are not coprime");
    __int128 x, y;
    egcd(static_cast<__int128>(m), static_cast<__int128>(n), x, y);
    const __int128 mn = static_cast<__int128>(m) * n;
    // rm * n * (n^-1 mod m) + rn * m * (m^-1 mod n)
    __int128 r = static_cast<__int128>(rm) * n % mn * y % mn +
                 static_cast<__int128>(rn) * m % mn * x % mn;
    r %= mn;
    if (r < 0) r += mn;
    return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> orbit(std::int64_t omega, std::uint64_t n, std::int64_t y) {
    const std::uint64_t w = mod_reduce(omega, n);
    if (gcd_u64(w, n) != 1)
        throw NotAUnitError("orbit: " + std::to_string(omega) + " is not a unit mod " +
                            std::to_string(n));
    const std::uint64_t start = mod_reduce(y, n);
    std::vector<std::uint64_t> members{start};
    for (std::uint64_t t = mul_mod(w, start, n); t != start; t = mul_mod(w, t, n))
        members.push_back(t);
    return members;
}

OrbitSpec OrbitSpec::make(std::uint64_t n, std::int64_t omega) {
    if (n == 0) throw Error(ErrorKind::Usage, "orbit spec: modulus must be >= 1");
    OrbitSpec spec;
    spec.modulus = n;
    if (n == 1) {
        spec.generator = 0;
        spec.order = 1;
        spec.orbit = {0};
        return spec;
    }
    const std::uint64_t w = mod_reduce(omega, n);
    if (gcd_u64(w, n) != 1)
        throw NotAUnitError("orbit spec: " + std::to_string(omega) + " is not a unit mod " +
                            std::to_string(n));
    spec.generator = w;
    spec.orbit = periodviz::orbit(static_cast<std::int64_t>(w), n, 1);
    spec.order = spec.orbit.size();
    return spec;
}

}  // namespace periodviz
