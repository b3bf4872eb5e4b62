#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace periodviz {

// Prime factorization as (prime, exponent) pairs with primes strictly
// increasing. factorize(1) yields an empty list.
struct Factorization {
    std::vector<std::pair<std::uint64_t, unsigned>> pairs;

    // Multiplies the factorization back together.
    std::uint64_t value() const;
};

// Trial division; deterministic and exact for n < 2^64, intended for the
// desk scale n <= 2^32 where the sqrt bound stays tiny.
Factorization factorize(std::uint64_t n);

// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Reduces a possibly negative integer into [0, n).
std::uint64_t mod_reduce(std::int64_t x, std::uint64_t n);

// (a * b) mod n with a 128-bit intermediate product.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

// Smallest d >= 1 with omega^d = 1 (mod n). Computed by factoring phi(n)
// and descending through its prime factors rather than naive powering.
// Throws NotAUnitError when gcd(omega, n) != 1.
std::uint64_t mult_order(std::int64_t omega, std::uint64_t n);

// Component residues of omega under Z/mnZ -> Z/mZ x Z/nZ.
// Throws NotCoprimeError if gcd(m, n) != 1, NotAUnitError if gcd(omega, mn) != 1.
std::pair<std::uint64_t, std::uint64_t> crt_split(std::int64_t omega, std::uint64_t m,
                                                  std::uint64_t n);

// Inverse of crt_split: the unique residue mod m*n reducing to rm and rn.
std::uint64_t crt_combine(std::uint64_t rm, std::uint64_t m, std::uint64_t rn, std::uint64_t n);

// [y, wy, w^2 y, ...] mod n up to the first repetition.
std::vector<std::uint64_t> orbit(std::int64_t omega, std::uint64_t n, std::int64_t y);

// The orbit of 1 under multiplication by omega mod n, together with the
// generator's order. For n = 1 this degenerates to the single residue 0
// (order 1), which keeps the multiplicative-property check total.
struct OrbitSpec {
    std::uint64_t modulus = 0;
    std::uint64_t generator = 0;
    std::uint64_t order = 0;
    std::vector<std::uint64_t> orbit;  // [1, w, w^2, ...] mod n

    static OrbitSpec make(std::uint64_t n, std::int64_t omega);
};

}  // namespace periodviz
