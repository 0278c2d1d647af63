#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lcmlab {

// mod_inverse(a, m) with gcd(a, m) > 1.
struct NotInvertible : std::domain_error {
    NotInvertible(std::int64_t a, std::int64_t m);
};

// padic_valuation of zero.
struct ZeroValuationUndefined : std::domain_error {
    ZeroValuationUndefined();
};

// Greatest common divisor of |u| and |v|; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t u, std::int64_t v) noexcept;

// Least common multiple of nonnegative inputs; lcm2(0, v) = 0.
// Throws std::overflow_error if the result does not fit in 64 bits.
std::int64_t lcm2(std::int64_t u, std::int64_t v);

// The x in [1, m-1] with a*x == 1 (mod m). Requires m >= 2.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Euler totient via trial-division factorization. Requires m >= 1.
std::int64_t euler_phi(std::int64_t m);

// Ascending residues r in [1, m] with gcd(r, m) = 1. Requires m >= 1.
std::vector<std::int64_t> reduced_residues(std::int64_t m);

// <b>_a: least nonnegative residue of b modulo a, in [0, a-1].
// Correct for negative b. Requires a >= 1.
std::int64_t least_residue(std::int64_t b, std::int64_t a) noexcept;

// Least positive residue of b modulo a, valued in [1, a]: identical to
// least_residue except 0 maps to a. Requires a >= 1.
std::int64_t least_positive_residue(std::int64_t b, std::int64_t a) noexcept;

// Exponent of the prime p in |x|. Requires p >= 2; throws on x = 0.
std::int64_t padic_valuation(std::int64_t p, std::int64_t x);
std::int64_t padic_valuation(std::int64_t p, const mpz_class& x);

// Deterministic Miller-Rabin for 64-bit n.
bool is_prime(std::int64_t n);

// Prime factorization of |n| as ascending (prime, exponent) pairs;
// empty for |n| <= 1. Trial division for small factors, Pollard rho (Brent)
// beyond. Requires n != 0.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Natural log of a positive big integer, accurate to double precision.
double ln_mpz(const mpz_class& x);

}  // namespace lcmlab
