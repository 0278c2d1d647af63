#include "lcmlab/arith.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

namespace lcmlab {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

u64 magnitude(i64 x) {
    return x < 0 ? u64(0) - u64(x) : u64(x);
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return u64((u128)a * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = m > 1 ? 1 : 0;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

NotInvertible::NotInvertible(i64 a, i64 m)
    : std::domain_error("no inverse of " + std::to_string(a) + " modulo " +
                        std::to_string(m)) {}

ZeroValuationUndefined::ZeroValuationUndefined()
    : std::domain_error("p-adic valuation of 0 is undefined") {}

i64 gcd(i64 u, i64 v) noexcept {
    u64 a = magnitude(u), b = magnitude(v);
    while (b != 0) {
        u64 t = b;
        b = a % b;
        a = t;
    }
    return i64(a);
}

i64 lcm2(i64 u, i64 v) {
    assert(u >= 0 && v >= 0);
    if (u == 0 || v == 0) return 0;
    i64 g = gcd(u, v);
    u128 r = (u128)(u / g) * (u128)v;
    if (r > u128(INT64_MAX)) throw std::overflow_error("lcm2 overflows 64 bits");
    return i64(r);
}

i64 mod_inverse(i64 a, i64 m) {
    assert(m >= 2);
    // extended Euclid on (a mod m, m)
    i64 r0 = m, r1 = least_residue(a, m);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw NotInvertible(a, m);
    return least_residue(t0, m);
}

i64 euler_phi(i64 m) {
    assert(m >= 1);
    i64 result = m;
    for (i64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<i64> reduced_residues(i64 m) {
    assert(m >= 1);
    std::vector<i64> out;
    for (i64 r = 1; r <= m; ++r)
        if (gcd(r, m) == 1) out.push_back(r);
    return out;
}

i64 least_residue(i64 b, i64 a) noexcept {
    assert(a >= 1);
    i64 r = b % a;
    return r < 0 ? r + a : r;
}

i64 least_positive_residue(i64 b, i64 a) noexcept {
    i64 r = least_residue(b, a);
    return r == 0 ? a : r;
}

i64 padic_valuation(i64 p, i64 x) {
    assert(p >= 2);
    if (x == 0) throw ZeroValuationUndefined();
    u64 ux = magnitude(x);
    i64 v = 0;
    while (ux % u64(p) == 0) {
        ux /= u64(p);
        ++v;
    }
    return v;
}

i64 padic_valuation(i64 p, const mpz_class& x) {
    assert(p >= 2);
    if (x == 0) throw ZeroValuationUndefined();
    mpz_class ax = abs(x), stripped, pz = p;
    return i64(mpz_remove(stripped.get_mpz_t(), ax.get_mpz_t(), pz.get_mpz_t()));
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic witness set for all 64-bit inputs
    u64 d = u64(n) - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                  1795265022ULL}) {
        u64 x = powmod(a % u64(n), d, u64(n));
        if (x <= 1 || x == u64(n) - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, u64(n));
            if (x == u64(n) - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    // Brent's cycle variant; n must be odd composite, not a prime power issue here
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1;
        int power = 1, lam = 1;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod(q, diff, n);
            if (lam % 64 == 0) {
                d = std::gcd(q, n);
                q = 1;
            }
        }
        if (d == 1) d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_u64(u64 n, std::vector<std::pair<i64, int>>& out) {
    if (n <= 1) return;
    if (is_prime(i64(n))) {
        out.emplace_back(i64(n), 1);
        return;
    }
    u64 d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    u64 un = magnitude(n);
    std::vector<std::pair<i64, int>> out;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        int e = 0;
        while (un % p == 0) { un /= p; ++e; }
        if (e) out.emplace_back(i64(p), e);
    }
    factor_u64(un, out);
    std::sort(out.begin(), out.end());
    // merge duplicates from the recursive split
    std::vector<std::pair<i64, int>> merged;
    for (auto& [p, e] : out) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.emplace_back(p, e);
    }
    return merged;
}

double ln_mpz(const mpz_class& x) {
    assert(x > 0);
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + double(exp2) * M_LN2;
}

}  // namespace lcmlab
