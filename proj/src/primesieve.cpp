#include "lcmlab/primesieve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "lcmlab/arith.hpp"

namespace lcmlab {

namespace {

using u64 = std::uint64_t;

u64 isqrt(u64 n) {
    u64 r = u64(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Simple odd sieve for the base primes up to limit (inclusive).
std::vector<u64> small_primes(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    out.push_back(2);
    std::vector<bool> composite((limit - 1) / 2 + 1, false);  // index i <-> 2i+1
    for (u64 p = 3; p * p <= limit; p += 2) {
        if (composite[(p - 1) / 2]) continue;
        for (u64 m = p * p; m <= limit; m += 2 * p) composite[(m - 1) / 2] = true;
    }
    for (u64 p = 3; p <= limit; p += 2)
        if (!composite[(p - 1) / 2]) out.push_back(p);
    return out;
}

}  // namespace

LimitTooLarge::LimitTooLarge(u64 limit, u64 ceiling)
    : std::domain_error("sieve limit " + std::to_string(limit) +
                        " exceeds ceiling " + std::to_string(ceiling)) {}

NotCoprime::NotCoprime(std::int64_t h, std::int64_t l)
    : std::domain_error("gcd(" + std::to_string(h) + ", " + std::to_string(l) +
                        ") > 1") {}

PrimeStream::PrimeStream(u64 lo, u64 hi, SieveOptions opts)
    : opts_(opts), next_lo_(std::max<u64>(lo, 3) | 1), hi_(hi) {
    if (lo <= 2 && hi >= 2) two_pending_ = true;
    if (hi_ >= 3) base_primes_ = small_primes(isqrt(hi_));
    if (!base_primes_.empty() && base_primes_.front() == 2)
        base_primes_.erase(base_primes_.begin());
}

void PrimeStream::fill_next_segment() {
    buffer_.clear();
    buffer_pos_ = 0;
    if (next_lo_ > hi_) return;

    const u64 span = u64(opts_.segment_bytes) * 16;  // odd values per segment
    u64 lo = next_lo_;  // odd
    u64 hi = std::min(hi_, lo + (span - 1) * 2);
    next_lo_ = hi + 1 + (hi % 2);  // next odd above hi

    PrimeRange range;
    range.lo = lo;
    range.hi = hi;
    const u64 count = (hi - lo) / 2 + 1;
    range.odd_bits.assign((count + 63) / 64, ~u64(0));

    for (u64 p : base_primes_) {
        if (p * p > hi) break;
        u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
        if (start % 2 == 0) start += p;
        for (u64 m = start; m <= hi; m += 2 * p) {
            u64 i = (m - lo) / 2;
            range.odd_bits[i >> 6] &= ~(u64(1) << (i & 63));
        }
    }
    for (u64 i = 0; i < count; ++i)
        if ((range.odd_bits[i >> 6] >> (i & 63)) & 1) buffer_.push_back(lo + 2 * i);
}

std::optional<u64> PrimeStream::next() {
    if (two_pending_) {
        two_pending_ = false;
        return 2;
    }
    while (buffer_pos_ >= buffer_.size()) {
        if (next_lo_ > hi_) return std::nullopt;
        fill_next_segment();
        if (buffer_.empty() && next_lo_ > hi_) return std::nullopt;
    }
    return buffer_[buffer_pos_++];
}

PrimeStream primes_up_to(u64 limit, SieveOptions opts) {
    if (limit > opts.ceiling) throw LimitTooLarge(limit, opts.ceiling);
    return PrimeStream(2, limit, opts);
}

std::vector<u64> primes_vector(u64 limit, SieveOptions opts) {
    PrimeStream stream = primes_up_to(limit, opts);
    std::vector<u64> out;
    while (auto p = stream.next()) out.push_back(*p);
    return out;
}

double theta(double x, SieveOptions opts) {
    if (x < 2) return 0.0;
    u64 n = u64(x);
    PrimeStream stream = primes_up_to(n, opts);
    KahanSum acc;
    while (auto p = stream.next()) acc.add(std::log(double(*p)));
    return acc.value();
}

double psi(double x, SieveOptions opts) {
    if (x < 2) return 0.0;
    u64 n = u64(x);
    PrimeStream stream = primes_up_to(n, opts);
    KahanSum acc;
    while (auto p = stream.next()) {
        // largest k with p^k <= n
        int k = 1;
        u64 power = *p;
        while (power <= n / *p) {
            power *= *p;
            ++k;
        }
        acc.add(double(k) * std::log(double(*p)));
    }
    return acc.value();
}

double theta_ap(double x, std::int64_t h, std::int64_t l, SieveOptions opts) {
    assert(h >= 1 && l >= 1 && l <= h);
    if (gcd(h, l) != 1) throw NotCoprime(h, l);
    if (x < 2) return 0.0;
    u64 n = u64(x);
    PrimeStream stream = primes_up_to(n, opts);
    KahanSum acc;
    while (auto p = stream.next())
        if (*p % u64(h) == u64(l) % u64(h)) acc.add(std::log(double(*p)));
    return acc.value();
}

std::uint64_t prime_count(double x, SieveOptions opts) {
    if (x < 2) return 0;
    PrimeStream stream = primes_up_to(u64(x), opts);
    u64 count = 0;
    while (stream.next()) ++count;
    return count;
}

}  // namespace lcmlab
