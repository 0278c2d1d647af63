#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lcmlab {

struct LimitTooLarge : std::domain_error {
    explicit LimitTooLarge(std::uint64_t limit, std::uint64_t ceiling);
};
struct NotCoprime : std::domain_error {
    NotCoprime(std::int64_t h, std::int64_t l);
};

struct SieveOptions {
    std::uint64_t ceiling = 1'000'000'000;  // primes_up_to refuses above this
    std::size_t segment_bytes = 256 * 1024; // odd-only bitset per segment
};

// Primality of the odd numbers in [lo, hi], one bit each.
struct PrimeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> odd_bits;

    bool covers(std::uint64_t n) const { return lo <= n && n <= hi; }
    // n must be odd and inside [lo, hi].
    bool is_prime(std::uint64_t n) const {
        std::uint64_t i = (n - (lo | 1)) / 2;
        return (odd_bits[i >> 6] >> (i & 63)) & 1;
    }
};

// Ascending stream of the primes in [lo, hi], produced by a segmented sieve
// of Eratosthenes over odd-only bitsets. Single consumer.
class PrimeStream {
public:
    PrimeStream(std::uint64_t lo, std::uint64_t hi, SieveOptions opts = {});
    std::optional<std::uint64_t> next();

private:
    void fill_next_segment();

    SieveOptions opts_;
    std::uint64_t next_lo_;
    std::uint64_t hi_;
    std::vector<std::uint64_t> base_primes_;
    std::vector<std::uint64_t> buffer_;
    std::size_t buffer_pos_ = 0;
    bool two_pending_ = false;
};

// All primes <= limit, ascending. Throws LimitTooLarge above opts.ceiling.
PrimeStream primes_up_to(std::uint64_t limit, SieveOptions opts = {});

// Convenience collector for tests and small limits.
std::vector<std::uint64_t> primes_vector(std::uint64_t limit, SieveOptions opts = {});

// Compensated (Kahan) accumulator for the log sums below.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// theta(x) = sum of ln p over primes p <= x, in nats. Only floor(x) matters.
double theta(double x, SieveOptions opts = {});

// psi(x) = sum of ln p over prime powers p^k <= x = ln lcm(1..floor(x)).
double psi(double x, SieveOptions opts = {});

// theta(x; h, l) = sum of ln p over primes p <= x with p == l (mod h).
// Requires 1 <= l <= h and gcd(h, l) = 1.
double theta_ap(double x, std::int64_t h, std::int64_t l, SieveOptions opts = {});

// pi(x).
std::uint64_t prime_count(double x, SieveOptions opts = {});

}  // namespace lcmlab
