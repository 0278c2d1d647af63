#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lcmlab {

// One linear factor a*x + b with multiplicity d.
//
// Raw parser output may carry a == 0 (a bare integer constant in the input);
// normalization folds those into the content. After normalization every
// factor is primitive: a >= 1, d >= 1, gcd(a, |b|) = 1.
struct LinearFactor {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t d = 1;
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

// Parse errors carry the byte offset of the offending position.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset;
};
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct OverflowError : ParseError {
    using ParseError::ParseError;
};
struct ZeroLeadingCoefficient : ParseError {
    using ParseError::ParseError;
};

struct DegenerateFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyPolynomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parses the polynomial grammar
//
//   PRODUCT := TERM (('*' | whitespace) TERM)*
//   TERM    := FACTOR ('^' UINT)?
//   FACTOR  := '(' LINEAR ')' | LINEAR
//   LINEAR  := [INT] 'x' (('+'|'-') UINT)? | INT
//
// into raw (a, b, d) triples in source order, unnormalized. Bare integers
// parse as (0, value, d) constant factors. Adjacent parenthesized factors
// need no separator. Whitespace inside an unparenthesized LINEAR ends it.
std::vector<LinearFactor> parse(std::string_view text);

// Normalized factored polynomial: primitive factors sorted by multiplicity
// descending (ties by (a, b) ascending), pairwise distinct, with the
// extracted integer content. Immutable after construction.
class FactoredPolynomial {
public:
    const std::vector<LinearFactor>& factors() const { return factors_; }
    const mpz_class& content() const { return content_; }
    // Distinct primes dividing the content, ascending.
    const std::vector<std::int64_t>& content_primes() const { return content_primes_; }
    bool has_negative_b() const;

    friend FactoredPolynomial normalize(std::vector<LinearFactor> raw);

private:
    FactoredPolynomial() = default;
    std::vector<LinearFactor> factors_;
    mpz_class content_{1};
    std::vector<std::int64_t> content_primes_;
};

// Reduces every factor to primitive form, accumulates the extracted content,
// merges equal factors by adding multiplicities, sorts, and validates.
FactoredPolynomial normalize(std::vector<LinearFactor> raw);

// parse + normalize.
FactoredPolynomial parse_polynomial(std::string_view text);

// Grouping of the factor list into runs of equal multiplicity:
// group i (0-based) covers factor indices [t[i-1], t[i]) with multiplicity
// dt[i]; dt is strictly decreasing and t.back() is the factor count.
struct MultiplicityProfile {
    std::vector<std::int64_t> t;
    std::vector<std::int64_t> dt;
    std::int64_t groups() const { return std::int64_t(t.size()); }
    // d_{t_i} - d_{t_{i+1}} with the sentinel d_{t_{k+1}} = 0.
    std::int64_t weight(std::size_t i) const {
        return dt[i] - (i + 1 < dt.size() ? dt[i + 1] : 0);
    }
};

MultiplicityProfile profile(const FactoredPolynomial& f);

// content * prod_j (a_j*m + b_j)^{d_j}; zero or negative values are possible
// when negative b are present.
mpz_class evaluate(const FactoredPolynomial& f, std::int64_t m);

// Same without the content factor.
mpz_class evaluate_primitive(const FactoredPolynomial& f, std::int64_t m);

// q = lcm of all leading coefficients.
std::int64_t modulus_q(const FactoredPolynomial& f);

// |a_{j1}*b_{j2} - a_{j2}*b_{j1}| over unordered pairs j1 < j2; empty for a
// single factor. All values are nonzero for a valid polynomial.
std::vector<std::int64_t> cross_terms(const FactoredPolynomial& f);

// Canonical text form, e.g. "2*(2x+1)^2*(2x+3)" (content prefix only when
// content > 1). Parses back to an equal polynomial.
std::string to_string(const FactoredPolynomial& f);

}  // namespace lcmlab
