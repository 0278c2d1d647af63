#include "lcmlab/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <set>

#include "lcmlab/arith.hpp"

namespace lcmlab {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    i64 read_uint(const char* what) {
        std::size_t start = pos;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError(std::string("expected ") + what, pos);
        i64 value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            int digit = peek() - '0';
            if (value > (INT64_MAX - digit) / 10)
                throw OverflowError("integer constant exceeds 64 bits", start);
            value = value * 10 + digit;
            ++pos;
        }
        return value;
    }

    // LINEAR := [INT] 'x' (('+'|'-') UINT)? | INT
    // Whitespace is permitted inside only when allow_ws (parenthesized form).
    LinearFactor read_linear(bool allow_ws) {
        if (allow_ws) skip_ws();
        std::size_t start = pos;
        bool neg = false;
        bool saw_int = false;
        i64 lead = 0;
        if (peek() == '-') {
            neg = true;
            ++pos;
            if (allow_ws) skip_ws();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            lead = read_uint("integer");
            saw_int = true;
        } else if (neg) {
            throw SyntaxError("expected digits after '-'", pos);
        }
        if (allow_ws) skip_ws();
        if (peek() != 'x') {
            if (!saw_int) throw SyntaxError("expected factor", pos);
            // bare integer constant
            return LinearFactor{0, neg ? -lead : lead, 1};
        }
        ++pos;  // 'x'
        i64 a = saw_int ? lead : 1;
        if (neg) a = -a;
        if (a == 0)
            throw ZeroLeadingCoefficient("leading coefficient is zero", start);
        if (allow_ws) skip_ws();
        i64 b = 0;
        if (peek() == '+' || peek() == '-') {
            bool bneg = peek() == '-';
            ++pos;
            if (allow_ws) skip_ws();
            b = read_uint("constant term");
            if (bneg) b = -b;
        }
        return LinearFactor{a, b, 1};
    }

    // FACTOR := '(' LINEAR ')' | LINEAR
    LinearFactor read_factor() {
        if (peek() == '(') {
            ++pos;
            LinearFactor lf = read_linear(/*allow_ws=*/true);
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos);
            ++pos;
            return lf;
        }
        return read_linear(/*allow_ws=*/false);
    }

    LinearFactor read_term() {
        LinearFactor lf = read_factor();
        std::size_t mark = pos;
        skip_ws();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            lf.d = read_uint("exponent");
        } else {
            pos = mark;  // whitespace belongs to the separator
        }
        return lf;
    }
};

mpz_class pow_mpz(i64 base, i64 exp) {
    assert(base >= 1 && exp >= 0);
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t off)
    : std::runtime_error(what + " at byte " + std::to_string(off)), offset(off) {}

std::vector<LinearFactor> parse(std::string_view text) {
    Scanner sc{text};
    std::vector<LinearFactor> out;
    sc.skip_ws();
    if (sc.eof()) throw SyntaxError("expected factor", sc.pos);
    out.push_back(sc.read_term());
    for (;;) {
        std::size_t before = sc.pos;
        sc.skip_ws();
        if (sc.eof()) break;
        if (sc.peek() == '*') {
            ++sc.pos;
            sc.skip_ws();
        } else if (sc.pos == before && sc.peek() != '(') {
            // no separator at all: only a parenthesized factor may follow
            throw SyntaxError("expected '*', whitespace, or end of input", sc.pos);
        }
        out.push_back(sc.read_term());
    }
    return out;
}

FactoredPolynomial normalize(std::vector<LinearFactor> raw) {
    if (raw.empty()) throw EmptyPolynomial("empty factor list");
    FactoredPolynomial f;
    std::vector<i64> content_parts;
    std::map<std::pair<i64, i64>, i64> merged;
    for (const LinearFactor& lf : raw) {
        if (lf.d < 1) throw DegenerateFactor("multiplicity must be >= 1");
        if (lf.a == 0) {
            if (lf.b == 0) throw DegenerateFactor("zero factor");
            if (lf.b < 0) throw DegenerateFactor("negative constant factor");
            if (lf.b > 1) {
                f.content_ *= pow_mpz(lf.b, lf.d);
                content_parts.push_back(lf.b);
            }
            continue;
        }
        if (lf.a < 0) throw DegenerateFactor("leading coefficient must be positive");
        i64 g = gcd(lf.a, lf.b);
        i64 a = lf.a, b = lf.b;
        if (g > 1) {
            f.content_ *= pow_mpz(g, lf.d);
            content_parts.push_back(g);
            a /= g;
            b /= g;
        }
        merged[{a, b}] += lf.d;
    }
    if (merged.empty()) throw EmptyPolynomial("no linear factors");

    for (const auto& [ab, d] : merged)
        f.factors_.push_back(LinearFactor{ab.first, ab.second, d});
    std::sort(f.factors_.begin(), f.factors_.end(),
              [](const LinearFactor& x, const LinearFactor& y) {
                  if (x.d != y.d) return x.d > y.d;
                  if (x.a != y.a) return x.a < y.a;
                  return x.b < y.b;
              });

    // primitive + distinct implies pairwise non-proportional
    for (std::size_t i = 0; i < f.factors_.size(); ++i)
        for (std::size_t j = i + 1; j < f.factors_.size(); ++j) {
            i128 cross = (i128)f.factors_[i].a * f.factors_[j].b -
                         (i128)f.factors_[j].a * f.factors_[i].b;
            assert(cross != 0);
            (void)cross;
        }

    std::set<i64> primes;
    for (i64 part : content_parts)
        for (auto& [p, e] : factorize(part)) primes.insert(p);
    f.content_primes_.assign(primes.begin(), primes.end());
    return f;
}

FactoredPolynomial parse_polynomial(std::string_view text) {
    return normalize(parse(text));
}

bool FactoredPolynomial::has_negative_b() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const LinearFactor& lf) { return lf.b < 0; });
}

MultiplicityProfile profile(const FactoredPolynomial& f) {
    MultiplicityProfile prof;
    const auto& fs = f.factors();
    for (std::size_t j = 0; j < fs.size(); ++j) {
        if (prof.dt.empty() || fs[j].d != prof.dt.back()) {
            prof.dt.push_back(fs[j].d);
            prof.t.push_back(i64(j) + 1);
        } else {
            prof.t.back() = i64(j) + 1;
        }
    }
    return prof;
}

mpz_class evaluate_primitive(const FactoredPolynomial& f, i64 m) {
    mpz_class value = 1, term;
    for (const LinearFactor& lf : f.factors()) {
        term = mpz_class(lf.a) * m + lf.b;
        mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(),
                   static_cast<unsigned long>(lf.d));
        value *= term;
    }
    return value;
}

mpz_class evaluate(const FactoredPolynomial& f, i64 m) {
    return f.content() * evaluate_primitive(f, m);
}

i64 modulus_q(const FactoredPolynomial& f) {
    mpz_class q = 1;
    for (const LinearFactor& lf : f.factors()) {
        mpz_class az = lf.a;
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), az.get_mpz_t());
    }
    if (!q.fits_slong_p())
        throw std::overflow_error("modulus q exceeds 64 bits");
    return i64(q.get_si());
}

std::vector<i64> cross_terms(const FactoredPolynomial& f) {
    const auto& fs = f.factors();
    std::vector<i64> out;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            i128 c = (i128)fs[i].a * fs[j].b - (i128)fs[j].a * fs[i].b;
            if (c < 0) c = -c;
            if (c > (i128)INT64_MAX)
                throw std::overflow_error("cross term exceeds 64 bits");
            out.push_back(i64(c));
        }
    return out;
}

std::string to_string(const FactoredPolynomial& f) {
    std::string out;
    if (f.content() != 1) out += f.content().get_str() + "*";
    bool first = true;
    for (const LinearFactor& lf : f.factors()) {
        if (!first) out += "*";
        first = false;
        out += "(";
        if (lf.a != 1) out += std::to_string(lf.a);
        out += "x";
        if (lf.b > 0) out += "+" + std::to_string(lf.b);
        if (lf.b < 0) out += std::to_string(lf.b);
        out += ")";
        if (lf.d > 1) out += "^" + std::to_string(lf.d);
    }
    return out;
}

}  // namespace lcmlab
