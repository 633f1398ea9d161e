#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "gonia/errors.hpp"

namespace gonia {

// Arbitrary-precision signed integer.
using Int = mpz_class;

// Exact rational, always canonical: reduced, denominator > 0.
using Rational = mpq_class;

// Largest k with k*k <= n. Throws DomainError for n < 0.
Int isqrt(const Int& n);

// Floor division (rounds toward -infinity). b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Canonical rational num/den; throws DomainError on den == 0.
Rational make_rational(const Int& num, const Int& den);

// Quadratic surd (p + q*sqrt(d))/r in canonical form:
//   r > 0, d > 1 squarefree, q != 0, gcd(p, q, r) = 1.
// Construct only through normalize_surd.
struct Surd {
    Int p, q, d, r;

    bool operator==(const Surd&) const = default;
};

// Exact positive-or-negative quantity: a rational or a quadratic surd.
// Values are immutable and always canonical. Arithmetic between two surds
// requires the same radicand; mixing radicands throws DomainError.
class Magnitude {
public:
    Magnitude() : v_(Rational(0)) {}
    Magnitude(long n) : v_(Rational(n)) {}
    Magnitude(const Int& n) : v_(Rational(n)) {}
    Magnitude(Rational q) : v_(std::move(q)) { std::get<Rational>(v_).canonicalize(); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_surd() const { return !is_rational(); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const Surd& surd() const { return std::get<Surd>(v_); }

    // Radicand of the quadratic field the value lives in (0 for rationals).
    const Int radicand() const { return is_surd() ? surd().d : Int(0); }

    bool operator==(const Magnitude& o) const { return v_ == o.v_; }

private:
    explicit Magnitude(Surd s) : v_(std::move(s)) {}
    std::variant<Rational, Surd> v_;

    friend Magnitude normalize_surd(const Int&, const Int&, const Int&, const Int&);
};

// Canonical magnitude for (p + q*sqrt(d))/r: square factors extracted from d,
// gcd reduced, r made positive. Collapses to a rational when q = 0, d in
// {0, 1}, or d is a perfect square. Throws DomainError for r = 0 or d < 0.
Magnitude normalize_surd(const Int& p, const Int& q, const Int& d, const Int& r);

// Exact sign of x - y by integer case analysis; never uses floating point.
// Throws DomainError when x and y live over different radicands.
std::strong_ordering compare(const Magnitude& x, const Magnitude& y);

inline bool operator<(const Magnitude& a, const Magnitude& b) { return compare(a, b) < 0; }
inline bool operator>(const Magnitude& a, const Magnitude& b) { return compare(a, b) > 0; }
inline bool operator<=(const Magnitude& a, const Magnitude& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Magnitude& a, const Magnitude& b) { return compare(a, b) >= 0; }

// Greatest integer <= x, exact.
Int floor_of(const Magnitude& x);

int sign(const Magnitude& x);
inline bool is_positive(const Magnitude& x) { return sign(x) > 0; }
inline bool is_zero(const Magnitude& x) { return sign(x) == 0; }

Magnitude operator+(const Magnitude& a, const Magnitude& b);
Magnitude operator-(const Magnitude& a, const Magnitude& b);
Magnitude operator*(const Magnitude& a, const Magnitude& b);
Magnitude operator/(const Magnitude& a, const Magnitude& b);  // throws on b == 0
Magnitude operator-(const Magnitude& a);

// Minimal natural number n with n*a > b (strict). Requires a, b > 0.
Int archimedean_witness(const Magnitude& a, const Magnitude& b);

// Canonical text form; parse_magnitude(to_string(x)) == x.
// Rationals: "17", "7/5". Surds: "sqrt(2)", "2*sqrt(2)", "1+sqrt(2)",
// "(1+sqrt(5))/2", "(3-2*sqrt(2))/4".
std::string to_string(const Magnitude& x);

// Parser for the magnitude grammar. Whitespace-insensitive, exact.
// '/' binds tighter than '+'/'-': "1+sqrt(5)/2" is 1 + (sqrt(5)/2).
// Throws ParseError with a column position on bad syntax.
Magnitude parse_magnitude(std::string_view text);

// Double approximation, for reporting only.
double to_double(const Magnitude& x);

}  // namespace gonia
