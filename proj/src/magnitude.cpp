#include "gonia/magnitude.hpp"

#include <cassert>
#include <cctype>
#include <utility>

namespace gonia {

Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    assert(b != 0);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("invalid denominator: zero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

// Splits d >= 1 into sq^2 * rest with rest squarefree, or throws when the
// squarefree part cannot be certified exactly. Trial division up to 10^6
// plus a perfect-square check: any leftover cofactor <= 10^12 has at most
// two prime factors, both above the bound and distinct, hence squarefree.
void split_square(const Int& d, Int& sq, Int& rest) {
    sq = 1;
    rest = 1;
    Int n = d;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        sq = isqrt(n);
        return;
    }
    for (Int f = 2; f <= 1000000 && f * f <= n; f += (f == 2) ? 1 : 2) {
        if (n % f != 0) continue;
        int e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= f;
        if (e % 2) rest *= f;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        sq *= isqrt(n);
        n = 1;
    }
    if (n > Int("1000000000000"))
        throw DomainError("radicand too large to canonicalize: " + d.get_str());
    rest *= n;
}

}  // namespace

Magnitude normalize_surd(const Int& p_in, const Int& q_in, const Int& d_in, const Int& r_in) {
    if (r_in == 0) throw DomainError("invalid denominator: r = 0");
    if (d_in < 0) throw DomainError("negative radicand unsupported");

    Int p = p_in, q = q_in, d = d_in, r = r_in;
    if (q == 0 || d == 0) return Magnitude(make_rational(p, r));
    if (d == 1) return Magnitude(make_rational(p + q, r));

    Int sq, rest;
    split_square(d, sq, rest);
    q *= sq;
    d = rest;
    if (d == 1) return Magnitude(make_rational(p + q, r));

    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int g = gcd(gcd(abs(p), abs(q)), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    return Magnitude(Surd{std::move(p), std::move(q), std::move(d), std::move(r)});
}

int sign(const Magnitude& m) {
    if (m.is_rational()) return sgn(m.rational());
    const Surd& s = m.surd();
    int sp = sgn(s.p), sq = sgn(s.q);
    if (sp >= 0 && sq > 0) return 1;
    if (sp <= 0 && sq < 0) return -1;
    // Opposite signs: decide by squaring; p^2 = q^2 d is impossible for
    // squarefree d > 1 and q != 0 (it would make sqrt(d) rational).
    Int lhs = s.p * s.p, rhs = s.q * s.q * s.d;
    assert(lhs != rhs);
    if (sp > 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

namespace {

// Working form x + y*sqrt(d) with rational coefficients; d = 0 for rationals.
struct Lifted {
    Rational x, y;
    Int d;
};

Lifted lift(const Magnitude& m) {
    if (m.is_rational()) return {m.rational(), Rational(0), Int(0)};
    const Surd& s = m.surd();
    return {make_rational(s.p, s.r), make_rational(s.q, s.r), s.d};
}

Int common_radicand(const Lifted& a, const Lifted& b) {
    if (a.d == 0) return b.d;
    if (b.d == 0) return a.d;
    if (a.d != b.d)
        throw DomainError("incomparable radicands: sqrt(" + a.d.get_str() +
                          ") vs sqrt(" + b.d.get_str() + ")");
    return a.d;
}

Magnitude lower(const Rational& x, const Rational& y, const Int& d) {
    if (sgn(y) == 0 || d == 0) return Magnitude(x);
    Int r = lcm(x.get_den(), y.get_den());
    Int p = x.get_num() * (r / x.get_den());
    Int q = y.get_num() * (r / y.get_den());
    return normalize_surd(p, q, d, r);
}

}  // namespace

Magnitude operator+(const Magnitude& a, const Magnitude& b) {
    Lifted la = lift(a), lb = lift(b);
    Int d = common_radicand(la, lb);
    return lower(la.x + lb.x, la.y + lb.y, d);
}

Magnitude operator-(const Magnitude& a, const Magnitude& b) {
    Lifted la = lift(a), lb = lift(b);
    Int d = common_radicand(la, lb);
    return lower(la.x - lb.x, la.y - lb.y, d);
}

Magnitude operator-(const Magnitude& a) {
    Lifted la = lift(a);
    return lower(-la.x, -la.y, la.d);
}

Magnitude operator*(const Magnitude& a, const Magnitude& b) {
    Lifted la = lift(a), lb = lift(b);
    Int d = common_radicand(la, lb);
    Rational x = la.x * lb.x + la.y * lb.y * Rational(d);
    Rational y = la.x * lb.y + lb.x * la.y;
    return lower(x, y, d);
}

Magnitude operator/(const Magnitude& a, const Magnitude& b) {
    if (is_zero(b)) throw DomainError("division by zero");
    Lifted la = lift(a), lb = lift(b);
    Int d = common_radicand(la, lb);
    // Multiply by the conjugate of b; the norm x^2 - y^2 d is nonzero for
    // any nonzero element of Q(sqrt(d)).
    Rational norm = lb.x * lb.x - lb.y * lb.y * Rational(d);
    assert(sgn(norm) != 0);
    Rational x = (la.x * lb.x - la.y * lb.y * Rational(d)) / norm;
    Rational y = (la.y * lb.x - la.x * lb.y) / norm;
    return lower(x, y, d);
}

std::strong_ordering compare(const Magnitude& x, const Magnitude& y) {
    int s = sign(x - y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int floor_of(const Magnitude& m) {
    if (m.is_rational())
        return floor_div(m.rational().get_num(), m.rational().get_den());
    const Surd& s = m.surd();
    // floor(q*sqrt(d)) first; q*sqrt(d) is irrational, so it lies strictly
    // between consecutive integers and floor((p + q*sqrt(d))/r) reduces to
    // integer floor division.
    Int t = s.q * s.q * s.d;
    Int root = isqrt(t);
    Int fq = (s.q > 0) ? root : -root - 1;
    return floor_div(s.p + fq, s.r);
}

Int archimedean_witness(const Magnitude& a, const Magnitude& b) {
    if (!is_positive(a) || !is_positive(b))
        throw DomainError("archimedean witness requires positive magnitudes");
    return floor_of(b / a) + 1;
}

std::string to_string(const Magnitude& m) {
    if (m.is_rational()) return m.rational().get_str();
    const Surd& s = m.surd();
    auto surd_part = [&](const Int& q) {
        std::string root = "sqrt(" + s.d.get_str() + ")";
        if (q == 1) return root;
        if (q == -1) return "-" + root;
        return q.get_str() + "*" + root;
    };
    std::string core;
    if (s.p == 0) {
        core = surd_part(s.q);
    } else {
        core = s.p.get_str() + (s.q > 0 ? "+" : "-") + surd_part(abs(s.q));
    }
    if (s.r == 1) return core;
    if (s.p == 0) return core + "/" + s.r.get_str();
    return "(" + core + ")/" + s.r.get_str();
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("syntax error: " + msg, pos + 1);
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected ") + what);
    }
    bool at_digit() {
        ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    Int integer() {
        ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }
    Magnitude sqrt_tail(const Int& coeff) {
        expect('(', "'(' after sqrt");
        Int d = integer();
        expect(')', "')'");
        return normalize_surd(0, coeff, d, 1);
    }
    bool kw_sqrt() {
        ws();
        if (s.substr(pos).starts_with("sqrt")) {
            pos += 4;
            return true;
        }
        return false;
    }
    Magnitude primary() {
        ws();
        if (eat('(')) {
            Magnitude m = sum();
            expect(')', "')'");
            return m;
        }
        if (kw_sqrt()) return sqrt_tail(1);
        if (at_digit()) {
            Int n = integer();
            if (eat('*')) {
                if (!kw_sqrt()) fail("expected sqrt after '*'");
                return sqrt_tail(n);
            }
            return Magnitude(n);
        }
        fail("expected integer, sqrt(...), or '('");
    }
    // '/' binds tighter than '+'/'-'.
    Magnitude atom() {
        Magnitude m = primary();
        while (peek('/')) {
            eat('/');
            ws();
            std::size_t col = pos;
            Int den = integer();
            if (den == 0) throw ParseError("zero denominator", col + 1);
            m = m / Magnitude(den);
        }
        return m;
    }
    Magnitude sum() {
        ws();
        bool neg = eat('-');
        Magnitude m = atom();
        if (neg) m = -m;
        for (;;) {
            if (eat('+'))
                m = m + atom();
            else if (eat('-'))
                m = m - atom();
            else
                break;
        }
        return m;
    }
};

}  // namespace

Magnitude parse_magnitude(std::string_view text) {
    Parser p{text};
    Magnitude m = p.sum();
    p.ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return m;
}

double to_double(const Magnitude& m) {
    if (m.is_rational()) return m.rational().get_d();
    const Surd& s = m.surd();
    mpf_class root(s.d, 128);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    mpf_class acc = mpf_class(s.p, 128) + mpf_class(s.q, 128) * root;
    acc /= mpf_class(s.r, 128);
    return acc.get_d();
}

}  // namespace gonia
