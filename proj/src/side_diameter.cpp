#include "gonia/side_diameter.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace gonia {

const char* to_string(AngleClass c) {
    switch (c) {
        case AngleClass::Acute: return "acute";
        case AngleClass::Right: return "right";
        case AngleClass::Obtuse: return "obtuse";
        case AngleClass::Undetermined: return "undetermined";
    }
    return "?";
}

std::vector<SideDiameterPair> generate(int N) {
    if (N < 1) throw DomainError("pair count must be >= 1");
    std::vector<SideDiameterPair> out;
    out.reserve(N);
    SideDiameterPair cur;
    out.push_back(cur);
    for (int n = 2; n <= N; ++n) {
        Int p = cur.p + cur.q;
        Int q = 2 * cur.p + cur.q;
        cur = SideDiameterPair{n, std::move(p), std::move(q)};
        out.push_back(cur);
    }
    return out;
}

SideDiameterPair pair_at(int n) {
    if (n < 1) throw DomainError("pair index must be >= 1");
    SideDiameterPair cur;
    for (int i = 2; i <= n; ++i) {
        Int p = cur.p + cur.q;
        Int q = 2 * cur.p + cur.q;
        cur = SideDiameterPair{i, std::move(p), std::move(q)};
    }
    return cur;
}

Int pell_residual(const SideDiameterPair& pair) {
    return pair.q * pair.q - 2 * pair.p * pair.p;
}

AngleClass classify_isosceles_apex(const Magnitude& p, const Magnitude& q) {
    if (!is_positive(q) || compare(q, p + p) >= 0)
        throw DomainError("degenerate isosceles triangle: need 0 < q < 2p");
    Magnitude lhs = q * q;
    Magnitude rhs = (p * p) + (p * p);
    auto c = compare(lhs, rhs);
    if (c < 0) return AngleClass::Acute;
    if (c > 0) return AngleClass::Obtuse;
    return AngleClass::Right;
}

double apex_angle(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0) || !(q < 2.0 * p))
        throw DomainError("degenerate isosceles triangle: need 0 < q < 2p");
    return 2.0 * std::asin(q / (2.0 * p));
}

double apex_angle(const SideDiameterPair& pair) {
    Rational half = make_rational(pair.q, 2 * pair.p);
    return 2.0 * std::asin(half.get_d());
}

QuotientSeq anth_check(const SideDiameterPair& pair) {
    return anth_integers(pair.q, pair.p).quotients;
}

AngleClass pythagorean_classify(double omega, int n_max) {
    if (!(omega > 0.0) || !(omega < std::numbers::pi))
        throw DomainError("angle must lie in (0, pi)");
    if (n_max < 1) throw DomainError("search bound must be >= 1");
    constexpr double half_pi = std::numbers::pi / 2.0;
    SideDiameterPair cur;
    for (int i = 1; i <= 2 * n_max; ++i) {
        if (i > 1) {
            Int p = cur.p + cur.q;
            Int q = 2 * cur.p + cur.q;
            cur = SideDiameterPair{i, std::move(p), std::move(q)};
        }
        double w = apex_angle(cur);
        // omega_{2n-1} < pi/2 < omega_{2n} holds exactly (Pell alternation);
        // clamp away last-ulp rounding so the verdicts respect it.
        if (i % 2 == 1) {
            w = std::min(w, half_pi);
            if (omega < w) return AngleClass::Acute;
        } else {
            w = std::max(w, half_pi);
            if (omega > w) return AngleClass::Obtuse;
        }
    }
    return AngleClass::Undetermined;
}

double right_angle_gap(int n) {
    SideDiameterPair pair = pair_at(n);
    // |2 asin(q/2p) - pi/2| = 2 |asin((q - sqrt(4p^2 - q^2)) / (2p sqrt(2)))|
    // and q^2 - 2p^2 = +-1 turns the numerator into a cancellation-free
    // quotient: gap = 2 asin( 2 / (2p sqrt(2) (q + sqrt(4p^2 - q^2))) ).
    double p = pair.p.get_d();
    double q = pair.q.get_d();
    double root = std::sqrt(4.0 * p * p - q * q);
    double u = 2.0 / (2.0 * p * std::numbers::sqrt2 * (q + root));
    return 2.0 * std::asin(u);
}

std::vector<SideDiameterRow> side_diameter_table(int N) {
    std::vector<SideDiameterRow> rows;
    rows.reserve(N);
    for (const SideDiameterPair& pair : generate(N)) {
        rows.push_back(SideDiameterRow{pair.n, pair.p, pair.q, pell_residual(pair),
                                       classify_isosceles_apex(Magnitude(pair.p), Magnitude(pair.q)),
                                       apex_angle(pair), right_angle_gap(pair.n)});
    }
    return rows;
}

}  // namespace gonia
