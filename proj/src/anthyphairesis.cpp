#include "gonia/anthyphairesis.hpp"

#include <cassert>
#include <map>

namespace gonia {

std::optional<Int> AnthOutcome::quotient_at(std::size_t i) const {
    if (i < quotients.size()) return quotients[i];
    switch (kind) {
        case Kind::Finite:
            return std::nullopt;
        case Kind::Truncated:
            return std::nullopt;
        case Kind::Periodic:
            return period[(i - quotients.size()) % period.size()];
    }
    return std::nullopt;
}

std::pair<Int, PQState> cf_step(const PQState& s) {
    assert(s.Q != 0);
    assert((s.D - s.P * s.P) % s.Q == 0);
    Int root = isqrt(s.D);
    assert(root * root != s.D);
    // Exact floor of (P + sqrt(D))/Q: sqrt(D) lies strictly between root and
    // root + 1, so the floor reduces to integer floor division.
    Int a = (s.Q > 0) ? floor_div(s.P + root, s.Q) : floor_div(s.P + root + 1, s.Q);
    Int P2 = a * s.Q - s.P;
    Int Q2 = (s.D - P2 * P2) / s.Q;
    assert((s.D - P2 * P2) % s.Q == 0);
    return {std::move(a), PQState{std::move(P2), std::move(Q2), s.D}};
}

namespace {

void require_positive(const Magnitude& m, const char* role) {
    if (!is_positive(m)) throw DomainError(std::string("nonpositive input: ") + role);
}

// Quotient word is never a power of a shorter word when the cycle comes from
// first state recurrence; kept as a checked reduction.
QuotientSeq primitive_word(QuotientSeq w) {
    for (std::size_t len = 1; len <= w.size() / 2; ++len) {
        if (w.size() % len != 0) continue;
        bool repeats = true;
        for (std::size_t i = len; i < w.size() && repeats; ++i)
            repeats = (w[i] == w[i % len]);
        if (repeats) {
            assert(false && "state recurrence produced a non-primitive period");
            w.resize(len);
            return w;
        }
    }
    return w;
}

AnthOutcome finite_outcome(QuotientSeq q, Magnitude gcd) {
    return AnthOutcome{AnthOutcome::Kind::Finite, std::move(q), {}, std::move(gcd)};
}

struct EuclidRun {
    QuotientSeq quotients;
    bool complete = false;
    Int gcd;  // last nonzero remainder, valid when complete
};

// Euclidean division chain on positive integers; a < b allowed (first
// quotient 0). max_terms < 0 means unbounded.
EuclidRun euclid_chain(Int a, Int b, long max_terms) {
    EuclidRun run;
    while (b != 0) {
        if (max_terms >= 0 && static_cast<long>(run.quotients.size()) == max_terms) return run;
        Int q = floor_div(a, b);
        Int r = a - q * b;
        run.quotients.push_back(std::move(q));
        a = std::move(b);
        b = std::move(r);
    }
    run.complete = true;
    run.gcd = std::move(a);
    return run;
}

}  // namespace

AnthOutcome anth_integers(const Int& a, const Int& b) {
    if (a <= 0 || b <= 0) throw DomainError("nonpositive input");
    if (a < b) throw DomainError("anth_integers requires a >= b");
    EuclidRun run = euclid_chain(a, b, -1);
    assert(run.complete);
    return finite_outcome(std::move(run.quotients), Magnitude(run.gcd));
}

AnthOutcome anth_magnitudes(const Magnitude& a, const Magnitude& b, int max_terms) {
    require_positive(a, "a");
    require_positive(b, "b");
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");

    Magnitude ratio = a / b;  // throws on incomparable radicands

    if (ratio.is_rational()) {
        const Rational& r = ratio.rational();
        EuclidRun run = euclid_chain(r.get_num(), r.get_den(), max_terms);
        if (!run.complete)
            return AnthOutcome{AnthOutcome::Kind::Truncated, std::move(run.quotients), {},
                               std::nullopt};
        assert(run.gcd == 1);  // num/den canonical
        // Common measure: a = p*mu, b = q*mu with mu = b/q.
        Magnitude gcd = b / Magnitude(r.get_den());
        return finite_outcome(std::move(run.quotients), std::move(gcd));
    }

    // Surd ratio (p + q*sqrt(d))/r as engine state (P + sqrt(D))/Q.
    const Surd& s = ratio.surd();
    Int P, Q, D = s.q * s.q * s.d;
    if (s.q > 0) {
        P = s.p;
        Q = s.r;
    } else {
        P = -s.p;
        Q = -s.r;
    }
    if ((D - P * P) % Q != 0) {
        Int aq = abs(Q);
        P *= aq;
        D *= Q * Q;
        Q *= aq;
    }
    PQState state{std::move(P), std::move(Q), std::move(D)};

    // Remainder chain of the subtraction procedure, tracked exactly for the
    // monotonicity assertion: gamma_{k+1} = gamma_{k-1} - I_k * gamma_k.
    Magnitude g_prev = a, g_cur = b;

    QuotientSeq quotients;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (;;) {
        auto key = std::make_pair(state.P, state.Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            QuotientSeq pre(quotients.begin(), quotients.begin() + it->second);
            QuotientSeq per(quotients.begin() + it->second, quotients.end());
            per = primitive_word(std::move(per));
            assert(!per.empty());
            return AnthOutcome{AnthOutcome::Kind::Periodic, std::move(pre), std::move(per),
                               std::nullopt};
        }
        if (static_cast<int>(quotients.size()) == max_terms)
            return AnthOutcome{AnthOutcome::Kind::Truncated, std::move(quotients), {},
                               std::nullopt};
        seen.emplace(std::move(key), quotients.size());
        auto [q, next] = cf_step(state);

        Magnitude g_next = g_prev - Magnitude(q) * g_cur;
        assert(is_positive(g_next));        // surd ratio: no remainder vanishes
        assert(compare(g_next, g_cur) < 0); // gamma_{k+1} < gamma_k
        g_prev = std::move(g_cur);
        g_cur = std::move(g_next);

        quotients.push_back(std::move(q));
        state = std::move(next);
    }
}

Verdict logos_equal(const Magnitude& a, const Magnitude& b, const Magnitude& c,
                    const Magnitude& d, int max_terms) {
    AnthOutcome lhs = anth_magnitudes(a, b, max_terms);
    AnthOutcome rhs = anth_magnitudes(c, d, max_terms);

    if (lhs.is_periodic() && rhs.is_periodic())
        return (lhs.quotients == rhs.quotients && lhs.period == rhs.period) ? Verdict::Equal
                                                                            : Verdict::NotEqual;
    if (lhs.is_finite() && rhs.is_finite())
        return lhs.quotients == rhs.quotients ? Verdict::Equal : Verdict::NotEqual;

    // Kinds differ or a side is Truncated: compare the expansions term by
    // term as far as they are known. A Truncated run provably has further
    // quotients beyond the recorded ones (the bound cut it mid-chain), so a
    // Finite end against any continuing side is a genuine discrepancy.
    for (std::size_t i = 0;; ++i) {
        auto ql = lhs.quotient_at(i);
        auto qr = rhs.quotient_at(i);
        if (ql && qr) {
            if (*ql != *qr) return Verdict::NotEqual;
            continue;
        }
        bool lhs_ends = !ql && lhs.is_finite();  // otherwise: continues, unknown
        bool rhs_ends = !qr && rhs.is_finite();
        if (!ql && !qr) return (lhs_ends != rhs_ends) ? Verdict::NotEqual : Verdict::Undecided;
        if (lhs_ends || rhs_ends) return Verdict::NotEqual;
        return Verdict::Undecided;
    }
}

bool verify_mean_proportional(const Int& A, const Int& B, const Int& C, const Magnitude& a,
                              const Magnitude& b, const Magnitude& c, const Magnitude& d) {
    auto holds = [&](const Magnitude& x, const Magnitude& y) {
        Magnitude lhs = Magnitude(A) * x * x;
        Magnitude rhs = Magnitude(B) * x * y + Magnitude(C) * y * y;
        return compare(lhs, rhs) == 0;
    };
    if (!holds(a, b))
        throw DomainError("hypothesis violation: A*a^2 != B*a*b + C*b^2");
    if (!holds(c, d))
        throw DomainError("hypothesis violation: A*c^2 != B*c*d + C*d^2");
    return compare(a * d, b * c) == 0;
}

GnomonReport gnomon_check(const Magnitude& a, const Magnitude& b) {
    if (!is_positive(b) || compare(a, b) <= 0)
        throw DomainError("gnomon check requires a > b > 0");
    Magnitude c1 = a - b;
    Magnitude c2 = b - (c1 + c1);
    if (!is_positive(c2))
        throw DomainError("outside gnomon regime (a >= 3b/2): remainder c2 = " + to_string(c2));
    bool preserved = compare(b * c2, c1 * c1) == 0;
    bool right = compare(a * a, (b * b) + (b * b)) == 0;
    return {preserved, right};
}

std::vector<std::pair<Int, Int>> convergents(const QuotientSeq& quotients) {
    std::vector<std::pair<Int, Int>> out;
    out.reserve(quotients.size());
    Int h_prev = 1, h_prev2 = 0;  // h_{-1} = 1, h_{-2} = 0
    Int k_prev = 0, k_prev2 = 1;  // k_{-1} = 0, k_{-2} = 1
    for (const Int& q : quotients) {
        Int h = q * h_prev + h_prev2;
        Int k = q * k_prev + k_prev2;
        out.emplace_back(h, k);
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
    }
    return out;
}

}  // namespace gonia
