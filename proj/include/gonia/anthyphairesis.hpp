#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gonia/magnitude.hpp"

namespace gonia {

// Quotient sequence of a reciprocal-subtraction run: first element >= 0,
// all subsequent elements >= 1.
using QuotientSeq = std::vector<Int>;

// State of the surd continued-fraction engine, representing (P + sqrt(D))/Q
// with Q != 0, Q | D - P^2 and D not a perfect square.
struct PQState {
    Int P, Q, D;

    bool operator==(const PQState&) const = default;
};

// One step of the surd continued-fraction recurrence:
//   a = floor((P + sqrt(D))/Q),  P' = a*Q - P,  Q' = (D - P'^2)/Q.
std::pair<Int, PQState> cf_step(const PQState& s);

// Outcome of reciprocal subtraction on two magnitudes.
struct AnthOutcome {
    enum class Kind { Finite, Periodic, Truncated };

    Kind kind;
    // Finite/Truncated: all quotients. Periodic: the preperiod.
    QuotientSeq quotients;
    // Periodic only: minimal repeating word, nonempty.
    QuotientSeq period;
    // Finite only: the greatest common measure.
    std::optional<Magnitude> gcd;

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_periodic() const { return kind == Kind::Periodic; }
    bool is_truncated() const { return kind == Kind::Truncated; }

    // i-th quotient of the (possibly infinite) expansion, or nullopt when the
    // expansion has ended (Finite) or is unknown (Truncated).
    std::optional<Int> quotient_at(std::size_t i) const;
};

// Euclid's algorithm on natural numbers: always Finite, gcd is the last
// nonzero remainder. Requires a >= b > 0.
AnthOutcome anth_integers(const Int& a, const Int& b);

// Reciprocal subtraction of two positive comparable magnitudes.
// Finite for commensurable inputs; EventuallyPeriodic for surd ratios once a
// repeated engine state is found; Truncated when max_terms quotients were
// emitted first. The decreasing remainder chain is asserted internally.
AnthOutcome anth_magnitudes(const Magnitude& a, const Magnitude& b, int max_terms = 64);

enum class Verdict { Equal, NotEqual, Undecided };

// Whether a:b and c:d have the same reciprocal-subtraction expansion.
// Undecided only when a Truncated outcome ends before any discrepancy.
Verdict logos_equal(const Magnitude& a, const Magnitude& b, const Magnitude& c,
                    const Magnitude& d, int max_terms = 64);

// Given that A*a^2 = B*a*b + C*b^2 and A*c^2 = B*c*d + C*d^2 hold exactly
// (checked; violation throws DomainError), returns the exact truth of
// a*d = b*c.
bool verify_mean_proportional(const Int& A, const Int& B, const Int& C, const Magnitude& a,
                              const Magnitude& b, const Magnitude& c, const Magnitude& d);

struct GnomonReport {
    bool gnomon_preserved;  // b*c2 = c1^2 with c1 = a - b, c2 = b - 2*c1
    bool right_angle;       // a^2 = 2*b^2
};

// Exact gnomon-preservation check for a > b > 0 with a < 3b/2.
// The two flags agree for every valid input.
GnomonReport gnomon_check(const Magnitude& a, const Magnitude& b);

// Convergents h_k/k_k of a quotient sequence, as (numerator, denominator).
std::vector<std::pair<Int, Int>> convergents(const QuotientSeq& quotients);

}  // namespace gonia
