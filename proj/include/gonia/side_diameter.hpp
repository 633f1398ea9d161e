#pragma once

#include <vector>

#include "gonia/anthyphairesis.hpp"
#include "gonia/magnitude.hpp"

namespace gonia {

// Side number p_n and diameter number q_n, from p_1 = q_1 = 1 and
// p_{n+1} = p_n + q_n, q_{n+1} = 2 p_n + q_n. Coprime, with
// q_n^2 - 2 p_n^2 = (-1)^n.
struct SideDiameterPair {
    int n = 1;
    Int p = 1;
    Int q = 1;
};

enum class AngleClass { Acute, Right, Obtuse, Undetermined };

const char* to_string(AngleClass c);

// First N pairs of the recursion. N >= 1.
std::vector<SideDiameterPair> generate(int N);

// The n-th pair alone.
SideDiameterPair pair_at(int n);

// q^2 - 2*p^2; equals (-1)^n for generated pairs.
Int pell_residual(const SideDiameterPair& pair);

// Apex angle class of the isosceles triangle (p, p, q) by the exact
// comparison of q^2 against 2*p^2. Requires 0 < q < 2p.
AngleClass classify_isosceles_apex(const Magnitude& p, const Magnitude& q);

// Apex angle 2*asin(q / 2p) in radians, for reporting. Requires 0 < q < 2p.
double apex_angle(double p, double q);
double apex_angle(const SideDiameterPair& pair);

// Quotients of anth_integers(q_n, p_n); equals [1] followed by n-1 twos.
QuotientSeq anth_check(const SideDiameterPair& pair);

// Bounded search over the apex-angle family: Acute if omega < omega_{2n-1}
// for some odd index <= 2*N_max - 1, Obtuse if omega > omega_{2n} for some
// even index, Undetermined otherwise. omega = pi/2 is always Undetermined.
AngleClass pythagorean_classify(double omega, int n_max);

// |omega_n - pi/2|, evaluated in a cancellation-free form.
double right_angle_gap(int n);

struct SideDiameterRow {
    int n;
    Int p, q;
    Int residual;
    AngleClass angle_class;
    double apex_rad;
    double gap_rad;
};

std::vector<SideDiameterRow> side_diameter_table(int N);

}  // namespace gonia
