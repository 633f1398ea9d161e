#pragma once

#include <array>
#include <cstdint>

#include "gonia/errors.hpp"
#include "gonia/geometry.hpp"

namespace gonia {

// Spherical triangle given by its three great-circle side lengths, in
// radians. Valid when every side lies in (0, pi), each side is smaller than
// the sum of the other two, and the perimeter is below 2*pi (the triangle
// fits in an open half-sphere).
struct SphericalTriangle {
    double a, b, c;
};

// Validates and constructs; throws DomainError naming the violated
// invariant.
SphericalTriangle make_triangle(double a, double b, double c);

struct AngleTriple {
    double A, B, C;
    // Largest amount by which an arccos argument exceeded [-1, 1] and was
    // clamped; must stay within the 1e-12 budget.
    double clamp_used = 0.0;
};

// Interior angles by the spherical law of cosines.
AngleTriple angles_from_sides(const SphericalTriangle& t);

// Girard: spherical excess A + B + C - pi, the triangle's area on the unit
// sphere.
double excess_from_angles(const AngleTriple& angles);

// Excess directly from the sides (l'Huilier):
//   E = 4 atan sqrt( tan(s/2) tan((s-a)/2) tan((s-b)/2) tan((s-c)/2) ).
double excess_lhuilier(const SphericalTriangle& t);

// Euclidean Heron area sqrt(s(s-a)(s-b)(s-c)); 0 for degenerate triples.
double heron_euclidean(double a, double b, double c);

// excess(eps*a, eps*b, eps*c) / (eps^2 * heron(a, b, c)); tends to 1 as
// eps -> 0 with O(eps^2) deviation.
double flat_limit_ratio(double a, double b, double c, double eps);

// Unit vectors realizing the triangle: A at the pole, B on the reference
// meridian, C placed by the angle at A. Pairwise geodesic distances
// reproduce (a, b, c).
std::array<Vec3, 3> embed_triangle(const SphericalTriangle& t);

// Area oracle: fraction of uniformly sampled directions inside the embedded
// triangle, scaled by 4*pi. Deterministic for a fixed seed.
McEstimate monte_carlo_excess(const SphericalTriangle& t, std::uint64_t samples,
                              std::uint64_t seed);

}  // namespace gonia
