#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gonia/errors.hpp"
#include "gonia/geometry.hpp"

namespace gonia {

// Three planar face angles meeting at a vertex. Valid when each lies in
// (0, pi), each is smaller than the sum of the other two (Elements XI.20),
// and the sum is below 2*pi.
struct TrihedralAngle {
    double f1, f2, f3;
};

// Validates and constructs; throws DomainError naming the violated
// constraint.
TrihedralAngle validate_trihedral(double f1, double f2, double f3);

// Measure of the trihedral angle: the excess of the spherical triangle whose
// sides are the face angles, in steradians.
double trihedral_solid_angle(const TrihedralAngle& t);

struct TripleProductResult {
    double value = 0.0;      // steradians, in (0, 2*pi) for a proper cone
    bool degenerate = false; // coplanar edge vectors
};

// Independent oracle from the cone's edge unit vectors:
//   tan(omega/2) = |u . (v x w)| / (1 + u.v + v.w + w.u),
// with a two-argument arctangent so values above pi keep the right quadrant.
TripleProductResult triple_product_solid_angle(const Vec3& u, const Vec3& v, const Vec3& w);

// n equal faces with common planar apex angle alpha meeting symmetrically at
// a vertex. Valid when n >= 3, alpha > 0 and n*alpha < 2*pi (a flat vertex
// n*alpha = 2*pi is rejected as non-solid).
struct RegularVertexFigure {
    int n;
    double alpha;
};

RegularVertexFigure make_vertex_figure(int n, double alpha);

// Edge unit vectors of the symmetric embedding: polar angle phi with
// sin^2 phi = (1 - cos alpha)/(1 - cos 2*pi/n), azimuths 2*pi*k/n.
std::vector<Vec3> embed_vertex_figure(const RegularVertexFigure& fig);

// Measure of the regular vertex figure: interior angle of the subtended
// spherical polygon times n, minus (n-2)*pi.
double regular_vertex_solid_angle(const RegularVertexFigure& fig);

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

const char* to_string(PlatonicSolid s);

// All five solids, in the fixed order above.
std::span<const PlatonicSolid> platonic_solids();

// Parses a case-insensitive solid name; throws DomainError otherwise.
PlatonicSolid parse_platonic(const std::string& name);

// Vertex figure of the solid: face count at a vertex and the face's interior
// angle at that vertex.
RegularVertexFigure platonic_vertex_figure(PlatonicSolid s);

struct SolidAngleRow {
    std::string name;
    int n;
    double alpha;
    double solid_angle_sr;
    double fraction_of_sphere;
};

// Vertex solid angles of the five Platonic solids.
std::vector<SolidAngleRow> platonic_table();

// Membership oracle for a convex cone given by consecutive edge unit
// vectors: 4*pi times the inside fraction. Deterministic per seed.
McEstimate monte_carlo_solid_angle(std::span<const Vec3> edges, std::uint64_t samples,
                                   std::uint64_t seed);

// Vertex-figure corpus entry, as stored in the JSON corpus files.
struct VertexFigureEntry {
    std::string name;
    int faces_at_vertex;
    double apex_angle_rad;
};

// The five built-in Platonic entries.
std::vector<VertexFigureEntry> builtin_corpus();

// Parses a corpus from JSON text: a list of objects with keys "name",
// "faces_at_vertex", "apex_angle_rad".
std::vector<VertexFigureEntry> parse_corpus(const std::string& json_text);

}  // namespace gonia
