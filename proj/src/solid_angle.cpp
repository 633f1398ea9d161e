#include "gonia/solid_angle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "gonia/spherical.hpp"

namespace gonia {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TrihedralAngle validate_trihedral(double f1, double f2, double f3) {
    auto face_ok = [](double f) { return std::isfinite(f) && f > 0.0 && f < kPi; };
    if (!face_ok(f1) || !face_ok(f2) || !face_ok(f3))
        throw DomainError("face angle out of range (0, pi)");
    if (f1 >= f2 + f3 || f2 >= f1 + f3 || f3 >= f1 + f2)
        throw DomainError("XI.20 violated: each face angle must be less than "
                          "the sum of the other two");
    if (f1 + f2 + f3 >= 2.0 * kPi)
        throw DomainError("face-angle sum >= 2*pi (four right angles)");
    return TrihedralAngle{f1, f2, f3};
}

double trihedral_solid_angle(const TrihedralAngle& t) {
    return excess_lhuilier(make_triangle(t.f1, t.f2, t.f3));
}

TripleProductResult triple_product_solid_angle(const Vec3& u, const Vec3& v, const Vec3& w) {
    double num = std::fabs(triple_product(u, v, w));
    if (num <= 1e-14) return TripleProductResult{0.0, true};
    double den = 1.0 + dot(u, v) + dot(v, w) + dot(w, u);
    return TripleProductResult{2.0 * std::atan2(num, den), false};
}

RegularVertexFigure make_vertex_figure(int n, double alpha) {
    if (n < 3) throw DomainError("vertex figure needs at least 3 faces");
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw DomainError("apex angle must be positive");
    if (n * alpha >= 2.0 * kPi)
        throw DomainError("vertex not solid: n*alpha must be < 2*pi");
    return RegularVertexFigure{n, alpha};
}

std::vector<Vec3> embed_vertex_figure(const RegularVertexFigure& fig) {
    double sin2_phi = (1.0 - std::cos(fig.alpha)) / (1.0 - std::cos(2.0 * kPi / fig.n));
    if (sin2_phi > 1.0) throw DomainError("unrealizable vertex figure: sin^2 phi > 1");
    double sin_phi = std::sqrt(sin2_phi);
    double cos_phi = std::sqrt(std::fmax(0.0, 1.0 - sin2_phi));
    std::vector<Vec3> edges;
    edges.reserve(fig.n);
    for (int k = 0; k < fig.n; ++k) {
        double az = 2.0 * kPi * k / fig.n;
        edges.push_back({sin_phi * std::cos(az), sin_phi * std::sin(az), cos_phi});
    }
    return edges;
}

double regular_vertex_solid_angle(const RegularVertexFigure& fig) {
    std::vector<Vec3> e = embed_vertex_figure(fig);
    // Interior angle of the subtended spherical polygon at edge 0, between
    // the arcs toward its two neighbours; all vertices are congruent.
    const Vec3& at = e[0];
    auto tangent_toward = [&](const Vec3& to) { return normalized(to - dot(to, at) * at); };
    Vec3 t1 = tangent_toward(e[1]);
    Vec3 t2 = tangent_toward(e[fig.n - 1]);
    double theta = std::acos(std::clamp(dot(t1, t2), -1.0, 1.0));
    return fig.n * theta - (fig.n - 2) * kPi;
}

const char* to_string(PlatonicSolid s) {
    switch (s) {
        case PlatonicSolid::Tetrahedron: return "tetrahedron";
        case PlatonicSolid::Cube: return "cube";
        case PlatonicSolid::Octahedron: return "octahedron";
        case PlatonicSolid::Dodecahedron: return "dodecahedron";
        case PlatonicSolid::Icosahedron: return "icosahedron";
    }
    return "?";
}

std::span<const PlatonicSolid> platonic_solids() {
    static const PlatonicSolid all[] = {PlatonicSolid::Tetrahedron, PlatonicSolid::Cube,
                                        PlatonicSolid::Octahedron, PlatonicSolid::Dodecahedron,
                                        PlatonicSolid::Icosahedron};
    return all;
}

PlatonicSolid parse_platonic(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (PlatonicSolid s : platonic_solids())
        if (lower == to_string(s)) return s;
    throw DomainError("unknown solid: " + name);
}

RegularVertexFigure platonic_vertex_figure(PlatonicSolid s) {
    switch (s) {
        case PlatonicSolid::Tetrahedron: return {3, kPi / 3.0};
        case PlatonicSolid::Cube: return {3, kPi / 2.0};
        case PlatonicSolid::Octahedron: return {4, kPi / 3.0};
        case PlatonicSolid::Dodecahedron: return {3, 3.0 * kPi / 5.0};
        case PlatonicSolid::Icosahedron: return {5, kPi / 3.0};
    }
    throw DomainError("unknown solid");
}

std::vector<SolidAngleRow> platonic_table() {
    std::vector<SolidAngleRow> rows;
    rows.reserve(5);
    for (PlatonicSolid s : platonic_solids()) {
        RegularVertexFigure fig = platonic_vertex_figure(s);
        double omega = regular_vertex_solid_angle(fig);
        rows.push_back({to_string(s), fig.n, fig.alpha, omega, omega / (4.0 * kPi)});
    }
    return rows;
}

McEstimate monte_carlo_solid_angle(std::span<const Vec3> edges, std::uint64_t samples,
                                   std::uint64_t seed) {
    if (edges.size() < 3) throw DomainError("convex cone needs at least 3 edges");
    if (samples < 1) throw DomainError("sample count must be >= 1");

    std::vector<Vec3> e(edges.begin(), edges.end());
    for (Vec3& v : e) {
        if (norm(v) <= 1e-14) throw DomainError("degenerate edge vector");
        v = normalized(v);
    }
    Vec3 centroid{0, 0, 0};
    for (const Vec3& v : e) centroid = centroid + v;

    std::size_t n = e.size();
    std::vector<Vec3> normals;
    normals.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec3 nk = cross(e[k], e[(k + 1) % n]);
        if (norm(nk) <= 1e-14) throw DomainError("degenerate edge set: parallel adjacent edges");
        if (dot(nk, centroid) < 0.0) nk = -1.0 * nk;
        normals.push_back(nk);
    }
    // Convexity: every edge must lie on the inner side of every face plane.
    for (const Vec3& nk : normals)
        for (const Vec3& v : e)
            if (dot(nk, v) < -1e-9) throw DomainError("edge set is not a convex cone");

    CounterRng rng(seed);
    std::uint64_t inside = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Vec3 x = rng.direction(i);
        bool in = true;
        for (const Vec3& nk : normals) {
            if (dot(x, nk) < 0.0) {
                in = false;
                break;
            }
        }
        if (in) ++inside;
    }
    double p = static_cast<double>(inside) / static_cast<double>(samples);
    double area = 4.0 * kPi;
    return McEstimate{area * p,
                      area * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples};
}

std::vector<VertexFigureEntry> builtin_corpus() {
    std::vector<VertexFigureEntry> out;
    for (PlatonicSolid s : platonic_solids()) {
        RegularVertexFigure fig = platonic_vertex_figure(s);
        out.push_back({to_string(s), fig.n, fig.alpha});
    }
    return out;
}

std::vector<VertexFigureEntry> parse_corpus(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("corpus is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw DomainError("corpus must be a JSON array");
    std::vector<VertexFigureEntry> out;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("name") || !item.contains("faces_at_vertex") ||
            !item.contains("apex_angle_rad"))
            throw DomainError("corpus entry needs keys name, faces_at_vertex, apex_angle_rad");
        if (!item["name"].is_string() || !item["faces_at_vertex"].is_number_integer() ||
            !item["apex_angle_rad"].is_number())
            throw DomainError("corpus entry has wrongly typed fields");
        out.push_back({item["name"].get<std::string>(), item["faces_at_vertex"].get<int>(),
                       item["apex_angle_rad"].get<double>()});
    }
    return out;
}

}  // namespace gonia
