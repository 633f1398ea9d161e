#include "gonia/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gonia {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClampBudget = 1e-12;

}  // namespace

SphericalTriangle make_triangle(double a, double b, double c) {
    auto side_ok = [](double s) { return std::isfinite(s) && s > 0.0 && s < kPi; };
    if (!side_ok(a) || !side_ok(b) || !side_ok(c))
        throw DomainError("side out of range (0, pi)");
    if (a >= b + c || b >= a + c || c >= a + b)
        throw DomainError("triangle inequality violated");
    if (a + b + c >= 2.0 * kPi)
        throw DomainError("perimeter >= 2*pi");
    return SphericalTriangle{a, b, c};
}

AngleTriple angles_from_sides(const SphericalTriangle& t) {
    double clamp_used = 0.0;
    auto angle = [&](double opp, double s1, double s2) {
        double raw = (std::cos(opp) - std::cos(s1) * std::cos(s2)) /
                     (std::sin(s1) * std::sin(s2));
        double excess = std::fabs(raw) - 1.0;
        if (excess > 0.0) {
            if (excess > kClampBudget)
                throw NumericError("arccos argument " + std::to_string(raw) +
                                   " exceeds clamp budget");
            clamp_used = std::max(clamp_used, excess);
            raw = std::copysign(1.0, raw);
        }
        return std::acos(raw);
    };
    double A = angle(t.a, t.b, t.c);
    double B = angle(t.b, t.c, t.a);
    double C = angle(t.c, t.a, t.b);
    return AngleTriple{A, B, C, clamp_used};
}

double excess_from_angles(const AngleTriple& angles) {
    auto ok = [](double x) { return std::isfinite(x) && x > 0.0 && x < kPi; };
    if (!ok(angles.A) || !ok(angles.B) || !ok(angles.C))
        throw DomainError("interior angle out of range (0, pi)");
    double e = angles.A + angles.B + angles.C - kPi;
    if (e <= 0.0) throw DomainError("degenerate angle triple: excess is nonpositive");
    return e;
}

double excess_lhuilier(const SphericalTriangle& t) {
    // Canonical side order, so all six permutations produce bit-identical
    // results.
    double x = t.a, y = t.b, z = t.c;
    if (x < y) std::swap(x, y);
    if (y < z) std::swap(y, z);
    if (x < y) std::swap(x, y);
    double s = (x + y + z) / 2.0;
    double prod = std::tan(s / 2.0) * std::tan((s - x) / 2.0) * std::tan((s - y) / 2.0) *
                  std::tan((s - z) / 2.0);
    if (prod < 0.0) {
        if (prod < -1e-15)
            throw NumericError("tangent product negative beyond tolerance");
        prod = 0.0;
    }
    return 4.0 * std::atan(std::sqrt(prod));
}

double heron_euclidean(double a, double b, double c) {
    if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0))
        throw DomainError("negative side length");
    if (a > b + c || b > a + c || c > a + b)
        throw DomainError("triangle inequality violated");
    double s = (a + b + c) / 2.0;
    double v = s * (s - a) * (s - b) * (s - c);
    return std::sqrt(std::fmax(v, 0.0));
}

double flat_limit_ratio(double a, double b, double c, double eps) {
    double area = heron_euclidean(a, b, c);
    if (area <= 0.0) throw DomainError("degenerate euclidean triangle");
    if (!(eps > 0.0)) throw DomainError("scale must be positive");
    SphericalTriangle t = make_triangle(eps * a, eps * b, eps * c);
    return excess_lhuilier(t) / (eps * eps * area);
}

std::array<Vec3, 3> embed_triangle(const SphericalTriangle& t) {
    AngleTriple angles = angles_from_sides(t);
    Vec3 vA{0.0, 0.0, 1.0};
    Vec3 vB{std::sin(t.c), 0.0, std::cos(t.c)};
    Vec3 vC{std::sin(t.b) * std::cos(angles.A), std::sin(t.b) * std::sin(angles.A),
            std::cos(t.b)};
    return {vA, vB, vC};
}

McEstimate monte_carlo_excess(const SphericalTriangle& t, std::uint64_t samples,
                              std::uint64_t seed) {
    if (samples < 1) throw DomainError("sample count must be >= 1");
    auto [vA, vB, vC] = embed_triangle(t);
    // Inward-oriented great-circle normals; x is inside when it lies in all
    // three hemispheres.
    auto inward = [](const Vec3& u, const Vec3& v, const Vec3& opposite) {
        Vec3 n = cross(u, v);
        return dot(n, opposite) >= 0.0 ? n : -1.0 * n;
    };
    Vec3 nAB = inward(vA, vB, vC);
    Vec3 nBC = inward(vB, vC, vA);
    Vec3 nCA = inward(vC, vA, vB);

    CounterRng rng(seed);
    std::uint64_t inside = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Vec3 x = rng.direction(i);
        if (dot(x, nAB) >= 0.0 && dot(x, nBC) >= 0.0 && dot(x, nCA) >= 0.0) ++inside;
    }
    double p = static_cast<double>(inside) / static_cast<double>(samples);
    double area = 4.0 * kPi;
    return McEstimate{area * p,
                      area * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples};
}

}  // namespace gonia
