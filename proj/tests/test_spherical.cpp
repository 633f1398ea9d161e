#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gonia/spherical.hpp"

using namespace gonia;

namespace {

constexpr double kPi = std::numbers::pi;

// Valid triangles with comfortable margins from every constraint boundary.
SphericalTriangle random_triangle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> side(0.05, 3.0);
    for (;;) {
        double a = side(rng), b = side(rng), c = side(rng);
        if (a + b + c >= 2.0 * kPi - 0.05) continue;
        if (a >= b + c - 0.02 || b >= a + c - 0.02 || c >= a + b - 0.02) continue;
        return make_triangle(a, b, c);
    }
}

}  // namespace

TEST_CASE("triangle validation names the violated invariant") {
    CHECK_NOTHROW(make_triangle(kPi / 2, kPi / 2, kPi / 2));
    CHECK_THROWS_WITH_AS(make_triangle(1.0, 1.0, 2.5), "triangle inequality violated",
                         DomainError);
    CHECK_THROWS_WITH_AS(make_triangle(3.0, 3.0, 0.5), "perimeter >= 2*pi", DomainError);
    CHECK_THROWS_WITH_AS(make_triangle(0.0, 1.0, 1.0), "side out of range (0, pi)", DomainError);
    CHECK_THROWS_WITH_AS(make_triangle(3.2, 1.0, 2.5), "side out of range (0, pi)", DomainError);
}

TEST_CASE("octant triangle is self-polar") {
    SphericalTriangle oct = make_triangle(kPi / 2, kPi / 2, kPi / 2);
    AngleTriple ang = angles_from_sides(oct);
    CHECK(ang.A == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(ang.B == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(ang.C == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(std::fabs(excess_from_angles(ang) - kPi / 2) <= 1e-14);
    CHECK(std::fabs(excess_lhuilier(oct) - kPi / 2) <= 1e-14);
}

TEST_CASE("equilateral triangle of side 1") {
    SphericalTriangle t = make_triangle(1.0, 1.0, 1.0);
    AngleTriple ang = angles_from_sides(t);
    // (cos 1 - cos^2 1)/sin^2 1 = 0.3507767947952376
    CHECK(std::cos(ang.A) == doctest::Approx(0.3507767947952376).epsilon(1e-12));
    CHECK(ang.A == doctest::Approx(1.2123958497745860).epsilon(1e-12));
    double girard = excess_from_angles(ang);
    CHECK(girard == doctest::Approx(0.4955948957339648).epsilon(1e-12));
    CHECK(excess_lhuilier(t) == doctest::Approx(girard).epsilon(1e-13));
}

TEST_CASE("birectangular triangle area equals its apex angle") {
    SphericalTriangle t = make_triangle(kPi / 2, kPi / 2, 1.0);
    CHECK(excess_from_angles(angles_from_sides(t)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(excess_lhuilier(t) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("small triangles approach their euclidean angles") {
    double eps = 1e-3;
    SphericalTriangle t = make_triangle(3 * eps, 4 * eps, 5 * eps);
    AngleTriple ang = angles_from_sides(t);
    // angles of the euclidean 3-4-5 triangle
    CHECK(ang.A == doctest::Approx(std::asin(3.0 / 5.0)).epsilon(1e-5));
    CHECK(ang.B == doctest::Approx(std::asin(4.0 / 5.0)).epsilon(1e-5));
    CHECK(ang.C == doctest::Approx(kPi / 2).epsilon(1e-5));
}

TEST_CASE("girard and lhuilier agree on random triangles") {
    std::mt19937_64 rng(8881);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        SphericalTriangle t = random_triangle(rng);
        double g = excess_from_angles(angles_from_sides(t));
        double l = excess_lhuilier(t);
        worst = std::max(worst, std::fabs(g - l));
        CHECK(l > 0.0);
        CHECK(l < 2.0 * kPi);
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("excess is permutation-invariant bit for bit") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 100; ++i) {
        SphericalTriangle t = random_triangle(rng);
        double sides[3] = {t.a, t.b, t.c};
        std::sort(sides, sides + 3);
        double reference = excess_lhuilier(make_triangle(sides[0], sides[1], sides[2]));
        do {
            double e = excess_lhuilier(make_triangle(sides[0], sides[1], sides[2]));
            CHECK(e == reference);
        } while (std::next_permutation(sides, sides + 3));
    }
}

TEST_CASE("lhuilier handles near-degenerate input") {
    SphericalTriangle t = make_triangle(1.0, 1.0, 1.999999);
    double e = excess_lhuilier(t);
    CHECK(e >= 0.0);
    CHECK(e < 2e-3);
}

TEST_CASE("heron") {
    CHECK(heron_euclidean(3, 4, 5) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(heron_euclidean(1, 1, 1) == doctest::Approx(0.43301270189221932).epsilon(1e-15));
    CHECK(heron_euclidean(1, 2, 3) == 0.0);
    CHECK_THROWS_AS(heron_euclidean(1, 2, 3.5), DomainError);
    CHECK_THROWS_AS(heron_euclidean(-1, 2, 2), DomainError);
}

TEST_CASE("flat limit ratio tends to one quadratically") {
    double r2 = flat_limit_ratio(3, 4, 5, 1e-2);
    double r3 = flat_limit_ratio(3, 4, 5, 1e-3);
    CHECK(std::fabs(r2 - 1.0) < 1e-3);
    CHECK(std::fabs(r3 - 1.0) < 1e-5);
    double shrink = std::fabs(r2 - 1.0) / std::fabs(r3 - 1.0);
    CHECK(shrink > 50.0);
    CHECK(shrink < 200.0);

    CHECK(std::fabs(flat_limit_ratio(1, 1, 1, 1e-2) - 1.0) < 1e-3);
    CHECK_THROWS_AS(flat_limit_ratio(1, 2, 3, 1e-3), DomainError);
}

TEST_CASE("embedding reproduces the sides") {
    SphericalTriangle oct = make_triangle(kPi / 2, kPi / 2, kPi / 2);
    auto [A, B, C] = embed_triangle(oct);
    CHECK(std::fabs(dot(A, B)) <= 1e-15);
    CHECK(std::fabs(dot(B, C)) <= 1e-15);
    CHECK(std::fabs(dot(C, A)) <= 1e-15);

    SphericalTriangle eq = make_triangle(1.0, 1.0, 1.0);
    auto [a1, b1, c1] = embed_triangle(eq);
    CHECK(dot(a1, b1) == doctest::Approx(std::cos(1.0)).epsilon(1e-14));
    CHECK(dot(b1, c1) == doctest::Approx(std::cos(1.0)).epsilon(1e-14));

    std::mt19937_64 rng(5150);
    for (int i = 0; i < 300; ++i) {
        SphericalTriangle t = random_triangle(rng);
        auto [vA, vB, vC] = embed_triangle(t);
        CHECK(std::fabs(norm(vA) - 1.0) <= 1e-14);
        CHECK(std::fabs(norm(vB) - 1.0) <= 1e-14);
        CHECK(std::fabs(norm(vC) - 1.0) <= 1e-14);
        CHECK(std::fabs(geodesic_distance(vB, vC) - t.a) <= 1e-12);
        CHECK(std::fabs(geodesic_distance(vA, vC) - t.b) <= 1e-12);
        CHECK(std::fabs(geodesic_distance(vA, vB) - t.c) <= 1e-12);
    }
}

TEST_CASE("monte carlo excess against known areas") {
    SphericalTriangle oct = make_triangle(kPi / 2, kPi / 2, kPi / 2);
    McEstimate mc = monte_carlo_excess(oct, 1000000, 42);
    CHECK(std::fabs(mc.value - kPi / 2) <= 3.0 * mc.stderr_value);

    SphericalTriangle eq = make_triangle(1.0, 1.0, 1.0);
    mc = monte_carlo_excess(eq, 1000000, 42);
    CHECK(std::fabs(mc.value - 0.4955948957339648) <= 3.0 * mc.stderr_value);

    // birectangular: area equals the apex angle
    SphericalTriangle bi = make_triangle(kPi / 2, kPi / 2, 1.0);
    mc = monte_carlo_excess(bi, 1000000, 42);
    CHECK(std::fabs(mc.value - 1.0) <= 3.0 * mc.stderr_value);

    CHECK_THROWS_AS(monte_carlo_excess(oct, 0, 1), DomainError);
}

TEST_CASE("monte carlo is deterministic per seed") {
    SphericalTriangle t = make_triangle(1.2, 0.8, 1.0);
    McEstimate a = monte_carlo_excess(t, 200000, 7);
    McEstimate b = monte_carlo_excess(t, 200000, 7);
    CHECK(a.value == b.value);
    McEstimate c = monte_carlo_excess(t, 200000, 8);
    CHECK(a.value != c.value);
}
