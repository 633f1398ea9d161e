#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gonia/serialize.hpp"
#include "gonia/solid_angle.hpp"
#include "gonia/spherical.hpp"

using namespace gonia;

namespace {

constexpr double kPi = std::numbers::pi;

// Dihedral-angle closed forms; the test oracle, never the implementation.
double oracle_tetrahedron() { return 3.0 * std::acos(1.0 / 3.0) - kPi; }
double oracle_cube() { return kPi / 2.0; }
double oracle_octahedron() { return 4.0 * std::acos(-1.0 / 3.0) - 2.0 * kPi; }
double oracle_dodecahedron() { return 3.0 * std::acos(-1.0 / std::sqrt(5.0)) - kPi; }
double oracle_icosahedron() { return 5.0 * std::acos(-std::sqrt(5.0) / 3.0) - 3.0 * kPi; }

TrihedralAngle random_trihedral(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> face(0.1, 2.2);
    for (;;) {
        double f1 = face(rng), f2 = face(rng), f3 = face(rng);
        if (f1 + f2 + f3 >= 2.0 * kPi - 0.05) continue;
        if (f1 >= f2 + f3 - 0.05 || f2 >= f1 + f3 - 0.05 || f3 >= f1 + f2 - 0.05) continue;
        return validate_trihedral(f1, f2, f3);
    }
}

}  // namespace

TEST_CASE("trihedral validation names the violated constraint") {
    CHECK_NOTHROW(validate_trihedral(kPi / 2, kPi / 2, kPi / 2));
    CHECK_THROWS_WITH_AS(validate_trihedral(0.3, 0.3, 0.7),
                         "XI.20 violated: each face angle must be less than "
                         "the sum of the other two",
                         DomainError);
    CHECK_THROWS_WITH_AS(validate_trihedral(2.2, 2.2, 2.2),
                         "face-angle sum >= 2*pi (four right angles)", DomainError);
    CHECK_THROWS_WITH_AS(validate_trihedral(0.0, 1.0, 1.0), "face angle out of range (0, pi)",
                         DomainError);
}

TEST_CASE("cube corner subtends one eighth of the sphere") {
    double omega = trihedral_solid_angle(validate_trihedral(kPi / 2, kPi / 2, kPi / 2));
    CHECK(std::fabs(omega - kPi / 2) <= 1e-14);
}

TEST_CASE("tetrahedron corner") {
    double omega = trihedral_solid_angle(validate_trihedral(kPi / 3, kPi / 3, kPi / 3));
    CHECK(omega == doctest::Approx(oracle_tetrahedron()).epsilon(1e-12));
    CHECK(omega == doctest::Approx(0.55128559843253).epsilon(1e-10));
}

TEST_CASE("flattening cone collapses to zero") {
    double a = 0.9, b = 0.7;
    double omega = trihedral_solid_angle(validate_trihedral(a, b, a + b - 1e-9));
    CHECK(omega >= 0.0);
    CHECK(omega < 1e-3);
}

TEST_CASE("triple product oracle") {
    TripleProductResult oct =
        triple_product_solid_angle({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    CHECK(!oct.degenerate);
    CHECK(std::fabs(oct.value - kPi / 2) <= 1e-14);

    auto edges = embed_vertex_figure({3, kPi / 3});
    TripleProductResult tet = triple_product_solid_angle(edges[0], edges[1], edges[2]);
    CHECK(tet.value == doctest::Approx(oracle_tetrahedron()).epsilon(1e-12));

    TripleProductResult flat =
        triple_product_solid_angle({1, 0, 0}, {0, 1, 0}, {-1, 0, 0});
    CHECK(flat.degenerate);
    CHECK(flat.value == 0.0);
}

TEST_CASE("excess route agrees with the triple product route") {
    std::mt19937_64 rng(600);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        TrihedralAngle t = random_trihedral(rng);
        double via_excess = trihedral_solid_angle(t);
        auto [A, B, C] = embed_triangle(make_triangle(t.f1, t.f2, t.f3));
        TripleProductResult tp = triple_product_solid_angle(A, B, C);
        CHECK(!tp.degenerate);
        worst = std::max(worst, std::fabs(via_excess - tp.value));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("vertex figure validation") {
    CHECK_NOTHROW(make_vertex_figure(3, kPi / 2));
    CHECK_THROWS_AS(make_vertex_figure(2, 1.0), DomainError);
    CHECK_THROWS_AS(make_vertex_figure(3, 0.0), DomainError);
    // flat vertex: 3 * (2*pi/3) = 2*pi exactly
    CHECK_THROWS_AS(make_vertex_figure(3, 2.0 * kPi / 3.0), DomainError);
    CHECK_THROWS_AS(make_vertex_figure(6, kPi / 3.0), DomainError);
}

TEST_CASE("regular vertex solid angles") {
    CHECK(regular_vertex_solid_angle(make_vertex_figure(3, kPi / 2)) ==
          doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(regular_vertex_solid_angle(make_vertex_figure(4, kPi / 3)) ==
          doctest::Approx(oracle_octahedron()).epsilon(1e-12));
    CHECK(regular_vertex_solid_angle(make_vertex_figure(5, kPi / 3)) ==
          doctest::Approx(oracle_icosahedron()).epsilon(1e-12));
}

TEST_CASE("n = 3 regular route equals the trihedral route") {
    for (double alpha : {0.5, 1.0, kPi / 3, kPi / 2, 1.8}) {
        double reg = regular_vertex_solid_angle(make_vertex_figure(3, alpha));
        double tri = trihedral_solid_angle(validate_trihedral(alpha, alpha, alpha));
        CHECK(std::fabs(reg - tri) <= 1e-12);
    }
}

TEST_CASE("solid angle grows with the apex angle") {
    for (int n = 3; n <= 6; ++n) {
        double prev = 0.0;
        for (int i = 1; i <= 40; ++i) {
            double alpha = (2.0 * kPi / n) * i / 41.0;
            double omega = regular_vertex_solid_angle(make_vertex_figure(n, alpha));
            CHECK(omega > prev);
            prev = omega;
        }
    }
}

TEST_CASE("flat vertex limit approaches the half space") {
    double prev = 0.0;
    for (double da : {1e-2, 1e-4, 1e-6, 1e-8}) {
        double omega = regular_vertex_solid_angle(make_vertex_figure(3, 2.0 * kPi / 3.0 - da));
        CHECK(omega > prev);
        prev = omega;
    }
    CHECK(prev <= 2.0 * kPi);
    CHECK(2.0 * kPi - prev < 1e-3);
}

TEST_CASE("platonic vertex figures") {
    auto fig = platonic_vertex_figure(PlatonicSolid::Octahedron);
    CHECK(fig.n == 4);
    CHECK(fig.alpha == kPi / 3);
    fig = platonic_vertex_figure(PlatonicSolid::Cube);
    CHECK(fig.n == 3);
    CHECK(fig.alpha == kPi / 2);
    fig = platonic_vertex_figure(PlatonicSolid::Dodecahedron);
    CHECK(fig.n == 3);
    CHECK(fig.alpha == 3 * kPi / 5);
    CHECK(parse_platonic("Cube") == PlatonicSolid::Cube);
    CHECK_THROWS_AS(parse_platonic("pyramid"), DomainError);
}

TEST_CASE("platonic table against the dihedral oracles") {
    auto rows = platonic_table();
    REQUIRE(rows.size() == 5);
    double oracle[5] = {oracle_tetrahedron(), oracle_cube(), oracle_octahedron(),
                        oracle_dodecahedron(), oracle_icosahedron()};
    for (int i = 0; i < 5; ++i) {
        CHECK(std::fabs(rows[i].solid_angle_sr - oracle[i]) <= 1e-9);
        CHECK(rows[i].fraction_of_sphere ==
              doctest::Approx(rows[i].solid_angle_sr / (4 * kPi)).epsilon(1e-15));
    }
    // eight cube corners tile the sphere
    CHECK(std::fabs(8.0 * rows[1].solid_angle_sr - 4.0 * kPi) <= 1e-12);
    // ordering by value: tetra < octa < cube < icosa < dodeca
    CHECK(rows[0].solid_angle_sr < rows[2].solid_angle_sr);
    CHECK(rows[2].solid_angle_sr < rows[1].solid_angle_sr);
    CHECK(rows[1].solid_angle_sr < rows[4].solid_angle_sr);
    CHECK(rows[4].solid_angle_sr < rows[3].solid_angle_sr);
}

TEST_CASE("monte carlo solid angle") {
    auto cube_edges = embed_vertex_figure(platonic_vertex_figure(PlatonicSolid::Cube));
    McEstimate mc = monte_carlo_solid_angle(cube_edges, 1000000, 11);
    CHECK(std::fabs(mc.value - kPi / 2) <= 3.0 * mc.stderr_value);

    auto octa_edges = embed_vertex_figure(platonic_vertex_figure(PlatonicSolid::Octahedron));
    mc = monte_carlo_solid_angle(octa_edges, 1000000, 11);
    CHECK(std::fabs(mc.value - oracle_octahedron()) <= 3.0 * mc.stderr_value);

    std::vector<Vec3> two = {{1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(monte_carlo_solid_angle(two, 1000, 1), DomainError);

    // a square cone traversed in zig-zag order is not convex-consecutive
    double s = std::sin(0.7), c = std::cos(0.7);
    std::vector<Vec3> zigzag = {{s, 0, c}, {-s, 0, c}, {0, s, c}, {0, -s, c}};
    CHECK_THROWS_AS(monte_carlo_solid_angle(zigzag, 1000, 1), DomainError);
}

TEST_CASE("corpus parsing") {
    auto builtin = builtin_corpus();
    REQUIRE(builtin.size() == 5);
    CHECK(builtin[0].name == "tetrahedron");
    CHECK(builtin[2].faces_at_vertex == 4);

    auto parsed = parse_corpus(
        R"([{"name":"cube","faces_at_vertex":3,"apex_angle_rad":1.5707963267948966}])");
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].name == "cube");
    CHECK(parsed[0].faces_at_vertex == 3);

    CHECK_THROWS_AS(parse_corpus("not json"), DomainError);
    CHECK_THROWS_AS(parse_corpus(R"({"name":"x"})"), DomainError);
    CHECK_THROWS_AS(parse_corpus(R"([{"name":"x"}])"), DomainError);
    CHECK_THROWS_AS(parse_corpus(R"([{"name":1,"faces_at_vertex":3,"apex_angle_rad":1.0}])"),
                    DomainError);
}

TEST_CASE("solid angle row serialization") {
    auto rows = platonic_table();
    nlohmann::json j = to_json(rows);
    CHECK(j.size() == 5);
    CHECK(j[1]["solid"] == "cube");
    CHECK(j[1]["n"] == 3);
    CHECK(j[1]["solid_angle_sr"].get<double>() == doctest::Approx(kPi / 2).epsilon(1e-14));
    std::string csv = to_csv(rows);
    CHECK(csv.find("solid,n,alpha,solid_angle_sr,fraction_of_sphere") == 0);
    CHECK(csv.find("cube,3,") != std::string::npos);
}
