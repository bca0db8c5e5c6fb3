#include <cmath>

#include "doctest.h"
#include "floatlab/body.hpp"
#include "floatlab/errors.hpp"
#include "oracles.hpp"

using namespace floatlab;

namespace {

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

Vector unit(double x, double y) {
    Vector v = vec2(x, y);
    return v / v.norm();
}

BodySpec square() {
    return BodySpec::polygon(PolygonChain({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}));
}

BodySpec ellipse21() { // semi-axes (2, 1)
    Matrix a(2, 2);
    a << 4, 0, 0, 1;
    return BodySpec::ellipsoid(a, Vector::Zero(2));
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kQuarterRoot = std::pow(2.0, -0.25); // boundary of B^2_4 on the diagonal

} // namespace

TEST_SUITE("body") {

TEST_CASE("support closed forms") {
    CHECK(support(square(), vec2(1, 0)) == doctest::Approx(1.0));
    CHECK(support(BodySpec::lp_ball(2, 1.0), unit(1, 1)) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-14)); // max over the four vertices
    BodySpec doubled = BodySpec::affine(BodySpec::lp_ball(2, 2.0),
                                        2.0 * Matrix::Identity(2, 2), Vector::Zero(2));
    CHECK(support(doubled, unit(0.3, -0.7)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(support(square(), vec2(1, 1)), input_error); // not unit
}

TEST_CASE("contains") {
    BodySpec disk = BodySpec::lp_ball(2, 2.0);
    CHECK(contains(disk, vec2(0, 0)));
    CHECK(contains(disk, vec2(1, 0))); // boundary point counts
    CHECK(!contains(square(), vec2(1.001, 0)));
    CHECK_THROWS_AS(contains(disk, Vector::Zero(3)), input_error);
}

TEST_CASE("boundary points") {
    BodySpec disk = BodySpec::lp_ball(2, 2.0);
    Vector b = boundary_point(disk, vec2(0, 1));
    CHECK(b(0) == doctest::Approx(0.0));
    CHECK(b(1) == doctest::Approx(1.0));

    Vector b4 = boundary_point(BodySpec::lp_ball(2, 4.0), unit(1, 1));
    CHECK(b4(0) == doctest::Approx(kQuarterRoot).epsilon(1e-14));
    CHECK(b4(1) == doctest::Approx(kQuarterRoot).epsilon(1e-14));

    Vector face = boundary_point(square(), vec2(1, 0)); // tie-break: edge midpoint
    CHECK(face(0) == doctest::Approx(1.0));
    CHECK(face(1) == doctest::Approx(0.0));
}

TEST_CASE("normals") {
    BodySpec disk = BodySpec::lp_ball(2, 2.0);
    Vector n = normal_at(disk, vec2(0, 1));
    CHECK(n(1) == doctest::Approx(1.0));

    Vector ne = normal_at(ellipse21(), vec2(2, 0));
    CHECK(ne(0) == doctest::Approx(1.0));

    Vector n4 = normal_at(BodySpec::lp_ball(2, 4.0), vec2(kQuarterRoot, kQuarterRoot));
    CHECK(n4(0) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(n4(1) == doctest::Approx(kInvSqrt2).epsilon(1e-12));

    CHECK_THROWS_AS(normal_at(square(), vec2(1, 1)), input_error);   // vertex
    CHECK_THROWS_AS(normal_at(square(), vec2(0.5, 0.5)), input_error); // interior
    Vector nsq = normal_at(square(), vec2(1, 0.3));
    CHECK(nsq(0) == doctest::Approx(1.0));
}

TEST_CASE("gauss curvature closed forms") {
    CHECK(gauss_curvature(BodySpec::lp_ball(2, 2.0), vec2(0, 1)) == doctest::Approx(1.0));
    // planar ellipse curvature a/b^2 at (a, 0)
    CHECK(gauss_curvature(ellipse21(), vec2(2, 0)) == doctest::Approx(2.0));
    CHECK(gauss_curvature(ellipse21(), vec2(0, 1)) == doctest::Approx(0.25));
    CHECK(gauss_curvature(BodySpec::lp_ball(2, 4.0), vec2(kQuarterRoot, kQuarterRoot)) ==
          doctest::Approx(3.0 * kQuarterRoot).epsilon(1e-12));
    CHECK_THROWS_AS(gauss_curvature(square(), vec2(1, 0)), input_error);
}

TEST_CASE("curvature is affine covariant") {
    // ellipse as affine image of the disk must agree with the closed form
    Matrix t(2, 2);
    t << 2, 0, 0, 1;
    BodySpec mapped = BodySpec::affine(BodySpec::lp_ball(2, 2.0), t, Vector::Zero(2));
    CHECK(gauss_curvature(mapped, vec2(2, 0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(gauss_curvature(mapped, vec2(0, 1)) == doctest::Approx(0.25).epsilon(1e-12));

    auto gen = oracle::rng(7);
    for (int it = 0; it < 10; ++it) {
        double th = oracle::uniform(gen, 0.1, 1.4);
        Vector x = vec2(2.0 * std::cos(th), std::sin(th));
        CHECK(gauss_curvature(mapped, x) ==
              doctest::Approx(gauss_curvature(ellipse21(), x)).epsilon(1e-10));
    }
}

TEST_CASE("lp curvature formula") {
    CHECK(lp_curvature(2, 2.0, unit(0.3, 0.8)) == doctest::Approx(1.0));
    CHECK(lp_curvature(2, 4.0, vec2(kQuarterRoot, kQuarterRoot)) ==
          doctest::Approx(3.0 * kQuarterRoot).epsilon(1e-12));
    CHECK(lp_curvature(2, 4.0, vec2(0, 1)) == 0.0);       // flat axis point, p > 2
    CHECK(std::isinf(lp_curvature(2, 1.5, vec2(1, 0))));  // spike, p < 2
    CHECK_THROWS_AS(lp_curvature(2, 1.0, vec2(1, 0)), input_error);
    CHECK_THROWS_AS(lp_curvature(2, 4.0, vec2(0.5, 0.5)), input_error); // off sphere
}

TEST_CASE("lp curvature agrees with finite-difference and implicit oracles") {
    auto gen = oracle::rng(1234);
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        for (int it = 0; it < 100; ++it) {
            // quadrant angle bounded away from the axes
            double theta = oracle::uniform(gen, 0.15, oracle::kPi / 2.0 - 0.15) +
                           (gen() % 4) * oracle::kPi / 2.0;
            double x, y;
            oracle::lp_boundary(p, theta, &x, &y);
            double lib = lp_curvature(2, p, vec2(x, y));
            double fd = oracle::lp_curvature_fd(p, x, y);
            double imp = oracle::lp_curvature_implicit(p, x, y);
            CHECK(lib == doctest::Approx(fd).epsilon(1e-6));
            CHECK(lib == doctest::Approx(imp).epsilon(1e-9));
        }
    }
}

TEST_CASE("volumes and centroids") {
    CHECK(volume(square()) == doctest::Approx(4.0));
    CHECK(volume(BodySpec::lp_ball(2, 2.0)) == doctest::Approx(oracle::kPi));
    CHECK(volume(BodySpec::lp_ball(2, 1.0)) == doctest::Approx(2.0));
    CHECK(volume(BodySpec::lp_ball(3, 2.0)) == doctest::Approx(4.0 * oracle::kPi / 3.0));
    CHECK(volume(ellipse21()) == doctest::Approx(2.0 * oracle::kPi));

    // gamma-function volume vs fine polygonization
    double polyarea = polygonize(BodySpec::lp_ball(2, 4.0), 16384).area();
    CHECK(volume(BodySpec::lp_ball(2, 4.0)) == doctest::Approx(polyarea).epsilon(1e-6));

    Vector c = centroid(square());
    CHECK(c.norm() == doctest::Approx(0.0));
    BodySpec moved = BodySpec::affine(BodySpec::lp_ball(2, 2.0), Matrix::Identity(2, 2),
                                      vec2(3, -1));
    CHECK(centroid(moved)(0) == doctest::Approx(3.0));
    CHECK(volume(moved) == doctest::Approx(oracle::kPi));
}

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(unit_ball_volume(2) == doctest::Approx(oracle::kPi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * oracle::kPi / 3.0));
    CHECK_THROWS_AS(unit_ball_volume(-1), input_error);
}

TEST_CASE("support subadditivity") {
    auto gen = oracle::rng(99);
    std::vector<BodySpec> bodies;
    bodies.push_back(square());
    bodies.push_back(BodySpec::lp_ball(2, 1.5));
    bodies.push_back(BodySpec::lp_ball(2, 4.0));
    bodies.push_back(ellipse21());
    for (const auto& k : bodies) {
        for (int it = 0; it < 200; ++it) {
            Vector u = unit(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1));
            Vector v = unit(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1));
            Vector sum = u + v;
            double norm = sum.norm();
            if (norm < 1e-6) continue;
            Vector w = sum / norm;
            CHECK(support(k, w) * norm <= support(k, u) + support(k, v) + 1e-10);
        }
    }
}

TEST_CASE("boundary point properties") {
    auto gen = oracle::rng(5);
    std::vector<BodySpec> bodies;
    bodies.push_back(square());
    bodies.push_back(BodySpec::lp_ball(2, 1.0));
    bodies.push_back(BodySpec::lp_ball(2, 3.0));
    bodies.push_back(ellipse21());
    Matrix t(2, 2);
    t << 1.2, 0.3, -0.2, 0.9;
    bodies.push_back(BodySpec::affine(BodySpec::lp_ball(2, 2.0), t, vec2(0.5, 0.5)));
    for (const auto& k : bodies) {
        for (int it = 0; it < 100; ++it) {
            Vector u = unit(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1));
            Vector b = boundary_point(k, u);
            CHECK(contains(k, b));
            CHECK(b.dot(u) == doctest::Approx(support(k, u)).epsilon(1e-10));
        }
    }
}

TEST_CASE("normal inverts boundary point on smooth strictly convex bodies") {
    auto gen = oracle::rng(21);
    std::vector<BodySpec> bodies;
    bodies.push_back(BodySpec::lp_ball(2, 2.0));
    bodies.push_back(BodySpec::lp_ball(2, 1.5));
    bodies.push_back(BodySpec::lp_ball(2, 4.0));
    bodies.push_back(ellipse21());
    Matrix t(2, 2);
    t << 1.5, 0.4, 0.1, 0.8;
    bodies.push_back(BodySpec::affine(BodySpec::lp_ball(2, 2.0), t, vec2(0.2, -0.3)));
    for (const auto& k : bodies) {
        for (int it = 0; it < 500; ++it) {
            Vector u = unit(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1));
            Vector n = normal_at(k, boundary_point(k, u));
            CHECK((n - u).norm() <= 1e-8);
        }
    }
}

TEST_CASE("affine support covariance against transformed polygons") {
    auto gen = oracle::rng(77);
    for (int it = 0; it < 20; ++it) {
        Matrix t(2, 2);
        t << oracle::uniform(gen, -1.5, 1.5), oracle::uniform(gen, -1.5, 1.5),
            oracle::uniform(gen, -1.5, 1.5), oracle::uniform(gen, -1.5, 1.5);
        if (std::abs(t.determinant()) < 0.2) continue;
        Vector shift = vec2(oracle::uniform(gen, -2, 2), oracle::uniform(gen, -2, 2));
        BodySpec wrapped = BodySpec::affine(square(), t, shift);

        const double m[4] = {t(0, 0), t(0, 1), t(1, 0), t(1, 1)};
        PolygonChain direct = transform(
            PolygonChain({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}), m, {shift(0), shift(1)});
        for (int j = 0; j < 50; ++j) {
            Vector u = unit(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1));
            CHECK(support(wrapped, u) ==
                  doctest::Approx(direct.support({u(0), u(1)})).epsilon(1e-12));
        }
    }
}

TEST_CASE("recenter moves the centroid to the origin") {
    BodySpec moved = BodySpec::affine(BodySpec::lp_ball(2, 2.0), Matrix::Identity(2, 2),
                                      vec2(3, -1));
    CHECK(centroid(recenter(moved)).norm() <= 1e-12);
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(BodySpec::lp_ball(1, 2.0), input_error);
    CHECK_THROWS_AS(BodySpec::lp_ball(2, 0.5), input_error);
    CHECK_THROWS_WITH_AS(
        BodySpec::polygon(PolygonChain({{0, 0}, {2, 0}, {1, 0.1}, {0, 1}})),
        doctest::Contains("index 2"), input_error);
    CHECK_THROWS_AS(BodySpec::polygon(PolygonChain({{0, 0}, {1, 1}, {2, 2}})),
                    input_error); // degenerate
    CHECK_THROWS_AS(BodySpec::polygon(PolygonChain({{0, 0}, {0, 0}, {1, 1}})),
                    input_error); // duplicate
    Matrix bad(2, 2);
    bad << 1, 2, 2, 1; // indefinite
    CHECK_THROWS_AS(BodySpec::ellipsoid(bad, Vector::Zero(2)), input_error);
    Matrix sing(2, 2);
    sing << 1, 1, 1, 1;
    CHECK_THROWS_AS(BodySpec::affine(square(), sing, Vector::Zero(2)), input_error);
}

TEST_CASE("clockwise polygons are reoriented") {
    BodySpec cw = BodySpec::polygon(PolygonChain({{1, -1}, {-1, -1}, {-1, 1}, {1, 1}}));
    CHECK(volume(cw) == doctest::Approx(4.0));
    CHECK(contains(cw, vec2(0.5, 0.5)));
}

TEST_CASE("p = inf is the cube") {
    BodySpec cube = BodySpec::lp_ball(2, std::numeric_limits<double>::infinity());
    CHECK(volume(cube) == doctest::Approx(4.0));
    CHECK(support(cube, unit(1, 1)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(polygonize(cube, 64).size() == 4);
    CHECK_THROWS_AS(gauss_curvature(cube, vec2(1, 0)), input_error);
}

} // TEST_SUITE
