#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "floatlab/errors.hpp"
#include "floatlab/geometry.hpp"
#include "oracles.hpp"

using namespace floatlab;

namespace {

PolygonChain unit_square() {
    return PolygonChain({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
}

PolygonChain rotated_square() { // 45 degrees, vertices (+-sqrt2, 0), (0, +-sqrt2)
    double s = std::sqrt(2.0);
    return PolygonChain({{s, 0}, {0, s}, {-s, 0}, {0, -s}});
}

PolygonChain random_convex(std::mt19937_64& gen, std::size_t points) {
    // boundary points of a random ellipse; always convex and CCW
    double a = oracle::uniform(gen, 0.5, 2.0);
    double b = oracle::uniform(gen, 0.5, 2.0);
    double phase = oracle::uniform(gen, 0.0, 1.0);
    PolygonChain p;
    for (std::size_t i = 0; i < points; ++i) {
        double t = 2.0 * oracle::kPi * (i + phase) / points;
        p.vertices.push_back({a * std::cos(t), b * std::sin(t)});
    }
    return p;
}

const double kIdentity[4] = {1, 0, 0, 1};

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("shoelace area and centroid") {
    PolygonChain sq = unit_square();
    CHECK(sq.area() == doctest::Approx(4.0));
    CHECK(sq.centroid().x == doctest::Approx(0.0));
    CHECK(sq.centroid().y == doctest::Approx(0.0));

    PolygonChain tri({{0, 0}, {2, 0}, {0, 2}});
    CHECK(tri.area() == doctest::Approx(2.0));
    CHECK(tri.centroid().x == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("support and support point") {
    PolygonChain sq = unit_square();
    CHECK(sq.support({1, 0}) == doctest::Approx(1.0));
    double inv = 1.0 / std::sqrt(2.0);
    CHECK(sq.support({inv, inv}) == doctest::Approx(std::sqrt(2.0)));
    Vec2 sp = sq.support_point({1, 0}, 1e-9);
    CHECK(sp.x == doctest::Approx(1.0));
    CHECK(sp.y == doctest::Approx(0.0)); // midpoint of the right edge
}

TEST_CASE("clip against halfplane") {
    PolygonChain half = clip_halfplane(unit_square(), {1, 0}, 0.5);
    CHECK(half.area() == doctest::Approx(3.0));
    PolygonChain none = clip_halfplane(unit_square(), {1, 0}, -2.0);
    CHECK(none.empty());
}

TEST_CASE("polygon intersection area") {
    PolygonChain sq = unit_square();
    CHECK(polygon_intersection_area(sq, sq) == doctest::Approx(4.0));

    PolygonChain shifted = transform(sq, kIdentity, {1.0, 0.0});
    CHECK(polygon_intersection_area(sq, shifted) == doctest::Approx(2.0));

    // square minus four corner triangles: 8(sqrt2 - 1)
    CHECK(polygon_intersection_area(sq, rotated_square()) ==
          doctest::Approx(8.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-12));
}

TEST_CASE("intersection area properties") {
    auto gen = oracle::rng(31);
    for (int it = 0; it < 40; ++it) {
        PolygonChain p = random_convex(gen, 3 + static_cast<std::size_t>(gen() % 20));
        PolygonChain q = random_convex(gen, 3 + static_cast<std::size_t>(gen() % 20));
        double inter = polygon_intersection_area(p, q);
        CHECK(inter >= -1e-12);
        CHECK(inter <= std::min(p.area(), q.area()) + 1e-10);
        CHECK(inter == doctest::Approx(polygon_intersection_area(q, p)).epsilon(1e-9));
    }
}

TEST_CASE("convexity violation reporting") {
    std::vector<Vec2> bad = {{0, 0}, {2, 0}, {1, 0.1}, {0, 1}};
    auto idx = convexity_violation(bad, 1e-12);
    REQUIRE(idx.has_value());
    CHECK(*idx == 2);
    CHECK(!convexity_violation(unit_square().vertices, 1e-12).has_value());
}

TEST_CASE("halfplane intersection reproduces circumscribed polygons") {
    std::vector<HalfPlane> planes;
    for (const Vec2& u : uniform_directions(8)) planes.push_back({u, 1.0});
    PolygonChain oct = halfplane_intersection(planes);
    CHECK(oct.size() == 8);
    double expected = 8.0 * std::tan(oracle::kPi / 8.0);
    CHECK(oct.area() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("halfplane intersection drops redundant planes") {
    std::vector<HalfPlane> planes;
    for (const Vec2& u : uniform_directions(64)) planes.push_back({u, 1.0});
    planes[10].level = 5.0; // never binding
    PolygonChain hull = halfplane_intersection(planes);
    CHECK(hull.size() == 63);
    // the gap spans two angular steps, so those vertices sit farther out
    for (const Vec2& v : hull.vertices) CHECK(v.norm() <= 1.0 / std::cos(2.0 * oracle::kPi / 64) + 1e-12);
}

TEST_CASE("halfplane intersection detects empty input") {
    std::vector<HalfPlane> planes;
    for (const Vec2& u : uniform_directions(8)) planes.push_back({u, -1.0});
    CHECK_THROWS_AS(halfplane_intersection(planes), numeric_error);
}

TEST_CASE("hausdorff by support sampling") {
    PolygonChain sq = unit_square();
    CHECK(hausdorff_support(sq, sq) == doctest::Approx(0.0));
    CHECK(hausdorff_support(sq, scale(sq, 0.9)) ==
          doctest::Approx(0.1 * std::sqrt(2.0)).epsilon(1e-12));

    std::vector<HalfPlane> p1, p2;
    for (const Vec2& u : uniform_directions(256)) {
        p1.push_back({u, 1.0});
        p2.push_back({u, 0.8});
    }
    // circumscribed 256-gons: the gap is 0.2/cos(angle offset)
    CHECK(hausdorff_support(halfplane_intersection(p1), halfplane_intersection(p2)) ==
          doctest::Approx(0.2).epsilon(1e-4));
}

TEST_CASE("min width of the square") {
    CHECK(min_width(unit_square()) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("transform restores CCW after reflections") {
    const double reflect[4] = {-1, 0, 0, 1};
    PolygonChain r = transform(unit_square(), reflect, {0, 0});
    CHECK(r.area() == doctest::Approx(4.0));
    CHECK(!convexity_violation(r.vertices, 1e-12).has_value());
}

} // TEST_SUITE
