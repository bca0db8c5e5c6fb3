#include <cmath>

#include "doctest.h"
#include "floatlab/body.hpp"
#include "floatlab/cap.hpp"
#include "floatlab/errors.hpp"
#include "oracles.hpp"

using namespace floatlab;

namespace {

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

Vector vec3(double x, double y, double z) {
    Vector v(3);
    v << x, y, z;
    return v;
}

Vector unit(Vector v) { return v / v.norm(); }

BodySpec square() {
    return BodySpec::polygon(PolygonChain({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}));
}

} // namespace

TEST_SUITE("cap") {

TEST_CASE("slab and half-disk caps") {
    CHECK(cap_volume(square(), vec2(1, 0), 0.5) == doctest::Approx(1.0));
    CHECK(cap_volume(BodySpec::lp_ball(2, 2.0), vec2(0, 1), 0.0) ==
          doctest::Approx(oracle::kPi / 2.0));
}

TEST_CASE("disk cap at the analytic root") {
    double t = oracle::disk_cut_root(0.2);
    CHECK(cap_volume(BodySpec::lp_ball(2, 2.0), vec2(0, 1), t) ==
          doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("caps clamp outside the support range") {
    BodySpec disk = BodySpec::lp_ball(2, 2.0);
    CHECK(cap_volume(disk, vec2(1, 0), 1.5) == 0.0);
    CHECK(cap_volume(disk, vec2(1, 0), -1.5) == doctest::Approx(oracle::kPi));
}

TEST_CASE("cut level on the square") {
    CutResult axis = cut_level(square(), vec2(1, 0), 0.5);
    CHECK(axis.level == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(axis.cap_volume == doctest::Approx(0.5).epsilon(1e-8));

    // corner triangle (sqrt2 - t)^2 = delta
    CutResult diag = cut_level(square(), unit(vec2(1, 1)), 0.5);
    CHECK(diag.level == doctest::Approx(std::sqrt(2.0) - std::sqrt(0.5)).epsilon(1e-9));
    CHECK(diag.iterations > 0);
}

TEST_CASE("cut level on the disk") {
    CutResult cut = cut_level(BodySpec::lp_ball(2, 2.0), unit(vec2(0.3, -0.8)), 0.2);
    CHECK(cut.level == doctest::Approx(oracle::disk_cut_root(0.2)).epsilon(1e-9));
}

TEST_CASE("degenerate caps return support endpoints") {
    BodySpec disk = BodySpec::lp_ball(2, 2.0);
    CutResult tiny = cut_level(disk, vec2(1, 0), 1e-13);
    CHECK(tiny.level == doctest::Approx(1.0));
    CHECK(tiny.iterations == 0);
    CutResult full = cut_level(disk, vec2(1, 0), oracle::kPi - 1e-13);
    CHECK(full.level == doctest::Approx(-1.0));
}

TEST_CASE("cut level domain errors") {
    BodySpec disk = BodySpec::lp_ball(2, 2.0);
    CHECK_THROWS_AS(cut_level(disk, vec2(1, 0), 0.0), input_error);
    CHECK_THROWS_AS(cut_level(disk, vec2(1, 0), -1.0), input_error);
    CHECK_THROWS_AS(cut_level(disk, vec2(1, 0), oracle::kPi * (1.0 + 1e-12)), input_error);
    CHECK_THROWS_AS(cut_level(disk, vec2(2, 0), 0.1), input_error); // non-unit
}

TEST_CASE("solver failure carries the bracket") {
    CapOptions opt;
    opt.max_iter = 2;
    CHECK_THROWS_WITH_AS(cut_level(square(), vec2(1, 0), 0.5, opt),
                         doctest::Contains("bracket"), numeric_error);
}

TEST_CASE("round trip cap(cut(delta)) = delta") {
    auto gen = oracle::rng(404);
    std::vector<BodySpec> bodies;
    bodies.push_back(square());
    bodies.push_back(BodySpec::lp_ball(2, 2.0));
    bodies.push_back(BodySpec::lp_ball(2, 4.0));
    bodies.push_back(BodySpec::lp_ball(2, 1.5));
    Matrix t(2, 2);
    t << 1.4, 0.2, -0.3, 0.8;
    bodies.push_back(BodySpec::affine(BodySpec::lp_ball(2, 4.0), t, vec2(0.4, -0.1)));
    for (const auto& k : bodies) {
        double total = volume(k);
        for (int it = 0; it < 40; ++it) {
            Vector u = unit(vec2(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1)));
            double delta = oracle::uniform(gen, 0.01, 0.99) * total;
            CutResult cut = cut_level(k, u, delta);
            CHECK(std::abs(cap_volume(k, u, cut.level) - delta) <=
                  std::max(cut.volume_error, 2e-10 * total));
        }
    }
}

TEST_CASE("cap volume is nonincreasing in t") {
    auto gen = oracle::rng(505);
    std::vector<BodySpec> bodies;
    bodies.push_back(square());
    bodies.push_back(BodySpec::lp_ball(2, 3.0));
    for (const auto& k : bodies) {
        for (int it = 0; it < 100; ++it) {
            Vector u = unit(vec2(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1)));
            double hplus = support(k, u);
            double hminus = support(k, -u);
            double t1 = oracle::uniform(gen, -hminus, hplus);
            double t2 = oracle::uniform(gen, -hminus, hplus);
            if (t1 > t2) std::swap(t1, t2);
            double c1 = cap_volume(k, u, t1);
            double c2 = cap_volume(k, u, t2);
            CHECK(c1 >= c2 - 1e-10);
            if (t2 - t1 > 1e-3) CHECK(c1 > c2 - 1e-10); // strict inside the range
        }
    }
}

TEST_CASE("boundary values of the cap") {
    std::vector<BodySpec> bodies;
    bodies.push_back(square());
    bodies.push_back(BodySpec::lp_ball(2, 4.0));
    Vector u = unit(vec2(0.6, 0.4));
    for (const auto& k : bodies) {
        double total = volume(k);
        CHECK(cap_volume(k, u, -support(k, -u)) == doctest::Approx(total).epsilon(1e-9));
        CHECK(cap_volume(k, u, support(k, u)) == doctest::Approx(0.0));
    }
}

TEST_CASE("affine consistency of caps") {
    auto gen = oracle::rng(606);
    std::vector<BodySpec> bodies;
    bodies.push_back(square());
    bodies.push_back(BodySpec::lp_ball(2, 2.0));
    bodies.push_back(BodySpec::lp_ball(2, 4.0));
    for (const auto& k : bodies) {
        for (int it = 0; it < 10; ++it) {
            Matrix t(2, 2);
            t << oracle::uniform(gen, -1.5, 1.5), oracle::uniform(gen, -1.5, 1.5),
                oracle::uniform(gen, -1.5, 1.5), oracle::uniform(gen, -1.5, 1.5);
            if (std::abs(t.determinant()) < 0.3) continue;
            Vector shift = vec2(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1));
            BodySpec mapped = BodySpec::affine(k, t, shift);

            Vector u = unit(vec2(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1)));
            double level = oracle::uniform(gen, -0.5, 0.5) * support(k, u);
            // halfspace {<x,u> >= level} maps to {<y,w> >= level + <shift,w>}, w = T^{-T}u
            Vector w = t.inverse().transpose() * u;
            double nw = w.norm();
            Vector u2 = w / nw;
            double level2 = (level + shift.dot(w)) / nw;
            CHECK(cap_volume(mapped, u2, level2) ==
                  doctest::Approx(std::abs(t.determinant()) * cap_volume(k, u, level))
                      .epsilon(1e-8));
        }
    }
}

TEST_CASE("lp chord quadrature against polygon clipping") {
    BodySpec b4 = BodySpec::lp_ball(2, 4.0);
    BodySpec fine = BodySpec::polygon(polygonize(b4, 16384));
    auto gen = oracle::rng(707);
    for (int it = 0; it < 12; ++it) {
        Vector u = unit(vec2(oracle::uniform(gen, -1, 1), oracle::uniform(gen, -1, 1)));
        double t = oracle::uniform(gen, -0.8, 0.95);
        CHECK(cap_volume(b4, u, t) ==
              doctest::Approx(cap_volume(fine, u, t)).epsilon(2e-5));
    }
}

TEST_CASE("3D ball and ellipsoid caps") {
    BodySpec ball = BodySpec::lp_ball(3, 2.0);
    CHECK(cap_volume(ball, vec3(0, 0, 1), 0.0) == doctest::Approx(2.0 * oracle::kPi / 3.0));
    CHECK(cap_volume(ball, unit(vec3(1, 1, 1)), 0.3) ==
          doctest::Approx(oracle::ball3_cap(0.3)).epsilon(1e-12));

    Matrix a = Matrix::Identity(3, 3);
    a(0, 0) = 4.0; // semi-axes (2,1,1)
    BodySpec ell = BodySpec::ellipsoid(a, Vector::Zero(3));
    CHECK(cap_volume(ell, vec3(0, 0, 1), 0.3) ==
          doctest::Approx(2.0 * oracle::ball3_cap(0.3)).epsilon(1e-12));
    CutResult cut = cut_level(ell, vec3(0, 0, 1), 0.5);
    CHECK(cut.level == doctest::Approx(oracle::ball3_cut_root(0.25)).epsilon(1e-9));
}

TEST_CASE("3D lp axis sections by quadrature") {
    BodySpec b43 = BodySpec::lp_ball(3, 4.0);
    double total = volume(b43);
    CHECK(cap_volume(b43, vec3(0, 0, 1), 0.0) == doctest::Approx(total / 2.0).epsilon(1e-9));
    double t = 0.4;
    CHECK(cap_volume(b43, vec3(0, 0, 1), t) + cap_volume(b43, vec3(0, 0, 1), -t) ==
          doctest::Approx(total).epsilon(1e-9));
    CutResult cut = cut_level(b43, vec3(1, 0, 0), 0.7);
    CHECK(std::abs(cap_volume(b43, vec3(1, 0, 0), cut.level) - 0.7) <= cut.volume_error);
}

TEST_CASE("3D Monte Carlo path stays within its error bound") {
    // p nudged off 2 forces the Monte Carlo path; the ball cap is the oracle
    BodySpec nearly_ball = BodySpec::lp_ball(3, 2.0 + 1e-9);
    Vector u = unit(vec3(1, 1, 1));
    double est = cap_volume(nearly_ball, u, 0.3);
    CHECK(std::abs(est - oracle::ball3_cap(0.3)) <= 0.02);

    CutResult cut = cut_level(nearly_ball, u, 0.5);
    CHECK(cut.volume_error > 0.0);
    CHECK(std::abs(cut.level - oracle::ball3_cut_root(0.5)) <= 0.02);
    CHECK(std::abs(cut.cap_volume - 0.5) <= cut.volume_error);

    // deterministic for a fixed seed
    CutResult again = cut_level(nearly_ball, u, 0.5);
    CHECK(cut.level == again.level);
    CapOptions other;
    other.seed = 999;
    CutResult reseeded = cut_level(nearly_ball, u, 0.5, other);
    CHECK(std::abs(reseeded.level - oracle::ball3_cut_root(0.5)) <= 0.02);
}

} // TEST_SUITE
