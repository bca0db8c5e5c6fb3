// Independent test oracles: closed forms and finite differences kept apart
// from the library code paths they check.
#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// ---- unit disk caps ---------------------------------------------------------

// area of {x in B^2_2 : <x,u> >= t}
inline double disk_cap(double t) {
    if (t >= 1.0) return 0.0;
    if (t <= -1.0) return kPi;
    return std::acos(t) - t * std::sqrt(1.0 - t * t);
}

// root of disk_cap(t) = delta by bisection
inline double disk_cut_root(double delta) {
    double lo = -1.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (disk_cap(mid) > delta ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// unit 3-ball cap volume and its inverse
inline double ball3_cap(double t) {
    if (t >= 1.0) return 0.0;
    if (t <= -1.0) return 4.0 * kPi / 3.0;
    double h = 1.0 - t;
    return kPi * h * h * (2.0 + t) / 3.0;
}

inline double ball3_cut_root(double delta) {
    double lo = -1.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (ball3_cap(mid) > delta ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// c_n at n = 2, direct evaluation of 2 (|B^1_2|/3)^{2/3}
inline double c2() { return 2.0 * std::pow(2.0 / 3.0, 2.0 / 3.0); }

// limit-lemma ratio for the unit disk at x = (0,1):
// c_2 (1 - t(delta)^2) / (2 delta^{2/3})
inline double disk_limit_ratio(double delta) {
    double t = disk_cut_root(delta);
    return c2() * (1.0 - t * t) / (2.0 * std::pow(delta, 2.0 / 3.0));
}

// same for the (2,1) ellipse at (2,0): <x,N> = 2 and |det T| = 2
inline double ellipse21_limit_ratio(double delta) {
    double t = disk_cut_root(delta / 2.0);
    return c2() * (1.0 - t * t) / std::pow(delta, 2.0 / 3.0);
}

// ---- planar lp-ball curvature ----------------------------------------------

// implicit-curve curvature (f_xx f_y^2 - 2 f_xy f_x f_y + f_yy f_x^2)/|∇f|^3
// for f = |x|^p + |y|^p - 1; valid away from the axes
inline double lp_curvature_implicit(double p, double x, double y) {
    double ax = std::abs(x), ay = std::abs(y);
    if (ax < 1e-12 || ay < 1e-12)
        throw std::invalid_argument("implicit oracle needs coordinates away from 0");
    double fx = p * std::pow(ax, p - 1.0) * (x > 0 ? 1.0 : -1.0);
    double fy = p * std::pow(ay, p - 1.0) * (y > 0 ? 1.0 : -1.0);
    double fxx = p * (p - 1.0) * std::pow(ax, p - 2.0);
    double fyy = p * (p - 1.0) * std::pow(ay, p - 2.0);
    double grad = std::hypot(fx, fy);
    return std::abs(fxx * fy * fy + fyy * fx * fx) / (grad * grad * grad);
}

// finite-difference curvature: central differences of the boundary graph over
// the tangent line at (x, y), step h = 1e-4 * local scale
inline double lp_curvature_fd(double p, double x, double y) {
    double ax = std::abs(x), ay = std::abs(y);
    double gx = p * std::pow(ax, p - 1.0) * (x > 0 ? 1.0 : -1.0);
    double gy = p * std::pow(ay, p - 1.0) * (y > 0 ? 1.0 : -1.0);
    double gn = std::hypot(gx, gy);
    double nx = gx / gn, ny = gy / gn; // outward normal
    double tx = -ny, ty = nx;          // tangent

    auto depth = [&](double s) {
        // solve |q(w)|_p = 1 for q(w) = (x,y) + s*T - w*N
        auto f = [&](double w) {
            double qx = x + s * tx - w * nx;
            double qy = y + s * ty - w * ny;
            return std::pow(std::abs(qx), p) + std::pow(std::abs(qy), p) - 1.0;
        };
        double lo = -8.0 * s * s, hi = 8.0 * s * s + 1e-9;
        double flo = f(lo), fhi = f(hi);
        int guard = 0;
        while (flo < 0.0) { lo *= 2.0; flo = f(lo); if (++guard > 60) break; }
        guard = 0;
        while (fhi > 0.0) { hi *= 2.0; fhi = f(hi); if (++guard > 60) break; }
        for (int i = 0; i < 120; ++i) {
            double mid = 0.5 * (lo + hi);
            (f(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    double h = 1e-4;
    return (depth(h) + depth(-h)) / (h * h);
}

// boundary point of B^2_p at polar angle theta
inline void lp_boundary(double p, double theta, double* x, double* y) {
    double c = std::cos(theta), s = std::sin(theta);
    double r = std::pow(std::pow(std::abs(c), p) + std::pow(std::abs(s), p), -1.0 / p);
    *x = r * c;
    *y = r * s;
}

// ---- generalized-body disk closed forms -------------------------------------

// hull excess of an exterior point at distance d from a unit disk
inline double disk_hull_excess(double d) {
    return std::sqrt(d * d - 1.0) - std::acos(1.0 / d);
}

inline double disk_illumination_root(double delta) {
    double lo = 1.0 + 1e-12, hi = 4.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (disk_hull_excess(mid) < delta ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// santalo radius for the unit disk: polar area pi/(1-r^2)^{3/2} = 1/t
inline double disk_santalo_root(double t) {
    double v = std::pow(kPi * t, 2.0 / 3.0);
    return std::sqrt(std::max(0.0, 1.0 - v));
}

// polar area of the unit disk about (d, 0)
inline double disk_polar_area(double d) { return kPi / std::pow(1.0 - d * d, 1.5); }

// ---- rng helpers -------------------------------------------------------------

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
}

} // namespace oracle
