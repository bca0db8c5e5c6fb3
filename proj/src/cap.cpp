#include "floatlab/cap.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "floatlab/errors.hpp"
#include "floatlab/rootfind.hpp"

namespace floatlab {

namespace {

constexpr double kPi = std::numbers::pi;

using boost::math::quadrature::gauss_kronrod;

double quad01(const std::function<double(double)>& f) {
    return gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 12, 1e-11);
}

double ball_cap(int n, double s) {
    if (s >= 1.0) return 0.0;
    if (n == 2) {
        if (s <= -1.0) return kPi;
        return std::acos(s) - s * std::sqrt(1.0 - s * s);
    }
    if (s <= -1.0) return 4.0 * kPi / 3.0;
    double h = 1.0 - s;
    return kPi * h * h * (2.0 + s) / 3.0;
}

bool is_axis_direction(const Vector& u, int* axis) {
    Eigen::Index best = 0;
    u.cwiseAbs().maxCoeff(&best);
    Vector e = Vector::Zero(u.size());
    e(best) = u(best) > 0 ? 1.0 : -1.0;
    if ((u - e).norm() < 1e-14) {
        *axis = static_cast<int>(best);
        return true;
    }
    return false;
}

// ---- generic 2D cap by quadrature of chord lengths -------------------------

struct Chord2D {
    const BodySpec& k;
    Vector u, w;       // unit direction and its perpendicular
    Vector g, bp, bm;  // centroid, argmax points for +u and -u
    double hplus, hminus, scale;
    mutable Vector buf{Vector(2)};

    Chord2D(const BodySpec& body, const Vector& dir, double hp, double hm)
        : k(body), u(dir), hplus(hp), hminus(hm) {
        w = Vector(2);
        w << -u(1), u(0);
        g = centroid(k);
        bp = boundary_point(k, u);
        bm = boundary_point(k, -u);
        scale = scale_radius(k);
    }

    // a point strictly inside K on the line {<x,u> = s}
    Vector seed(double s) const {
        double c0 = g.dot(u);
        if (s >= c0) return g + ((s - c0) / (hplus - c0)) * (bp - g);
        return g + ((s - c0) / (-hminus - c0)) * (bm - g);
    }

    double length(double s) const {
        Vector q0 = seed(s);
        auto margin = [&](double tau) {
            buf = q0 + tau * w;
            return inside_margin(k, buf);
        };
        double f0 = margin(0.0);
        if (f0 >= -1e-15) return 0.0;
        double hi = 3.0 * scale;
        double xtol = 1e-13 * (1.0 + scale);
        double right = brent_root(margin, 0.0, hi, f0, margin(hi), xtol);
        auto margin_neg = [&](double tau) { return margin(-tau); };
        double left = brent_root(margin_neg, 0.0, hi, f0, margin_neg(hi), xtol);
        return right + left;
    }
};

double cap2d_quadrature(const BodySpec& k, const Vector& u, double t,
                        double hplus, double hminus, double total) {
    Chord2D chord(k, u, hplus, hminus);
    if (hplus - t <= t + hminus) {
        double span = hplus - t;
        return quad01([&](double v) {
            return chord.length(hplus - span * v * v) * 2.0 * span * v;
        });
    }
    double span = t + hminus;
    double below = quad01([&](double v) {
        return chord.length(-hminus + span * v * v) * 2.0 * span * v;
    });
    return total - below;
}

// ---- 3D lp ball: axis-aligned sections -------------------------------------

double lp3d_axis_cap(double p, double t, double total) {
    if (t <= -1.0) return total;
    if (t >= 1.0) return 0.0;
    if (t < 0.0) return total - lp3d_axis_cap(p, -t, total);
    if (std::isinf(p)) return 4.0 * (1.0 - t); // cube slab
    double invp = std::isinf(p) ? 0.0 : 1.0 / p;
    double section0 = 4.0 * std::pow(std::tgamma(1.0 + invp), 2) / std::tgamma(1.0 + 2.0 * invp);
    double span = 1.0 - t;
    return quad01([&](double v) {
        double s = 1.0 - span * v * v;
        double sec = section0 * std::pow(1.0 - std::pow(s, p), 2.0 / p);
        return sec * 2.0 * span * v;
    });
}

// ---- 3D lp ball, general direction: stratified Monte Carlo -----------------

struct McField {
    std::vector<double> dots;   // <x,u> for samples inside K, unsorted
    double cell_vol = 0.0;
    double sigma_body = 0.0;    // stratified error bound from boundary cells
    int grid = 0;
};

McField mc_sample(double p, const Vector& u, const CapOptions& opt) {
    McField f;
    int g = std::max(8, opt.mc_grid);
    f.grid = g;
    double cell = 2.0 / g;
    f.cell_vol = cell * cell * cell;
    std::mt19937_64 rng(opt.seed);
    auto unif = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::size_t shell = 0;
    Vector x(3), c(3);
    for (int ix = 0; ix < g; ++ix)
        for (int iy = 0; iy < g; ++iy)
            for (int iz = 0; iz < g; ++iz) {
                x << -1.0 + cell * (ix + unif()), -1.0 + cell * (iy + unif()),
                    -1.0 + cell * (iz + unif());
                if (lp_norm(x, p) <= 1.0) f.dots.push_back(x.dot(u));
                c << -1.0 + cell * (ix + 0.5), -1.0 + cell * (iy + 0.5),
                    -1.0 + cell * (iz + 0.5);
                if (std::abs(lp_norm(c, p) - 1.0) <= 3.0 / g) ++shell;
            }
    f.sigma_body = f.cell_vol * std::sqrt(static_cast<double>(shell)) / 2.0;
    return f;
}

// ---- generic volume-tolerance root loop (Illinois false position) ----------

struct RootOut {
    double t;
    double residual;
    int iterations;
};

template <class F>
RootOut illinois_cut(F&& cap_fn, double lo, double hi, double delta, double tol,
                     int max_iter) {
    double flo = cap_fn(lo) - delta;
    double fhi = cap_fn(hi) - delta;
    int it = 2;
    if (std::abs(flo) <= tol) return {lo, flo, it};
    if (std::abs(fhi) <= tol) return {hi, fhi, it};
    int side = 0;
    while (it < max_iter) {
        double t = (lo * fhi - hi * flo) / (fhi - flo);
        if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
        double ft = cap_fn(t) - delta;
        ++it;
        if (std::abs(ft) <= tol) return {t, ft, it};
        if (ft > 0.0) {
            lo = t;
            flo = ft;
            if (side == 1) fhi *= 0.5;
            side = 1;
        } else {
            hi = t;
            fhi = ft;
            if (side == -1) flo *= 0.5;
            side = -1;
        }
        if (hi - lo <= 4e-16 * (1.0 + std::abs(lo) + std::abs(hi))) {
            double t2 = 0.5 * (lo + hi);
            double ft2 = cap_fn(t2) - delta;
            return {t2, ft2, it + 1};
        }
    }
    throw numeric_error("cut_level: no convergence after " + std::to_string(max_iter) +
                        " iterations; bracket [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
}

} // namespace

CapOptions& default_cap_options() {
    static CapOptions opts;
    return opts;
}

double inside_margin(const BodySpec& k, const Vector& x) {
    if (const auto* lp = k.as_lp_ball()) return lp_norm(x, lp->p) - 1.0;
    if (const auto* el = k.as_ellipsoid()) {
        Vector d = x - el->center;
        return std::sqrt(d.dot(el->shape_inv * d)) - 1.0;
    }
    if (const auto* poly = k.as_polygon()) {
        const auto& v = poly->chain.vertices;
        double worst = -std::numeric_limits<double>::infinity();
        Vec2 pt = detail::to_vec2(x);
        for (std::size_t i = 0; i < v.size(); ++i) {
            Vec2 a = v[i];
            Vec2 e = v[(i + 1) % v.size()] - a;
            worst = std::max(worst, -e.cross(pt - a) / e.norm());
        }
        return worst;
    }
    const auto* af = k.as_affine();
    return inside_margin(*af->inner, af->map_inv * (x - af->shift));
}

double cap_volume(const BodySpec& k, const Vector& u, double t, const CapOptions& opt) {
    int n = k.dimension();
    if (n != 2 && n != 3) throw input_error("cap_volume: dimension 2 or 3 only");
    if (u.size() != n) throw input_error("cap_volume: dimension mismatch");
    if (std::abs(u.norm() - 1.0) > 1e-12)
        throw input_error("cap_volume: direction must be a unit vector");

    if (const auto* af = k.as_affine()) {
        Vector w = af->map.transpose() * u;
        double nw = w.norm();
        return af->det_abs *
               cap_volume(*af->inner, w / nw, (t - af->shift.dot(u)) / nw, opt);
    }
    if (const auto* el = k.as_ellipsoid()) {
        Eigen::LLT<Matrix> llt(el->shape);
        Matrix l = llt.matrixL();
        Vector w = l.transpose() * u;
        double nw = w.norm();
        double scale_vol = std::sqrt(el->shape.determinant());
        return scale_vol * ball_cap(n, (t - el->center.dot(u)) / nw);
    }

    double total = volume(k);
    double hplus = detail::support_homog(k, u);
    double hminus = detail::support_homog(k, -u);
    if (t >= hplus) return 0.0;
    if (t <= -hminus) return total;

    if (const auto* poly = k.as_polygon())
        return clip_halfplane(poly->chain, detail::to_vec2(-u), -t).area();

    const auto* lp = k.as_lp_ball();
    if (lp->p == 2.0) return ball_cap(n, t);
    if (n == 2) {
        if (lp->p == 1.0 || std::isinf(lp->p)) {
            PolygonChain chain = polygonize(k, 4);
            return clip_halfplane(chain, detail::to_vec2(-u), -t).area();
        }
        return cap2d_quadrature(k, u, t, hplus, hminus, total);
    }
    int axis = 0;
    if (is_axis_direction(u, &axis)) return lp3d_axis_cap(lp->p, t, total);
    McField f = mc_sample(lp->p, u, opt);
    std::size_t count = 0;
    for (double d : f.dots)
        if (d >= t) ++count;
    return static_cast<double>(count) * f.cell_vol;
}

CutResult cut_level(const BodySpec& k, const Vector& u, double delta,
                    const CapOptions& opt) {
    int n = k.dimension();
    if (n != 2 && n != 3) throw input_error("cut_level: dimension 2 or 3 only");
    if (u.size() != n) throw input_error("cut_level: dimension mismatch");
    if (std::abs(u.norm() - 1.0) > 1e-12)
        throw input_error("cut_level: direction must be a unit vector");

    double total = volume(k);
    double tol = opt.tol_vol_rel * total;
    if (!(delta > 0.0 && delta < total))
        throw input_error("cut_level: delta out of (0, |K|)");

    double hplus = detail::support_homog(k, u);
    double hminus = detail::support_homog(k, -u);
    if (delta < tol) return {hplus, 0.0, tol, 0};
    if (delta > total - tol) return {-hminus, total, tol, 0};

    if (const auto* af = k.as_affine()) {
        Vector w = af->map.transpose() * u;
        double nw = w.norm();
        CutResult inner = cut_level(*af->inner, w / nw, delta / af->det_abs, opt);
        return {inner.level * nw + af->shift.dot(u), inner.cap_volume * af->det_abs,
                inner.volume_error * af->det_abs, inner.iterations};
    }
    if (const auto* el = k.as_ellipsoid()) {
        Eigen::LLT<Matrix> llt(el->shape);
        Matrix l = llt.matrixL();
        Vector w = l.transpose() * u;
        double nw = w.norm();
        double scale_vol = std::sqrt(el->shape.determinant());
        RootOut r = illinois_cut([&](double s) { return ball_cap(n, s); }, -1.0, 1.0,
                                 delta / scale_vol, tol / scale_vol, opt.max_iter);
        return {r.t * nw + el->center.dot(u), (delta / scale_vol + r.residual) * scale_vol,
                std::max(tol, std::abs(r.residual) * scale_vol), r.iterations};
    }

    const auto* lp = k.as_lp_ball();
    if (lp && n == 3 && lp->p != 2.0) {
        int axis = 0;
        if (!is_axis_direction(u, &axis)) {
            McField f = mc_sample(lp->p, u, opt);
            if (f.dots.empty()) throw numeric_error("cut_level: empty Monte Carlo sample");
            auto kth = static_cast<std::size_t>(
                std::clamp<long long>(std::llround(delta / f.cell_vol), 1,
                                      static_cast<long long>(f.dots.size())));
            std::nth_element(f.dots.begin(), f.dots.begin() + (kth - 1), f.dots.end(),
                             std::greater<double>());
            double level = f.dots[kth - 1];
            double achieved = static_cast<double>(kth) * f.cell_vol;
            double err = 3.0 * f.sigma_body + f.cell_vol;
            return {level, achieved, err, 0};
        }
    }

    RootOut r = illinois_cut([&](double t) { return cap_volume(k, u, t, opt); },
                             -hminus, hplus, delta, tol, opt.max_iter);
    return {r.t, delta + r.residual, std::max(tol, std::abs(r.residual)), r.iterations};
}

} // namespace floatlab
