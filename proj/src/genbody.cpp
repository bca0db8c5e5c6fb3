#include "floatlab/genbody.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "floatlab/errors.hpp"
#include "floatlab/parallel.hpp"
#include "floatlab/rootfind.hpp"


namespace floatlab {

namespace {

// Distance from an interior origin point to the boundary along a unit ray.
double ray_exit(const PolygonChain& p, Vec2 origin, Vec2 dir) {
    double best = std::numeric_limits<double>::infinity();
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i];
        Vec2 e = v[(i + 1) % v.size()] - a;
        double den = dir.cross(e);
        if (std::abs(den) < 1e-300) continue;
        double s = (a - origin).cross(e) / den;
        double t = (a - origin).cross(dir) / den;
        if (s > 0.0 && t >= -1e-12 && t <= 1.0 + 1e-12) best = std::min(best, s);
    }
    if (!std::isfinite(best))
        throw numeric_error("ray_exit: ray does not leave the polygon (origin outside?)");
    return best;
}

void require_polygon(const PolygonChain& p, const char* op) {
    if (p.size() < 3 || p.area() <= 0.0)
        throw input_error(std::string(op) + ": need a nondegenerate polygon");
}

PolygonChain point_hull(Vec2 c) { return PolygonChain({{c.x, c.y}}); }

} // namespace

double hull_excess(const PolygonChain& p, Vec2 x) {
    double acc = 0.0;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i];
        Vec2 b = v[(i + 1) % v.size()];
        if ((b - a).cross(x - a) < 0.0) acc += 0.5 * std::abs((a - x).cross(b - x));
    }
    return acc;
}

GenBodyResult illumination_body(const PolygonChain& p, double delta, std::size_t rays) {
    require_polygon(p, "illumination_body");
    if (delta < 0.0) throw input_error("illumination_body: delta must be >= 0");
    GenBodyResult out;
    out.kind = GenBodyKind::illumination;
    out.parameter = delta;
    out.ray_count = rays;
    if (delta == 0.0) {
        out.hull = p;
        return out;
    }
    Vec2 center = p.centroid();
    double sc = 1.0 + p.circumradius();
    out.hull.vertices.resize(rays);
    auto dirs = uniform_directions(rays);
    parallel_for(rays, [&](std::size_t i) {
        Vec2 u = dirs[i];
        double lo = ray_exit(p, center, u);
        auto g = [&](double d) { return hull_excess(p, center + d * u) - delta; };
        double step = 0.5 * sc;
        double hi = lo + step;
        double ghi = g(hi);
        int guard = 0;
        while (ghi < 0.0) {
            lo = hi;
            step *= 2.0;
            hi += step;
            ghi = g(hi);
            if (++guard > 60)
                throw numeric_error("illumination_body: excess level not reached");
        }
        double d = brent_root(g, lo, hi, g(lo), ghi, 1e-11 * sc);
        out.hull.vertices[i] = center + d * u;
    });
    return out;
}

GenBodyResult convolution_body(const PolygonChain& p, double t, std::size_t rays) {
    require_polygon(p, "convolution_body");
    double sc = 1.0 + p.circumradius();
    const auto& v = p.vertices;
    bool symmetric = v.size() % 2 == 0;
    if (symmetric) {
        std::size_t half = v.size() / 2;
        for (std::size_t i = 0; i < half; ++i)
            if ((v[i] + v[i + half]).norm() > 1e-9 * sc) { symmetric = false; break; }
    }
    if (!symmetric)
        throw input_error("convolution_body: polygon must be symmetric about the origin");

    double area = p.area();
    if (!(t > 0.0)) throw input_error("convolution_body: t must be > 0");
    if (t > 0.5 * area * (1.0 + 1e-4))
        throw input_error("convolution_body: t exceeds |P|/2");
    double level = std::min(2.0 * t, area);

    GenBodyResult out;
    out.kind = GenBodyKind::convolution;
    out.parameter = t;
    out.ray_count = rays;
    if (level >= area) { // t == |P|/2 at resolution: overlap must be total
        out.hull = point_hull({0.0, 0.0});
        out.degenerate_point = true;
        return out;
    }

    // Edge halfplanes of p in angular order; p and p + x share normals, so the
    // overlap is a same-angle merge solved by the deque intersection in O(V).
    std::vector<HalfPlane> planes;
    planes.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Vec2 a = v[i];
        Vec2 e = v[(i + 1) % v.size()] - a;
        Vec2 nrm = Vec2{e.y, -e.x}.normalized();
        planes.push_back({nrm, a.dot(nrm)});
    }
    auto overlap_area = [&](Vec2 shift) {
        std::vector<HalfPlane> merged;
        merged.reserve(2 * planes.size());
        for (const HalfPlane& h : planes) {
            merged.push_back(h);
            merged.push_back({h.normal, h.level + h.normal.dot(shift)});
        }
        try {
            return halfplane_intersection(merged).area();
        } catch (const numeric_error&) {
            return 0.0;
        }
    };

    out.hull.vertices.resize(rays);
    auto dirs = uniform_directions(rays);
    parallel_for(rays, [&](std::size_t i) {
        Vec2 u = dirs[i];
        double rho = ray_exit(p, {0.0, 0.0}, u);
        std::vector<std::pair<double, double>> trace;
        auto f = [&](double s) {
            double overlap = overlap_area(2.0 * s * u);
            trace.emplace_back(s, overlap);
            return overlap - level;
        };
        double f0 = f(0.0);
        double frho = f(rho);
        double s = f0 <= 0.0 ? 0.0 : brent_root(f, 0.0, rho, f0, frho, 1e-10 * sc);
        std::sort(trace.begin(), trace.end());
        for (std::size_t j = 1; j < trace.size(); ++j)
            if (trace[j].second > trace[j - 1].second + 1e-9 * area)
                throw numeric_error("convolution_body: overlap not monotone along ray");
        out.hull.vertices[i] = s * u;
    });

    double rmax = 0.0;
    for (const Vec2& w : out.hull.vertices) rmax = std::max(rmax, w.norm());
    if (rmax <= 1e-7 * sc) {
        out.hull = point_hull({0.0, 0.0});
        out.degenerate_point = true;
    }
    return out;
}

double polar_area(const PolygonChain& p, Vec2 x) {
    require_polygon(p, "polar_area");
    const auto& v = p.vertices;
    double sc = 1.0 + p.circumradius();
    std::vector<Vec2> dual;
    dual.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i];
        Vec2 e = v[(i + 1) % v.size()] - a;
        Vec2 n = Vec2{e.y, -e.x}.normalized();
        double h = (a - x).dot(n);
        if (h <= 1e-12 * sc)
            throw input_error("polar_area: point must lie strictly inside the polygon");
        dual.push_back(n * (1.0 / h));
    }
    return PolygonChain(std::move(dual)).area();
}

GenBodyResult santalo_region(const PolygonChain& p, double t, std::size_t rays) {
    require_polygon(p, "santalo_region");
    if (!(t > 0.0)) throw input_error("santalo_region: t must be > 0");
    double sc = 1.0 + p.circumradius();

    // Polar-area minimizer by coordinate descent with golden-section lines.
    Vec2 center = p.centroid();
    double fc = polar_area(p, center);
    for (int sweep = 0; sweep < 200; ++sweep) {
        Vec2 prev = center;
        for (int axis = 0; axis < 2; ++axis) {
            Vec2 u = axis == 0 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
            double up = 0.999 * ray_exit(p, center, u);
            double dn = 0.999 * ray_exit(p, center, -u);
            double s = golden_min(
                [&](double ss) { return polar_area(p, center + ss * u); }, -dn, up,
                1e-11 * sc);
            center = center + s * u;
        }
        fc = polar_area(p, center);
        if ((center - prev).norm() < 1e-10 * sc) break;
    }

    GenBodyResult out;
    out.kind = GenBodyKind::santalo;
    out.parameter = t;
    out.ray_count = rays;
    double level = 1.0 / t;
    if (fc > level * (1.0 + 1e-4)) {
        out.empty = true;
        return out;
    }
    if (fc >= level) {
        out.hull = point_hull(center);
        out.degenerate_point = true;
        return out;
    }

    out.hull.vertices.resize(rays);
    auto dirs = uniform_directions(rays);
    parallel_for(rays, [&](std::size_t i) {
        Vec2 u = dirs[i];
        double rho = ray_exit(p, center, u);
        auto g = [&](double s) { return polar_area(p, center + s * u) - level; };
        double hi = 0.9 * rho;
        double ghi = g(hi);
        int guard = 0;
        while (ghi < 0.0) {
            hi = rho - 0.25 * (rho - hi);
            ghi = g(hi);
            if (++guard > 60)
                throw numeric_error("santalo_region: polar level not reached on ray");
        }
        double s = brent_root(g, 0.0, hi, fc - level, ghi, 1e-11 * sc);
        out.hull.vertices[i] = center + s * u;
    });

    double rmax = 0.0;
    for (const Vec2& w : out.hull.vertices) rmax = std::max(rmax, (w - center).norm());
    if (rmax <= 1e-7 * sc) {
        out.hull = point_hull(center);
        out.degenerate_point = true;
    }
    return out;
}

} // namespace floatlab
