#include "floatlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "floatlab/errors.hpp"

namespace floatlab {

double PolygonChain::area() const {
    if (vertices.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % vertices.size()];
        s += a.cross(b);
    }
    return 0.5 * std::abs(s);
}

Vec2 PolygonChain::centroid() const {
    if (vertices.empty()) return {0.0, 0.0};
    double s = 0.0;
    Vec2 acc{0.0, 0.0};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % vertices.size()];
        double w = a.cross(b);
        s += w;
        acc = acc + (a + b) * w;
    }
    if (std::abs(s) < 1e-300) { // degenerate: vertex mean
        Vec2 m{0.0, 0.0};
        for (const Vec2& v : vertices) m = m + v;
        return m * (1.0 / static_cast<double>(vertices.size()));
    }
    return acc * (1.0 / (3.0 * s));
}

double PolygonChain::support(Vec2 u) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : vertices) best = std::max(best, v.dot(u));
    return best;
}

Vec2 PolygonChain::support_point(Vec2 u, double tol) const {
    double best = support(u);
    Vec2 acc{0.0, 0.0};
    std::size_t count = 0;
    for (const Vec2& v : vertices) {
        if (v.dot(u) >= best - tol) {
            acc = acc + v;
            ++count;
        }
    }
    return acc * (1.0 / static_cast<double>(count));
}

bool PolygonChain::contains(Vec2 p, double tol) const {
    if (vertices.size() < 3) return false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % vertices.size()];
        Vec2 e = b - a;
        if (e.cross(p - a) < -tol * e.norm()) return false;
    }
    return true;
}

double PolygonChain::circumradius() const {
    double r = 0.0;
    for (const Vec2& v : vertices) r = std::max(r, v.norm());
    return r;
}

std::optional<std::size_t> convexity_violation(const std::vector<Vec2>& v, double tol) {
    if (v.size() < 3) return 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        const Vec2& c = v[(i + 2) % v.size()];
        if ((b - a).cross(c - b) < -tol) return (i + 1) % v.size();
    }
    return std::nullopt;
}

PolygonChain clip_halfplane(const PolygonChain& p, Vec2 n, double c) {
    PolygonChain out;
    const auto& v = p.vertices;
    if (v.empty()) return out;
    out.vertices.reserve(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        double da = a.dot(n) - c;
        double db = b.dot(n) - c;
        if (da <= 0.0) out.vertices.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            double t = da / (da - db);
            out.vertices.push_back(a + (b - a) * t);
        }
    }
    return out;
}

PolygonChain polygon_intersection(const PolygonChain& p, const PolygonChain& q) {
    PolygonChain cur = p;
    const auto& v = q.vertices;
    for (std::size_t i = 0; i < v.size() && !cur.empty(); ++i) {
        Vec2 a = v[i];
        Vec2 b = v[(i + 1) % v.size()];
        Vec2 d = b - a;
        Vec2 n{d.y, -d.x}; // outward for CCW q
        cur = clip_halfplane(cur, n, a.dot(n));
    }
    return cur;
}

double polygon_intersection_area(const PolygonChain& p, const PolygonChain& q) {
    return polygon_intersection(p, q).area();
}

PolygonChain transform(const PolygonChain& p, const double m[4], Vec2 shift) {
    PolygonChain out;
    out.vertices.reserve(p.size());
    for (const Vec2& v : p.vertices) {
        out.vertices.push_back({m[0] * v.x + m[1] * v.y + shift.x,
                                m[2] * v.x + m[3] * v.y + shift.y});
    }
    double det = m[0] * m[3] - m[1] * m[2];
    if (det < 0.0) std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

PolygonChain scale(const PolygonChain& p, double factor) {
    const double m[4] = {factor, 0.0, 0.0, factor};
    return transform(p, m, {0.0, 0.0});
}

double hausdorff_support(const PolygonChain& p, const PolygonChain& q,
                         std::size_t directions) {
    if (p.empty() || q.empty()) throw input_error("hausdorff: empty polygon");
    double worst = 0.0;
    for (const Vec2& u : uniform_directions(directions)) {
        worst = std::max(worst, std::abs(p.support(u) - q.support(u)));
    }
    return worst;
}

double min_width(const PolygonChain& p, std::size_t directions) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& u : uniform_directions(directions / 2)) {
        best = std::min(best, p.support(u) + p.support(-u));
    }
    return best;
}

namespace {

Vec2 line_intersect(const HalfPlane& a, const HalfPlane& b) {
    double det = a.normal.cross(b.normal);
    return {(a.level * b.normal.y - b.level * a.normal.y) / det,
            (a.normal.x * b.level - b.normal.x * a.level) / det};
}

bool violates(Vec2 pt, const HalfPlane& h, double eps) {
    return pt.dot(h.normal) > h.level + eps;
}

} // namespace

PolygonChain halfplane_intersection(const std::vector<HalfPlane>& planes,
                                    double parallel_tol) {
    if (planes.size() < 3) throw input_error("halfplane_intersection: need >= 3 planes");
    double level_scale = 0.0;
    for (const auto& h : planes) level_scale = std::max(level_scale, std::abs(h.level));
    const double eps = 1e-12 * (1.0 + level_scale);

    std::deque<HalfPlane> dq;
    for (const HalfPlane& h : planes) {
        while (dq.size() >= 2 &&
               violates(line_intersect(dq[dq.size() - 1], dq[dq.size() - 2]), h, eps))
            dq.pop_back();
        while (dq.size() >= 2 && violates(line_intersect(dq[0], dq[1]), h, eps))
            dq.pop_front();
        if (!dq.empty()) {
            double cr = dq.back().normal.cross(h.normal);
            if (std::abs(cr) < parallel_tol) {
                if (dq.back().normal.dot(h.normal) > 0.0) {
                    // same direction: keep the tighter constraint
                    if (h.level < dq.back().level) dq.back() = h;
                    continue;
                }
                if (h.level + dq.back().level < -eps)
                    throw numeric_error("halfplane_intersection: empty intersection");
            }
        }
        dq.push_back(h);
    }
    while (dq.size() >= 3 &&
           violates(line_intersect(dq[dq.size() - 1], dq[dq.size() - 2]), dq[0], eps))
        dq.pop_back();
    while (dq.size() >= 3 && violates(line_intersect(dq[0], dq[1]), dq.back(), eps))
        dq.pop_front();

    if (dq.size() < 3)
        throw numeric_error("halfplane_intersection: empty or degenerate intersection");

    PolygonChain out;
    out.vertices.reserve(dq.size());
    for (std::size_t i = 0; i < dq.size(); ++i)
        out.vertices.push_back(line_intersect(dq[i], dq[(i + 1) % dq.size()]));
    return out;
}

std::vector<Vec2> uniform_directions(std::size_t m) {
    std::vector<Vec2> dirs;
    dirs.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        dirs.push_back({std::cos(a), std::sin(a)});
    }
    return dirs;
}

} // namespace floatlab
