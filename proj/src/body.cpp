#include "floatlab/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_unit(const Vector& u) {
    if (std::abs(u.norm() - 1.0) > 1e-12)
        throw input_error("direction must be a unit vector");
}

void require_dim(const BodySpec& k, const Vector& x, const char* what) {
    if (x.size() != k.dimension())
        throw input_error(std::string(what) + ": dimension mismatch");
}

double dual_exponent(double p) { return p / (p - 1.0); }

} // namespace

namespace detail {

Vec2 to_vec2(const Vector& v) { return {v(0), v(1)}; }

Vector to_vector(Vec2 v) {
    Vector out(2);
    out << v.x, v.y;
    return out;
}

double support_homog(const BodySpec& k, const Vector& w) {
    if (const auto* poly = k.as_polygon()) {
        return poly->chain.support(to_vec2(w));
    }
    if (const auto* lp = k.as_lp_ball()) {
        if (lp->p == 1.0) return w.cwiseAbs().maxCoeff();
        if (std::isinf(lp->p)) return w.cwiseAbs().sum();
        return lp_norm(w, lp->p / (lp->p - 1.0));
    }
    if (const auto* el = k.as_ellipsoid()) {
        return el->center.dot(w) + std::sqrt(w.dot(el->shape * w));
    }
    const auto* af = k.as_affine();
    return support_homog(*af->inner, af->map.transpose() * w) + af->shift.dot(w);
}

} // namespace detail

double lp_norm(const Vector& x, double p) {
    if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
    if (p == 1.0) return x.cwiseAbs().sum();
    if (p == 2.0) return x.norm();
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
    return std::pow(s, 1.0 / p);
}

BodySpec BodySpec::polygon(PolygonChain chain) {
    auto& v = chain.vertices;
    if (v.size() < 3) throw input_error("polygon: need at least 3 vertices");
    double sc = chain.circumradius();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if ((v[(i + 1) % v.size()] - v[i]).norm() < 1e-12 * (1.0 + sc))
            throw input_error("polygon: duplicate vertex at index " + std::to_string(i));
    }
    // Orientation-agnostic convexity: all turn signs must agree.
    double tol = 1e-9 * (1.0 + sc) * (1.0 + sc);
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        total += v[i].cross(v[(i + 1) % v.size()]);
    if (std::abs(total) < tol) throw input_error("polygon: degenerate (area 0)");
    double orient = total > 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        const Vec2& c = v[(i + 2) % v.size()];
        if (orient * (b - a).cross(c - b) < -tol)
            throw input_error("polygon: convexity violation at vertex index " +
                              std::to_string((i + 1) % v.size()));
    }
    if (orient < 0.0) std::reverse(v.begin(), v.end());
    return BodySpec(PolygonBody{std::move(chain)}, 2);
}

BodySpec BodySpec::lp_ball(int n, double p) {
    if (n < 2) throw input_error("lp_ball: dimension must be >= 2");
    if (!(p >= 1.0)) throw input_error("lp_ball: p must be >= 1");
    return BodySpec(LpBall{n, p}, n);
}

BodySpec BodySpec::ellipsoid(Matrix shape, Vector center) {
    if (shape.rows() != shape.cols() || shape.rows() != center.size() || center.size() < 2)
        throw input_error("ellipsoid: shape/center dimensions inconsistent");
    if (!shape.isApprox(shape.transpose(), 1e-12))
        throw input_error("ellipsoid: shape matrix must be symmetric");
    Eigen::LLT<Matrix> llt(shape);
    if (llt.info() != Eigen::Success)
        throw input_error("ellipsoid: shape matrix must be positive definite");
    Matrix inv = llt.solve(Matrix::Identity(shape.rows(), shape.cols()));
    int dim = static_cast<int>(center.size());
    return BodySpec(EllipsoidBody{std::move(shape), std::move(inv), std::move(center)}, dim);
}

BodySpec BodySpec::affine(BodySpec inner, Matrix map, Vector shift) {
    int dim = inner.dimension();
    if (map.rows() != dim || map.cols() != dim || shift.size() != dim)
        throw input_error("affine: map/shift dimensions inconsistent");
    Eigen::PartialPivLU<Matrix> lu(map);
    double det = lu.determinant();
    double sc = map.cwiseAbs().maxCoeff();
    if (std::abs(det) <= 1e-14 * std::pow(std::max(sc, 1e-30), dim))
        throw input_error("affine: map is singular");
    AffineBody body;
    body.inner = std::make_shared<BodySpec>(std::move(inner));
    body.map = std::move(map);
    body.map_inv = lu.inverse();
    body.shift = std::move(shift);
    body.det_abs = std::abs(det);
    return BodySpec(std::move(body), dim);
}

double support(const BodySpec& k, const Vector& u) {
    require_dim(k, u, "support");
    require_unit(u);
    return detail::support_homog(k, u);
}

double scale_radius(const BodySpec& k) {
    int n = k.dimension();
    double r = 0.0;
    Vector e = Vector::Zero(n);
    for (int i = 0; i < n; ++i) {
        e(i) = 1.0;
        r = std::max({r, detail::support_homog(k, e), detail::support_homog(k, -e)});
        e(i) = 0.0;
    }
    return r;
}

bool contains(const BodySpec& k, const Vector& x) {
    require_dim(k, x, "contains");
    if (const auto* poly = k.as_polygon()) {
        double tol = 1e-12 * (1.0 + poly->chain.circumradius());
        return poly->chain.contains(detail::to_vec2(x), tol);
    }
    if (const auto* lp = k.as_lp_ball()) {
        return lp_norm(x, lp->p) <= 1.0 + 1e-12;
    }
    if (const auto* el = k.as_ellipsoid()) {
        Vector d = x - el->center;
        return d.dot(el->shape_inv * d) <= 1.0 + 1e-12;
    }
    const auto* af = k.as_affine();
    return contains(*af->inner, af->map_inv * (x - af->shift));
}

Vector boundary_point(const BodySpec& k, const Vector& u) {
    require_dim(k, u, "boundary_point");
    require_unit(u);
    if (const auto* poly = k.as_polygon()) {
        double tol = 1e-9 * (1.0 + poly->chain.circumradius());
        return detail::to_vector(poly->chain.support_point(detail::to_vec2(u), tol));
    }
    if (const auto* lp = k.as_lp_ball()) {
        int n = lp->n;
        Vector x(n);
        if (std::isinf(lp->p)) {
            for (int i = 0; i < n; ++i) x(i) = u(i) > 0 ? 1.0 : (u(i) < 0 ? -1.0 : 0.0);
            return x;
        }
        if (lp->p == 1.0) {
            double best = u.cwiseAbs().maxCoeff();
            x.setZero();
            int ties = 0;
            for (int i = 0; i < n; ++i)
                if (std::abs(u(i)) >= best - 1e-12) ++ties;
            for (int i = 0; i < n; ++i)
                if (std::abs(u(i)) >= best - 1e-12)
                    x(i) = (u(i) > 0 ? 1.0 : -1.0) / static_cast<double>(ties);
            return x;
        }
        double q = dual_exponent(lp->p);
        double nq = lp_norm(u, q);
        for (int i = 0; i < n; ++i) {
            double t = std::pow(std::abs(u(i)) / nq, q - 1.0);
            x(i) = u(i) >= 0 ? t : -t;
        }
        return x;
    }
    if (const auto* el = k.as_ellipsoid()) {
        Vector au = el->shape * u;
        return el->center + au / std::sqrt(u.dot(au));
    }
    const auto* af = k.as_affine();
    Vector w = af->map.transpose() * u;
    return af->map * boundary_point(*af->inner, w.normalized()) + af->shift;
}

namespace {

void require_on_boundary(const BodySpec& k, const Vector& x) {
    double tol = 1e-9 * (1.0 + x.norm());
    if (const auto* lp = k.as_lp_ball()) {
        if (std::abs(lp_norm(x, lp->p) - 1.0) > tol)
            throw input_error("point is not on the boundary");
        return;
    }
    if (const auto* el = k.as_ellipsoid()) {
        Vector d = x - el->center;
        if (std::abs(std::sqrt(d.dot(el->shape_inv * d)) - 1.0) > tol)
            throw input_error("point is not on the boundary");
        return;
    }
    if (const auto* af = k.as_affine()) {
        require_on_boundary(*af->inner, af->map_inv * (x - af->shift));
        return;
    }
}

} // namespace

Vector normal_at(const BodySpec& k, const Vector& x) {
    require_dim(k, x, "normal_at");
    if (const auto* poly = k.as_polygon()) {
        const auto& v = poly->chain.vertices;
        double sc = 1.0 + poly->chain.circumradius();
        double tol = 1e-9 * sc;
        Vec2 p = detail::to_vec2(x);
        for (std::size_t i = 0; i < v.size(); ++i) {
            Vec2 a = v[i];
            Vec2 b = v[(i + 1) % v.size()];
            Vec2 e = b - a;
            double len = e.norm();
            double along = (p - a).dot(e) / len;
            double off = std::abs(e.cross(p - a)) / len;
            if (off > tol || along < -tol || along > len + tol) continue;
            if (along < tol || along > len - tol)
                throw input_error("normal_at: point is a polygon vertex (ambiguous normal)");
            return detail::to_vector(Vec2{e.y, -e.x}.normalized());
        }
        throw input_error("normal_at: point is not on the boundary");
    }
    if (const auto* lp = k.as_lp_ball()) {
        require_on_boundary(k, x);
        int n = lp->n;
        Vector g(n);
        if (std::isinf(lp->p) || lp->p == 1.0) {
            // facet normal; ambiguous off facet interiors
            if (std::isinf(lp->p)) {
                int hits = 0, idx = -1;
                for (int i = 0; i < n; ++i)
                    if (std::abs(std::abs(x(i)) - 1.0) < 1e-9) { ++hits; idx = i; }
                if (hits != 1)
                    throw input_error("normal_at: ambiguous normal on cube edge/vertex");
                g.setZero();
                g(idx) = x(idx) > 0 ? 1.0 : -1.0;
                return g;
            }
            for (int i = 0; i < n; ++i) {
                if (std::abs(x(i)) < 1e-9)
                    throw input_error("normal_at: ambiguous normal on cross-polytope ridge");
                g(i) = x(i) > 0 ? 1.0 : -1.0;
            }
            return g / g.norm();
        }
        for (int i = 0; i < n; ++i) {
            double t = std::pow(std::abs(x(i)), lp->p - 1.0);
            g(i) = x(i) >= 0 ? t : -t;
        }
        return g / g.norm();
    }
    if (const auto* el = k.as_ellipsoid()) {
        require_on_boundary(k, x);
        Vector g = el->shape_inv * (x - el->center);
        return g / g.norm();
    }
    const auto* af = k.as_affine();
    Vector inner_n = normal_at(*af->inner, af->map_inv * (x - af->shift));
    Vector g = af->map_inv.transpose() * inner_n;
    return g / g.norm();
}

double lp_curvature(int n, double p, const Vector& x) {
    if (x.size() != n) throw input_error("lp_curvature: dimension mismatch");
    if (!(p > 1.0) || std::isinf(p))
        throw input_error("lp_curvature: requires p in (1, inf)");
    if (std::abs(lp_norm(x, p) - 1.0) > 1e-9 * (1.0 + x.norm()))
        throw input_error("lp_curvature: point is not on the unit lp sphere");
    if (p == 2.0) return 1.0;
    bool has_zero = false;
    for (int i = 0; i < n; ++i)
        if (std::abs(x(i)) < 1e-14) has_zero = true;
    if (has_zero) return p > 2.0 ? 0.0 : kInf;
    double prod = 1.0, s = 0.0;
    for (int i = 0; i < n; ++i) {
        double a = std::abs(x(i));
        prod *= std::pow(a, p - 2.0);
        s += std::pow(a, 2.0 * (p - 1.0));
    }
    return std::pow(p - 1.0, n - 1) * prod / std::pow(s, 0.5 * (n + 1));
}

double gauss_curvature(const BodySpec& k, const Vector& x) {
    require_dim(k, x, "gauss_curvature");
    if (k.as_polygon())
        throw input_error("gauss_curvature: unsupported for polygons");
    if (const auto* lp = k.as_lp_ball()) {
        if (lp->p == 1.0 || std::isinf(lp->p))
            throw input_error("gauss_curvature: lp ball with p in {1, inf} is not C^2");
        return lp_curvature(lp->n, lp->p, x);
    }
    if (const auto* el = k.as_ellipsoid()) {
        require_on_boundary(k, x);
        Vector g = el->shape_inv * (x - el->center);
        int n = k.dimension();
        return el->shape_inv.determinant() / std::pow(g.norm(), n + 1);
    }
    const auto* af = k.as_affine();
    Vector y = af->map_inv * (x - af->shift);
    double inner_kappa = gauss_curvature(*af->inner, y);
    if (inner_kappa == 0.0) return 0.0;
    if (std::isinf(inner_kappa)) return kInf;
    Vector inner_n = normal_at(*af->inner, y);
    Vector g = af->map_inv.transpose() * inner_n;
    int n = k.dimension();
    return inner_kappa / (af->det_abs * af->det_abs * std::pow(g.norm(), n + 1));
}

double volume(const BodySpec& k) {
    if (const auto* poly = k.as_polygon()) return poly->chain.area();
    if (const auto* lp = k.as_lp_ball()) {
        double invp = std::isinf(lp->p) ? 0.0 : 1.0 / lp->p;
        double n = static_cast<double>(lp->n);
        return std::pow(2.0, n) * std::pow(std::tgamma(1.0 + invp), n) /
               std::tgamma(1.0 + n * invp);
    }
    if (const auto* el = k.as_ellipsoid())
        return unit_ball_volume(k.dimension()) * std::sqrt(el->shape.determinant());
    const auto* af = k.as_affine();
    return af->det_abs * volume(*af->inner);
}

Vector centroid(const BodySpec& k) {
    if (const auto* poly = k.as_polygon())
        return detail::to_vector(poly->chain.centroid());
    if (k.as_lp_ball()) return Vector::Zero(k.dimension());
    if (const auto* el = k.as_ellipsoid()) return el->center;
    const auto* af = k.as_affine();
    return af->map * centroid(*af->inner) + af->shift;
}

double unit_ball_volume(int k) {
    if (k < 0) throw input_error("unit_ball_volume: negative dimension");
    return std::pow(std::numbers::pi, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

BodySpec recenter(const BodySpec& k) {
    Vector c = centroid(k);
    if (c.norm() <= 1e-14 * (1.0 + scale_radius(k))) return k;
    int n = k.dimension();
    return BodySpec::affine(k, Matrix::Identity(n, n), -c);
}

PolygonChain polygonize(const BodySpec& k, std::size_t m) {
    if (k.dimension() != 2) throw input_error("polygonize: 2D bodies only");
    if (const auto* poly = k.as_polygon()) return poly->chain;
    if (const auto* lp = k.as_lp_ball()) {
        if (std::isinf(lp->p))
            return PolygonChain({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
        if (lp->p == 1.0)
            return PolygonChain({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    }
    if (const auto* af = k.as_affine()) {
        PolygonChain inner = polygonize(*af->inner, m);
        double mm[4] = {af->map(0, 0), af->map(0, 1), af->map(1, 0), af->map(1, 1)};
        return transform(inner, mm, detail::to_vec2(af->shift));
    }
    PolygonChain out;
    out.vertices.reserve(m);
    for (const Vec2& u : uniform_directions(m))
        out.vertices.push_back(detail::to_vec2(boundary_point(k, detail::to_vector(u))));
    return out;
}

} // namespace floatlab
