#include "floatlab/curvature.hpp"

#include <cmath>
#include <numbers>

#include "floatlab/errors.hpp"
#include "floatlab/floating.hpp"

namespace floatlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Boundary distance from an interior point along a unit direction;
// bisection on membership, 1e-12 relative tolerance.
double ray_boundary(const BodySpec& k, const Vector& x, const Vector& dir,
                    double scale) {
    double lo = 0.0;
    double hi = 3.0 * scale + x.norm() + 1.0;
    double tol = 1e-12 * (1.0 + scale);
    Vector buf(x.size());
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        buf = x + mid * dir;
        if (contains(k, buf))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double cot_beta(const BodySpec& k, const Vector& y, const Vector& xi,
                const Vector& eta) {
    Vector nrm = normal_at(k, y);
    double denom = nrm.dot(eta);
    if (denom <= 0.0)
        throw numeric_error("q_matrix: boundary normal not transversal to ray "
                            "(numerics fault)");
    return nrm.dot(xi) / denom;
}

// A point strictly inside K on the plane {<x,u> = t}.
Vector plane_seed(const BodySpec& k, const Vector& u, double t) {
    Vector g = centroid(k);
    double c0 = g.dot(u);
    double hplus = detail::support_homog(k, u);
    double hminus = detail::support_homog(k, -u);
    if (t >= c0) {
        Vector b = boundary_point(k, u);
        return g + ((t - c0) / (hplus - c0)) * (b - g);
    }
    Vector b = boundary_point(k, -u);
    return g + ((t - c0) / (-hminus - c0)) * (b - g);
}

void slice_frame(const Vector& xi, Vector& e1, Vector& e2) {
    Eigen::Vector3d n(xi(0), xi(1), xi(2));
    Eigen::Index small = 0;
    n.cwiseAbs().minCoeff(&small);
    Eigen::Vector3d a = Eigen::Vector3d::Zero();
    a(small) = 1.0;
    Eigen::Vector3d f1 = n.cross(a).normalized();
    Eigen::Vector3d f2 = n.cross(f1);
    e1 = Vector(3);
    e2 = Vector(3);
    e1 << f1(0), f1(1), f1(2);
    e2 << f2(0), f2(1), f2(2);
}

// Centroid of the planar convex slice K ∩ {<x,u> = t} (3D).
Vector slice_centroid(const BodySpec& k, const Vector& u, double t, int nodes,
                      double scale) {
    Vector q0 = plane_seed(k, u, t);
    Vector e1, e2;
    slice_frame(u, e1, e2);
    double area = 0.0;
    Vector first = Vector::Zero(3);
    Vector dir(3);
    for (int j = 0; j < nodes; ++j) {
        double th = 2.0 * kPi * j / nodes;
        dir = std::cos(th) * e1 + std::sin(th) * e2;
        double r = ray_boundary(k, q0, dir, scale);
        area += 0.5 * r * r;
        first += (r * r * r / 3.0) * dir;
    }
    // uniform weights cancel in first/area
    return q0 + first / area;
}

} // namespace

QMatrix q_matrix(const BodySpec& k, const Vector& x, const Vector& xi, int nodes) {
    int n = k.dimension();
    if (n != 2 && n != 3) throw input_error("q_matrix: dimension 2 or 3 only");
    if (x.size() != n || xi.size() != n) throw input_error("q_matrix: dimension mismatch");
    if (std::abs(xi.norm() - 1.0) > 1e-12)
        throw input_error("q_matrix: slice normal must be a unit vector");
    double scale = scale_radius(k);
    if (inside_margin(k, x) >= -1e-12 * (1.0 + scale))
        throw input_error("q_matrix: base point must be strictly inside the body");

    QMatrix q;
    q.base_point = x;
    q.slice_normal = xi;

    if (n == 2) {
        Vector eta(2);
        eta << -xi(1), xi(0);
        double rp = ray_boundary(k, x, eta, scale);
        double rm = ray_boundary(k, x, -eta, scale);
        double cp = cot_beta(k, x + rp * eta, xi, eta);
        double cm = cot_beta(k, x - rm * eta, xi, -eta);
        q.entries = Matrix(1, 1);
        q.entries(0, 0) = (rp * rp * cp + rm * rm * cm) / (rp + rm);
        q.slice_volume = rp + rm;
        q.quadrature_nodes = 0;
        return q;
    }

    nodes = std::max(nodes, 16);
    Vector e1, e2;
    slice_frame(xi, e1, e2);
    double w = 2.0 * kPi / nodes;
    double area = 0.0, q11 = 0.0, q12 = 0.0, q22 = 0.0;
    Vector dir(3);
    for (int j = 0; j < nodes; ++j) {
        double th = w * j;
        double c = std::cos(th), s = std::sin(th);
        dir = c * e1 + s * e2;
        double r = ray_boundary(k, x, dir, scale);
        double cot = cot_beta(k, x + r * dir, xi, dir);
        double m = r * r * r * cot * w;
        area += 0.5 * r * r * w;
        q11 += c * c * m;
        q12 += c * s * m;
        q22 += s * s * m;
    }
    q.entries = Matrix(2, 2);
    q.entries << q11 / area, q12 / area, q12 / area, q22 / area;
    q.slice_volume = area;
    q.quadrature_nodes = nodes;
    return q;
}

double floating_curvature(const BodySpec& k, double delta, const Vector& u,
                          const CapOptions& opt) {
    int n = k.dimension();
    if (n != 2 && n != 3) throw input_error("floating_curvature: dimension 2 or 3 only");
    double total = volume(k);
    if (!(delta > 0.0 && delta < 0.5 * total))
        throw input_error("floating_curvature: delta out of (0, |K|/2)");

    CutResult cut = cut_level(k, u, delta, opt);
    double scale = scale_radius(k);

    Vector x_delta;
    if (n == 2) {
        Vector q0 = plane_seed(k, u, cut.level);
        Vector eta(2);
        eta << -u(1), u(0);
        double rp = ray_boundary(k, q0, eta, scale);
        double rm = ray_boundary(k, q0, -eta, scale);
        x_delta = q0 + 0.5 * (rp - rm) * eta;
    } else {
        x_delta = slice_centroid(k, u, cut.level, 512, scale);
    }

    QMatrix q = q_matrix(k, x_delta, u, 512);
    double det = n == 2 ? q.entries(0, 0) : q.entries.determinant();
    double diam = 2.0 * scale;
    double tol_det = 1e-12 * std::pow(diam, n - 1);
    if (det < -tol_det)
        throw numeric_error("floating_curvature: Q not positive definite");
    if (n == 3 && det > tol_det && q.entries.trace() <= 0.0)
        throw numeric_error("floating_curvature: Q not positive definite");
    if (std::abs(det) <= tol_det) return std::numeric_limits<double>::infinity();
    return 1.0 / det;
}

double c_constant(int n) {
    if (n < 2) throw input_error("c_constant: n must be >= 2");
    return 2.0 * std::pow(unit_ball_volume(n - 1) / (n + 1.0), 2.0 / (n + 1.0));
}

double limit_ratio(const BodySpec& k, const Vector& x, double delta,
                   const CapOptions& opt) {
    int n = k.dimension();
    if (n != 2 && n != 3) throw input_error("limit_ratio: dimension 2 or 3 only");
    BodySpec centered = recenter(k);
    Vector x0 = x - centroid(k);
    double scale = scale_radius(centered);
    if (std::abs(inside_margin(centered, x0)) > 1e-9 * (1.0 + scale))
        throw input_error("limit_ratio: x is not on the boundary");
    double total = volume(centered);
    if (!(delta > 0.0 && delta < 0.5 * total))
        throw input_error("limit_ratio: delta out of (0, |K|/2)");

    Vector nrm = normal_at(centered, x0);

    auto m = static_cast<std::size_t>(
        std::max(720.0, std::ceil(50.0 * std::pow(delta, -1.0 / 3.0))));
    m = (m + 7) / 8 * 8;
    FloatingBodyOptions fopt;
    fopt.cap = opt;
    FloatingBodyResult fb = floating_body(centered, delta, m, fopt);

    if (!fb.contains_point(Vector::Zero(n)))
        throw numeric_error("limit_ratio: centroid not inside the floating body; "
                            "ray search cannot bracket");
    if (fb.contains_point(x0))
        throw numeric_error("limit_ratio: boundary point inside the floating body; "
                            "ray search cannot bracket");

    double lo = 0.0, hi = 1.0;
    double stol = 1e-12 * 2.0 * scale / x0.norm();
    Vector buf(n);
    while (hi - lo > stol) {
        double mid = 0.5 * (lo + hi);
        buf = mid * x0;
        if (fb.contains_point(buf))
            lo = mid;
        else
            hi = mid;
    }
    double s = 0.5 * (lo + hi);

    double power = std::pow(delta, 2.0 / (n + 1.0));
    return c_constant(n) * x0.dot(nrm) / (n * power) * (1.0 - std::pow(s, n));
}

} // namespace floatlab
