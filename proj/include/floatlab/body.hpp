#pragma once

#include <Eigen/Dense>
#include <memory>
#include <variant>

#include "floatlab/geometry.hpp"

namespace floatlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

class BodySpec;

struct PolygonBody {
    PolygonChain chain;
};

struct LpBall {
    int n = 2;
    double p = 2.0; // in [1, inf]; inf encoded as std::numeric_limits<double>::infinity()
};

// { x : (x - center)^T shape^{-1} (x - center) <= 1 }, shape positive definite.
// For an axis-aligned ellipse with semi-axes a, b: shape = diag(a^2, b^2).
struct EllipsoidBody {
    Matrix shape;
    Matrix shape_inv;
    Vector center;
};

struct AffineBody {
    std::shared_ptr<const BodySpec> inner;
    Matrix map;      // invertible
    Matrix map_inv;
    Vector shift;
    double det_abs = 1.0;
};

// Declarative convex-body description evaluated through closed-form oracles.
// Immutable after construction; all operations on it are pure.
class BodySpec {
public:
    static BodySpec polygon(PolygonChain chain);
    static BodySpec lp_ball(int n, double p);
    static BodySpec ellipsoid(Matrix shape, Vector center);
    static BodySpec affine(BodySpec inner, Matrix map, Vector shift);

    int dimension() const { return dim_; }

    const PolygonBody* as_polygon() const { return std::get_if<PolygonBody>(&kind_); }
    const LpBall* as_lp_ball() const { return std::get_if<LpBall>(&kind_); }
    const EllipsoidBody* as_ellipsoid() const { return std::get_if<EllipsoidBody>(&kind_); }
    const AffineBody* as_affine() const { return std::get_if<AffineBody>(&kind_); }

private:
    BodySpec(std::variant<PolygonBody, LpBall, EllipsoidBody, AffineBody> kind, int dim)
        : kind_(std::move(kind)), dim_(dim) {}

    std::variant<PolygonBody, LpBall, EllipsoidBody, AffineBody> kind_;
    int dim_;
};

// h_K(u) = max over x in K of <x,u>. Requires |u| = 1 within 1e-12.
double support(const BodySpec& k, const Vector& u);

// Closed-body membership, tolerance 1e-12 relative to body scale.
bool contains(const BodySpec& k, const Vector& x);

// A point of the face argmax <.,u>; face centroid on polygon ties.
Vector boundary_point(const BodySpec& k, const Vector& u);

// Outward unit normal. Errors at polygon vertices and for points off the
// boundary (tolerance 1e-9 * (1 + |x|)).
Vector normal_at(const BodySpec& k, const Vector& x);

// Gauss curvature at a boundary point; closed forms per kind. Polygons are
// unsupported (flat or undefined).
double gauss_curvature(const BodySpec& k, const Vector& x);

// Curvature of the unit lp ball at x with |x|_p = 1, p in (1, inf):
//   (p-1)^{n-1} prod |x_i|^{p-2} / (sum |x_i|^{2(p-1)})^{(n+1)/2}.
// Returns 0 when a coordinate vanishes and p > 2, +inf when p < 2.
double lp_curvature(int n, double p, const Vector& x);

double volume(const BodySpec& k);
Vector centroid(const BodySpec& k);

// Volume of the k-dimensional Euclidean unit ball, pi^{k/2}/Gamma(k/2+1).
double unit_ball_volume(int k);

// Body translated so its centroid is the origin (identity map wrapper when
// already centered).
BodySpec recenter(const BodySpec& k);

// max over axis directions of max(h(e_i), h(-e_i)); cheap size scale.
double scale_radius(const BodySpec& k);

// Inscribed polygon through boundary points at m uniform directions (2D only).
PolygonChain polygonize(const BodySpec& k, std::size_t m);

// Euclidean / lp norm helpers used across modules.
double lp_norm(const Vector& x, double p);

namespace detail {
Vec2 to_vec2(const Vector& v);
Vector to_vector(Vec2 v);
// Positively homogeneous support evaluation, no unit-length requirement.
double support_homog(const BodySpec& k, const Vector& w);
} // namespace detail

} // namespace floatlab
