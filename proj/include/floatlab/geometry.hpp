#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace floatlab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double xx, double yy) : x(xx), y(yy) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    Vec2 normalized() const { double n = norm(); return {x / n, y / n}; }
    Vec2 perp() const { return {-y, x}; } // +90 degrees
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

// Ordered convex vertex chain, counterclockwise, implicitly closed.
struct PolygonChain {
    std::vector<Vec2> vertices;

    PolygonChain() = default;
    explicit PolygonChain(std::vector<Vec2> v) : vertices(std::move(v)) {}

    std::size_t size() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }

    double area() const;                 // shoelace; 0 for < 3 vertices
    Vec2 centroid() const;               // area centroid (vertex mean if degenerate)
    double support(Vec2 u) const;        // max <v,u>
    Vec2 support_point(Vec2 u, double tol) const; // argmax; face centroid on ties
    bool contains(Vec2 p, double tol) const;
    double circumradius() const;         // max |v|
};

// Index of the first vertex triple violating convexity/CCW order, or nullopt.
// Tolerance is absolute on the cross product.
std::optional<std::size_t> convexity_violation(const std::vector<Vec2>& v, double tol);

// Clips a convex chain against the halfplane <x,n> <= c (Sutherland-Hodgman step).
PolygonChain clip_halfplane(const PolygonChain& p, Vec2 n, double c);

// Intersection of two convex polygons (P clipped by every edge of Q).
PolygonChain polygon_intersection(const PolygonChain& p, const PolygonChain& q);
double polygon_intersection_area(const PolygonChain& p, const PolygonChain& q);

PolygonChain transform(const PolygonChain& p, const double m[4], Vec2 shift);
PolygonChain scale(const PolygonChain& p, double factor);

// Support-sampled Hausdorff distance between convex chains:
// max over sampled unit u of |h_P(u) - h_Q(u)|.
double hausdorff_support(const PolygonChain& p, const PolygonChain& q,
                         std::size_t directions = 2048);

// min over sampled u of h(u) + h(-u)
double min_width(const PolygonChain& p, std::size_t directions = 2048);

// Halfplane <x, normal> <= level with unit normal.
struct HalfPlane {
    Vec2 normal;
    double level = 0.0;
};

// Intersection of halfplanes whose normals are sorted counterclockwise by
// angle (full turn). Throws numeric_error if the intersection is empty or
// unbounded. parallel_tol: |cross| below which two boundary lines are
// treated as parallel.
PolygonChain halfplane_intersection(const std::vector<HalfPlane>& planes,
                                    double parallel_tol = 1e-14);

// m unit directions at uniform angles 2*pi*k/m, offset 0.
std::vector<Vec2> uniform_directions(std::size_t m);

} // namespace floatlab
