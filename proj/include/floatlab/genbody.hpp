#pragma once

#include "floatlab/geometry.hpp"

namespace floatlab {

enum class GenBodyKind { illumination, convolution, santalo };

struct GenBodyResult {
    GenBodyKind kind = GenBodyKind::illumination;
    double parameter = 0.0;
    PolygonChain hull;       // single vertex when degenerate, empty when empty
    std::size_t ray_count = 0;
    bool empty = false;
    bool degenerate_point = false;
};

// Hull-volume excess |conv(x, P)| - |P| of an exterior point (0 on P).
double hull_excess(const PolygonChain& p, Vec2 x);

// { x : |conv(x,P)| - |P| <= delta }, sampled along rays from the centroid.
GenBodyResult illumination_body(const PolygonChain& p, double delta, std::size_t rays);

// { x/2 : |P ∩ (P + x)| >= 2t } for an origin-symmetric P; boundary points are
// s*u with |P ∩ (P + 2su)| = 2t. t must lie in (0, |P|/2] up to the
// discretization tolerance; t = |P|/2 collapses to the origin.
GenBodyResult convolution_body(const PolygonChain& p, double t, std::size_t rays);

// Area of (P - x)^polar for x strictly inside P.
double polar_area(const PolygonChain& p, Vec2 x);

// { x in P : |(P-x)^polar| <= 1/t }, rays from the polar-area minimizer.
// Empty when even the minimizer exceeds 1/t beyond the classification
// tolerance; collapses to the minimizer when it sits exactly at the level.
GenBodyResult santalo_region(const PolygonChain& p, double t, std::size_t rays);

} // namespace floatlab
