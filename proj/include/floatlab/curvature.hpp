#pragma once

#include "floatlab/body.hpp"
#include "floatlab/cap.hpp"

namespace floatlab {

// Chord-moment curvature matrix at an interior point x for the slice
// hyperplane H(x, xi): in an orthonormal frame of the hyperplane,
//   Q(i,j) = (1/|K ∩ H|) ∫_{S^{n-2}} η_i η_j r^n(η) cot(β(η)) dσ(η),
// where r(η) is the boundary distance from x along η and β(η) the angle
// between the in-plane ray and the boundary tangent projecting onto it,
// evaluated as cot β = <N_K(y), xi> / <N_K(y), η>.
// det(Q) is the reciprocal Gauss curvature of the floating body whose cut
// hyperplane through x is H(x, xi).
struct QMatrix {
    Matrix entries;      // (n-1) x (n-1), symmetric
    Vector base_point;
    Vector slice_normal;
    double slice_volume = 0.0; // (n-1)-volume of K ∩ H(x, xi)
    int quadrature_nodes = 0;  // 0 in 2D (two-point sum)
};

QMatrix q_matrix(const BodySpec& k, const Vector& x, const Vector& xi,
                 int nodes = 256);

// Gauss curvature of the floating body K_delta at its touching point with the
// cut hyperplane orthogonal to u: locates x_delta (section centroid of the
// cut), builds Q there, returns 1/det(Q). Returns +inf when det(Q) falls
// below 1e-12 * diameter^{n-1}.
double floating_curvature(const BodySpec& k, double delta, const Vector& u,
                          const CapOptions& opt = default_cap_options());

// c_n = 2 (|B^{n-1}_2| / (n+1))^{2/(n+1)}
double c_constant(int n);

// Scaled radial shrink toward the floating body along the ray [0, x]:
//   c_n <x, N_K(x)> / (n delta^{2/(n+1)}) * (1 - (|x_delta|/|x|)^n),
// which tends to kappa_K(x)^{1/(n+1)} as delta -> 0. The body is re-centered
// at its centroid first.
double limit_ratio(const BodySpec& k, const Vector& x, double delta,
                   const CapOptions& opt = default_cap_options());

} // namespace floatlab
