#pragma once

#include <limits>
#include <vector>

#include "floatlab/body.hpp"
#include "floatlab/cap.hpp"

namespace floatlab {

struct FloatingBodyOptions {
    CapOptions cap = default_cap_options();
    // When set, a second run at 2m directions estimates the discretization
    // error by Richardson comparison (2D only).
    bool estimate_discretization = false;
};

// Discretized floating body: intersection of the halfspaces
// {<x, u_i> <= t(u_i, delta)} over a deterministic direction family
// (uniform angles in 2D, Fibonacci sphere in 3D).
struct FloatingBodyResult {
    double delta = 0.0;
    int dimension = 2;
    std::vector<Vector> directions;
    std::vector<double> support_levels;
    PolygonChain hull;              // 2D only; empty in 3D
    bool contained_in_source = true;
    double max_volume_error = 0.0;  // worst per-direction cut volume bound
    double discretization_error =
        std::numeric_limits<double>::quiet_NaN(); // set when estimated

    // Halfspace-table membership: x in the body iff <x,u_i> <= t_i for all i.
    bool contains_point(const Vector& x) const;
};

FloatingBodyResult floating_body(const BodySpec& k, double delta, std::size_t m,
                                 const FloatingBodyOptions& opt = {});

// Wraps k into an affine image T(k) + shift (validates invertibility).
BodySpec apply_affine(const BodySpec& k, const Matrix& map, const Vector& shift);

// Deterministic near-uniform unit directions on S^2.
std::vector<Vector> fibonacci_sphere(std::size_t m);

} // namespace floatlab
