#pragma once

#include <cstdint>

#include "floatlab/body.hpp"

namespace floatlab {

struct CapOptions {
    double tol_vol_rel = 1e-10;  // volume tolerance, relative to |K|
    int max_iter = 200;
    std::uint64_t seed = 20240915u; // Monte Carlo path (3D lp, non-axis directions)
    int mc_grid = 40;               // stratified cells per axis
};

// Process-wide default options; the CLI configures them once at startup.
CapOptions& default_cap_options();

struct CutResult {
    double level = 0.0;         // solved cut height t
    double cap_volume = 0.0;    // achieved |K ∩ {<x,u> >= t}|
    double volume_error = 0.0;  // absolute bound on the volume error
    int iterations = 0;
};

// |K ∩ {x : <x,u> >= t}|. Exact polygon clipping in 2D; closed forms for
// balls/ellipsoids; quadrature of section widths/areas for lp balls;
// stratified Monte Carlo for 3D lp balls in general directions.
double cap_volume(const BodySpec& k, const Vector& u, double t,
                  const CapOptions& opt = default_cap_options());

// Solves cap_volume(k, u, t) = delta for t. The cap volume is strictly
// decreasing in t on the support interval, so the root is unique.
CutResult cut_level(const BodySpec& k, const Vector& u, double delta,
                    const CapOptions& opt = default_cap_options());

// Signed membership margin: negative inside, positive outside, zero on the
// boundary; convex along lines. Used for chord/ray solves.
double inside_margin(const BodySpec& k, const Vector& x);

} // namespace floatlab
