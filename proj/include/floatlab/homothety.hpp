#pragma once

#include <vector>

#include "floatlab/body.hpp"
#include "floatlab/cap.hpp"

namespace floatlab {

// Support-sampled Hausdorff distance between convex chains over 2048
// directions; valid for convex bodies since d_H = max_u |h_P - h_Q|.
double hausdorff(const PolygonChain& p, const PolygonChain& q);

struct HomothetyDefect {
    double c = 0.0;       // scale from the volume ratio (area(hull)/|K|)^{1/n}
    double c_lsq = 0.0;   // least-squares support fit, diagnostic only
    double defect = 0.0;  // hausdorff(hull, c*K) / min-width(K)
    double discretization_error = 0.0; // Richardson estimate at m vs 2m
    std::size_t m = 0;
    PolygonChain hull;
};

// Measures how far K_delta is from c*K after re-centering K at its centroid.
// estimate_discretization adds a Richardson comparison at 2m directions.
HomothetyDefect homothety_defect(const BodySpec& k, double delta, std::size_t m,
                                 const CapOptions& opt = default_cap_options(),
                                 bool estimate_discretization = true);

// Same metric for an arbitrary convex hull against a reference chain
// (generalized-body experiments); c may exceed 1.
HomothetyDefect chain_homothety_defect(const PolygonChain& hull,
                                       const PolygonChain& reference);

struct PettySample {
    Vector point;
    double value = 0.0; // kappa_K(x) / <x, N_K(x)>^{n+1}; 0 or +inf when degenerate
};

struct PettyScan {
    std::vector<PettySample> samples;
    double t_min = 0.0; // T_m = (min value)^{1/(n+1)} over nondegenerate samples
    double t_max = 0.0; // T_M = (max value)^{1/(n+1)}
    double tau = 1.0;   // T_M / T_m; +inf sentinel when degenerate
    Vector x_min, x_max;
    bool degenerate = false; // some curvature is 0 or infinite
};

// Evaluates the curvature functional kappa/<x,N>^{n+1} at m boundary points of
// the centroid-centered body. A constant scan characterizes ellipsoids; a
// degenerate scan (zero/infinite curvature) rules out homothety with any
// floating body at small delta.
PettyScan petty_scan(const BodySpec& k, std::size_t m);

struct ThresholdInputs {
    int n = 2;
    double tau = 1.0; // >= 1
    double T_M = 1.0;
    double r_m = 1.0; // kappa(x_m)^{-1/(n-1)}
    double r_M = 1.0; // kappa(x_M)^{-1/(n-1)}
    double D = 1.0;   // bound on third derivatives of boundary graphs
    double rho_0 = 1.0; // inscribed rolling-ball radius
    double R = 1.0;     // circumscribed rolling-ball radius
};

struct ThresholdReport {
    double a = 0.0;
    double delta_0 = 0.0, delta_1 = 0.0, delta_2 = 0.0;
    double delta_m = 0.0, delta_M = 0.0;
    double ball_term_m = 0.0, ball_term_M = 0.0;
    double delta_K = 0.0; // min of the seven components above
    // intermediates
    double r_bar_m = 0.0, r_bar_M = 0.0, R_bar_M = 0.0, xi = 0.0;
    double t_am = 0.0, t_M1 = 0.0, t_M2 = 0.0;
    double Delta_am = 0.0, Delta_aM = 0.0;
    // as-printed variant of the delta_M branch (see threshold())
    double Delta_aM_literal = 0.0, delta_M_literal = 0.0, delta_K_literal = 0.0;
};

// Explicit smallness threshold delta(K) assembled from the curvature scan
// extremes and rolling-ball data. All branch formulas are evaluated exactly
// as specified; the delta_M branch is additionally evaluated in a literal
// variant whose denominators use r_m and (1-a)R_bar_M (reported side by side;
// delta_K uses the corrected branch, delta_K_literal the literal one).
ThresholdReport threshold(const ThresholdInputs& in);

// Exact rolling-ball radii for an axis-aligned ellipse with semi-axes a >= b:
// rho_0 = b^2/a, R = a^2/b.
void ellipse_rolling_radii(double a, double b, double* rho0, double* big_r);

} // namespace floatlab
