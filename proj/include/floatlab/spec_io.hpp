#pragma once

#include <string>

#include "floatlab/body.hpp"
#include "floatlab/homothety.hpp"

namespace floatlab {

// Body specs are flow-style mappings, e.g.
//   {kind: lp_ball, n: 2, p: 4}
//   {kind: polygon, vertices: [[1,1],[-1,1],[-1,-1],[1,-1]]}
//   {kind: ellipsoid, shape: [[4,0],[0,1]], center: [0,0]}
//   {kind: affine, inner: {kind: lp_ball, n: 2, p: 2}, map: [[2,0],[0,1]], shift: [0,0]}
// p accepts "inf"; polygons are reordered counterclockwise. Syntax errors
// report line and column; convexity violations name the offending vertex.
BodySpec parse_body_spec(const std::string& text);
BodySpec load_body_spec(const std::string& path);

// Round-trip serialization (17 significant digits).
std::string serialize_body_spec(const BodySpec& k);

// {n: 2, tau: 2, T_M: 1, r_m: 1, r_M: 1, D: 1, rho_0: 0.5, R: 2}
ThresholdInputs parse_threshold_inputs(const std::string& text);
ThresholdInputs load_threshold_inputs(const std::string& path);

} // namespace floatlab
