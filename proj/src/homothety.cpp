#include "floatlab/homothety.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "floatlab/errors.hpp"
#include "floatlab/floating.hpp"
#include "floatlab/parallel.hpp"

namespace floatlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kScanDirs = 2048;

HomothetyDefect defect_from_support(const PolygonChain& hull, double ref_volume,
                                    const std::function<double(const Vec2&)>& ref_support) {
    HomothetyDefect out;
    out.hull = hull;
    double hull_area = hull.area();
    out.c = std::sqrt(hull_area / ref_volume);

    double gap = 0.0, num = 0.0, den = 0.0;
    double width = kInf;
    auto dirs = uniform_directions(kScanDirs);
    std::vector<double> h_ref(kScanDirs), h_hull(kScanDirs);
    for (std::size_t i = 0; i < kScanDirs; ++i) {
        h_ref[i] = ref_support(dirs[i]);
        h_hull[i] = hull.support(dirs[i]);
    }
    for (std::size_t i = 0; i < kScanDirs; ++i) {
        gap = std::max(gap, std::abs(h_hull[i] - out.c * h_ref[i]));
        num += h_hull[i] * h_ref[i];
        den += h_ref[i] * h_ref[i];
        if (i < kScanDirs / 2) width = std::min(width, h_ref[i] + h_ref[i + kScanDirs / 2]);
    }
    out.c_lsq = num / den;
    out.defect = gap / width;
    return out;
}

} // namespace

double hausdorff(const PolygonChain& p, const PolygonChain& q) {
    return hausdorff_support(p, q, kScanDirs);
}

HomothetyDefect homothety_defect(const BodySpec& k, double delta, std::size_t m,
                                 const CapOptions& opt, bool estimate_discretization) {
    if (k.dimension() != 2) throw input_error("homothety_defect: 2D bodies only");
    BodySpec centered = recenter(k);
    double total = volume(centered);
    if (!(delta > 0.0 && delta < 0.5 * total))
        throw input_error("homothety_defect: delta out of (0, |K|/2)");

    FloatingBodyOptions fopt;
    fopt.cap = opt;
    fopt.estimate_discretization = estimate_discretization;
    FloatingBodyResult fb = floating_body(centered, delta, m, fopt);

    HomothetyDefect out = defect_from_support(
        fb.hull, total,
        [&](const Vec2& u) { return detail::support_homog(centered, detail::to_vector(u)); });
    out.m = m;
    out.discretization_error = fb.discretization_error;
    return out;
}

HomothetyDefect chain_homothety_defect(const PolygonChain& hull,
                                       const PolygonChain& reference) {
    if (hull.empty() || reference.size() < 3)
        throw input_error("chain_homothety_defect: empty input");
    HomothetyDefect out = defect_from_support(
        hull, reference.area(), [&](const Vec2& u) { return reference.support(u); });
    out.m = hull.size();
    return out;
}

PettyScan petty_scan(const BodySpec& k, std::size_t m) {
    int n = k.dimension();
    if (n != 2 && n != 3) throw input_error("petty_scan: dimension 2 or 3 only");
    if (m < 16) throw input_error("petty_scan: need m >= 16 samples");
    if (k.as_polygon())
        throw input_error("petty_scan: polygons carry no curvature");
    if (const auto* lp = k.as_lp_ball()) {
        if (lp->p == 1.0 || std::isinf(lp->p))
            throw input_error("petty_scan: lp ball with p in {1, inf} carries no curvature");
    }

    BodySpec centered = recenter(k);
    double diam = 2.0 * scale_radius(centered);

    std::vector<Vector> dirs;
    if (n == 2) {
        for (const Vec2& u : uniform_directions(m)) dirs.push_back(detail::to_vector(u));
    } else {
        dirs = fibonacci_sphere(m);
    }

    PettyScan out;
    out.samples.resize(m);
    parallel_for(m, [&](std::size_t i) {
        Vector x = boundary_point(centered, dirs[i]);
        Vector nrm = normal_at(centered, x);
        double xn = x.dot(nrm);
        if (xn <= 1e-9 * diam)
            throw numeric_error("petty_scan: <x,N> vanished after re-centering");
        double kappa = gauss_curvature(centered, x);
        double value;
        if (kappa == 0.0)
            value = 0.0;
        else if (std::isinf(kappa))
            value = kInf;
        else
            value = kappa / std::pow(xn, n + 1);
        out.samples[i] = {std::move(x), value};
    });

    double vmin = kInf, vmax = -kInf;
    for (const auto& s : out.samples) {
        if (s.value == 0.0 || std::isinf(s.value)) {
            out.degenerate = true;
            continue;
        }
        if (s.value < vmin) { vmin = s.value; out.x_min = s.point; }
        if (s.value > vmax) { vmax = s.value; out.x_max = s.point; }
    }
    if (vmax < vmin) { // all samples degenerate
        out.degenerate = true;
        out.t_min = 0.0;
        out.t_max = kInf;
        out.tau = kInf;
        return out;
    }
    out.t_min = std::pow(vmin, 1.0 / (n + 1.0));
    out.t_max = std::pow(vmax, 1.0 / (n + 1.0));
    out.tau = out.degenerate ? kInf : out.t_max / out.t_min;
    return out;
}

ThresholdReport threshold(const ThresholdInputs& in) {
    int n = in.n;
    if (n < 2) throw input_error("threshold: n must be >= 2");
    if (!(in.tau >= 1.0)) throw input_error("threshold: tau must be >= 1");
    if (!(in.T_M > 0.0 && in.r_m > 0.0 && in.r_M > 0.0 && in.D > 0.0 &&
          in.rho_0 > 0.0 && in.R > 0.0))
        throw input_error("threshold: all inputs must be positive");
    if (in.rho_0 > in.R)
        throw input_error("threshold: rho_0 must not exceed R");

    const double tau = in.tau;
    const double nn = static_cast<double>(n);
    const double exp_big = (nn + 1.0) / (nn - 1.0);
    const double exp_half = 0.5 * (nn + 1.0);
    const double b_nm1 = unit_ball_volume(n - 1);
    const double b_n = unit_ball_volume(n);

    ThresholdReport r;
    r.a = std::min(1.0 - std::pow(2.0 / (1.0 + tau), exp_big),
                   std::pow(3.0 * tau / (1.0 + 2.0 * tau), exp_big) - 1.0);
    const double a = r.a;

    double y0 = std::pow(in.rho_0 / (4.0 * in.R), 2);
    double one_minus_root = y0 / (1.0 + std::sqrt(1.0 - y0)); // 1 - sqrt(1 - y0)
    r.delta_0 = std::pow(in.rho_0, nn - 1.0) * in.R * b_nm1 /
                (nn * std::pow(2.0, nn - 1.0)) * std::pow(one_minus_root, nn);

    r.r_bar_m = (1.0 - a) * in.r_m;
    r.t_am = std::min(r.r_bar_m, 3.0 * a / (in.D * r.r_bar_m * std::pow(nn - 1.0, 3)));
    r.Delta_am = r.t_am * r.t_am /
                 (r.r_bar_m + std::sqrt(std::max(0.0, r.r_bar_m * r.r_bar_m - r.t_am * r.t_am)));
    r.delta_m = std::pow(r.t_am, nn + 1.0) * b_nm1 /
                (std::pow(2.0, 0.5 * (nn - 1.0)) * (nn + 1.0) * r.r_bar_m);

    double bracket2 = 1.0 - std::pow(2.0 / (tau + 1.0), exp_big) / (1.0 - a);
    double bracket1 = 1.0 - std::pow(1.0 + a, (nn - 1.0) / (nn + 1.0)) *
                                (2.0 * tau + 1.0) / (3.0 * tau);
    if (bracket1 < -1e-12 || bracket2 < -1e-12)
        throw numeric_error("threshold: internal consistency failure, negative bracket");
    bracket1 = std::max(bracket1, 0.0);
    bracket2 = std::max(bracket2, 0.0);

    r.delta_2 = std::pow(2.0, 1.5 * (nn + 1.0)) *
                std::pow((1.0 - a) / (1.0 + tau), exp_half) * std::pow(in.r_m, nn) *
                b_nm1 / (nn + 1.0) * std::pow(bracket2, exp_half);

    r.delta_1 = std::pow(bracket1, exp_half) * std::pow(2.0, 0.5 * (nn + 3.0)) * b_nm1 *
                std::pow(1.0 + a, 0.5 * (nn - 1.0)) /
                (std::pow(nn - 1.0, exp_half) * std::pow(in.T_M, exp_half) * (nn + 1.0));

    r.r_bar_M = (1.0 - a) * in.r_M;
    r.R_bar_M = (1.0 + a) * in.r_M;
    r.xi = 1.0 + 0.5 * a;
    r.t_M1 = std::min(r.r_bar_M, 3.0 * a / (in.D * r.r_bar_M * std::pow(nn - 1.0, 3)));
    r.t_M2 = std::min(2.0 * std::sqrt(r.xi - 1.0) / r.xi * r.R_bar_M,
                      3.0 * a / (2.0 * in.D * r.R_bar_M * std::pow(nn - 1.0, 3)));
    r.Delta_aM = std::min(r.t_M1 * r.t_M1 / (2.0 * (1.0 - a) * in.r_M),
                          r.t_M2 * r.t_M2 / (2.0 * (1.0 + a) * in.r_M));
    r.delta_M = 2.0 * b_nm1 / (nn + 1.0) * std::pow(r.r_bar_M, 0.5 * (nn - 1.0)) *
                std::pow(r.Delta_aM, exp_half);

    // As printed, the Delta_{a,M} minimum divides by r_m and by (1-a)*R_bar_M.
    r.Delta_aM_literal = std::min(r.t_M1 * r.t_M1 / (2.0 * (1.0 - a) * in.r_m),
                                  r.t_M2 * r.t_M2 / (2.0 * (1.0 - a) * r.R_bar_M));
    r.delta_M_literal = 2.0 * b_nm1 / (nn + 1.0) * std::pow(r.r_bar_M, 0.5 * (nn - 1.0)) *
                        std::pow(r.Delta_aM_literal, exp_half);

    r.ball_term_m = std::pow(1.0 - a, nn) * std::pow(in.r_m, nn) * b_n / 2.0;
    r.ball_term_M = std::pow(1.0 - a, nn) * std::pow(in.r_M, nn) * b_n / 2.0;

    r.delta_K = std::min({r.delta_0, r.delta_1, r.delta_2, r.delta_m, r.delta_M,
                          r.ball_term_m, r.ball_term_M});
    r.delta_K_literal = std::min({r.delta_0, r.delta_1, r.delta_2, r.delta_m,
                                  r.delta_M_literal, r.ball_term_m, r.ball_term_M});
    return r;
}

void ellipse_rolling_radii(double a, double b, double* rho0, double* big_r) {
    if (!(a > 0.0 && b > 0.0)) throw input_error("ellipse_rolling_radii: need a, b > 0");
    if (a < b) std::swap(a, b);
    if (rho0) *rho0 = b * b / a;
    if (big_r) *big_r = a * a / b;
}

} // namespace floatlab
