#include "floatlab/floating.hpp"

#include <cmath>
#include <numbers>

#include "floatlab/errors.hpp"
#include "floatlab/parallel.hpp"

namespace floatlab {

bool FloatingBodyResult::contains_point(const Vector& x) const {
    double tol = 1e-12;
    for (const double t : support_levels) tol = std::max(tol, 1e-12 * (1.0 + std::abs(t)));
    for (std::size_t i = 0; i < directions.size(); ++i)
        if (x.dot(directions[i]) > support_levels[i] + tol) return false;
    return true;
}

std::vector<Vector> fibonacci_sphere(std::size_t m) {
    std::vector<Vector> dirs;
    dirs.reserve(m);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < m; ++k) {
        double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(m);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double a = golden * static_cast<double>(k);
        Vector u(3);
        u << r * std::cos(a), r * std::sin(a), z;
        dirs.push_back(u.normalized());
    }
    return dirs;
}

namespace {

FloatingBodyResult build(const BodySpec& k, double delta, std::size_t m,
                         const FloatingBodyOptions& opt) {
    FloatingBodyResult out;
    out.delta = delta;
    out.dimension = k.dimension();

    if (out.dimension == 2) {
        for (const Vec2& u : uniform_directions(m))
            out.directions.push_back(detail::to_vector(u));
    } else {
        out.directions = fibonacci_sphere(m);
    }
    out.support_levels.assign(m, 0.0);

    std::vector<double> errs(m, 0.0);
    parallel_for(m, [&](std::size_t i) {
        if (delta == 0.0) {
            out.support_levels[i] = support(k, out.directions[i]);
        } else {
            CutResult cut = cut_level(k, out.directions[i], delta, opt.cap);
            out.support_levels[i] = cut.level;
            errs[i] = cut.volume_error;
        }
    });
    for (double e : errs) out.max_volume_error = std::max(out.max_volume_error, e);

    if (out.dimension == 2) {
        std::vector<HalfPlane> planes;
        planes.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            planes.push_back({detail::to_vec2(out.directions[i]), out.support_levels[i]});
        try {
            out.hull = halfplane_intersection(planes);
        } catch (const numeric_error& e) {
            throw numeric_error(std::string("floating_body: degenerate result (") +
                                e.what() + ")");
        }
        double tol = 1e-9 * (1.0 + scale_radius(k));
        out.contained_in_source = true;
        for (const Vec2& v : out.hull.vertices) {
            Vector x = detail::to_vector(v);
            if (inside_margin(k, x) > tol) {
                out.contained_in_source = false;
                break;
            }
        }
    } else {
        double tol = 1e-9 * (1.0 + scale_radius(k));
        out.contained_in_source = true;
        for (std::size_t i = 0; i < m; ++i)
            if (out.support_levels[i] > support(k, out.directions[i]) + tol)
                out.contained_in_source = false;
    }
    return out;
}

} // namespace

FloatingBodyResult floating_body(const BodySpec& k, double delta, std::size_t m,
                                 const FloatingBodyOptions& opt) {
    int n = k.dimension();
    if (n != 2 && n != 3) throw input_error("floating_body: dimension 2 or 3 only");
    if (m < 8) throw input_error("floating_body: need m >= 8 directions");
    double total = volume(k);
    if (!(delta >= 0.0) || delta >= 0.5 * total)
        throw input_error("floating_body: delta out of [0, |K|/2)");

    FloatingBodyResult out = build(k, delta, m, opt);
    if (opt.estimate_discretization && n == 2) {
        FloatingBodyOptions plain = opt;
        plain.estimate_discretization = false;
        FloatingBodyResult fine = build(k, delta, 2 * m, plain);
        out.discretization_error = hausdorff_support(out.hull, fine.hull);
    }
    return out;
}

BodySpec apply_affine(const BodySpec& k, const Matrix& map, const Vector& shift) {
    return BodySpec::affine(k, map, shift);
}

} // namespace floatlab
