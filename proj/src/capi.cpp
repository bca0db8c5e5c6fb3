#include "floatlab.h"

#include <cstring>
#include <string>

#include "floatlab/body.hpp"
#include "floatlab/cap.hpp"
#include "floatlab/curvature.hpp"
#include "floatlab/errors.hpp"
#include "floatlab/floating.hpp"
#include "floatlab/genbody.hpp"
#include "floatlab/homothety.hpp"
#include "floatlab/spec_io.hpp"

using namespace floatlab;

struct fl_body {
    BodySpec spec;
};
struct fl_chain {
    PolygonChain chain;
};
struct fl_floating {
    FloatingBodyResult result;
};
struct fl_petty {
    PettyScan scan;
    int dimension;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return FL_OK;
    } catch (const input_error& e) {
        g_last_error = e.what();
        return FL_ERR_INPUT;
    } catch (const numeric_error& e) {
        g_last_error = e.what();
        return FL_ERR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FL_ERR_INTERNAL;
    }
}

int require(bool ok, const char* msg) {
    if (ok) return FL_OK;
    g_last_error = msg;
    return FL_ERR_INPUT;
}

Vector to_vector(const double* data, int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = data[i];
    return v;
}

} // namespace

extern "C" {

const char* fl_last_error(void) { return g_last_error.c_str(); }

int fl_config_set(const fl_config* cfg) {
    if (int rc = require(cfg != nullptr, "fl_config_set: null argument")) return rc;
    if (int rc = require(cfg->tol_vol_rel > 0.0 && cfg->max_iter > 0,
                         "fl_config_set: tolerances must be positive"))
        return rc;
    CapOptions& opts = default_cap_options();
    opts.tol_vol_rel = cfg->tol_vol_rel;
    opts.max_iter = cfg->max_iter;
    opts.seed = cfg->seed;
    opts.mc_grid = cfg->mc_grid;
    return FL_OK;
}

int fl_config_get(fl_config* cfg) {
    if (int rc = require(cfg != nullptr, "fl_config_get: null argument")) return rc;
    const CapOptions& opts = default_cap_options();
    cfg->tol_vol_rel = opts.tol_vol_rel;
    cfg->max_iter = opts.max_iter;
    cfg->seed = opts.seed;
    cfg->mc_grid = opts.mc_grid;
    return FL_OK;
}

int fl_body_parse(const char* text, fl_body** out) {
    if (int rc = require(text && out, "fl_body_parse: null argument")) return rc;
    return guarded([&] { *out = new fl_body{parse_body_spec(text)}; });
}

int fl_body_parse_file(const char* path, fl_body** out) {
    if (int rc = require(path && out, "fl_body_parse_file: null argument")) return rc;
    return guarded([&] { *out = new fl_body{load_body_spec(path)}; });
}

int fl_body_serialize(const fl_body* body, char** out) {
    if (int rc = require(body && out, "fl_body_serialize: null argument")) return rc;
    return guarded([&] {
        std::string s = serialize_body_spec(body->spec);
        *out = new char[s.size() + 1];
        std::memcpy(*out, s.c_str(), s.size() + 1);
    });
}

void fl_string_free(char* s) { delete[] s; }
void fl_body_free(fl_body* body) { delete body; }

int fl_body_dimension(const fl_body* body, int* out) {
    if (int rc = require(body && out, "fl_body_dimension: null argument")) return rc;
    *out = body->spec.dimension();
    return FL_OK;
}

int fl_body_volume(const fl_body* body, double* out) {
    if (int rc = require(body && out, "fl_body_volume: null argument")) return rc;
    return guarded([&] { *out = volume(body->spec); });
}

int fl_body_centroid(const fl_body* body, double* out) {
    if (int rc = require(body && out, "fl_body_centroid: null argument")) return rc;
    return guarded([&] {
        Vector c = centroid(body->spec);
        for (int i = 0; i < c.size(); ++i) out[i] = c(i);
    });
}

int fl_body_support(const fl_body* body, const double* u, double* out) {
    if (int rc = require(body && u && out, "fl_body_support: null argument")) return rc;
    return guarded(
        [&] { *out = support(body->spec, to_vector(u, body->spec.dimension())); });
}

int fl_body_contains(const fl_body* body, const double* x, int* out) {
    if (int rc = require(body && x && out, "fl_body_contains: null argument")) return rc;
    return guarded([&] {
        *out = contains(body->spec, to_vector(x, body->spec.dimension())) ? 1 : 0;
    });
}

int fl_body_boundary_point(const fl_body* body, const double* u, double* out_point) {
    if (int rc = require(body && u && out_point, "fl_body_boundary_point: null argument"))
        return rc;
    return guarded([&] {
        Vector p = boundary_point(body->spec, to_vector(u, body->spec.dimension()));
        for (int i = 0; i < p.size(); ++i) out_point[i] = p(i);
    });
}

int fl_body_normal_at(const fl_body* body, const double* x, double* out_normal) {
    if (int rc = require(body && x && out_normal, "fl_body_normal_at: null argument"))
        return rc;
    return guarded([&] {
        Vector n = normal_at(body->spec, to_vector(x, body->spec.dimension()));
        for (int i = 0; i < n.size(); ++i) out_normal[i] = n(i);
    });
}

int fl_body_gauss_curvature(const fl_body* body, const double* x, double* out) {
    if (int rc = require(body && x && out, "fl_body_gauss_curvature: null argument"))
        return rc;
    return guarded([&] {
        *out = gauss_curvature(body->spec, to_vector(x, body->spec.dimension()));
    });
}

int fl_body_recenter(const fl_body* body, fl_body** out) {
    if (int rc = require(body && out, "fl_body_recenter: null argument")) return rc;
    return guarded([&] { *out = new fl_body{recenter(body->spec)}; });
}

int fl_body_affine(const fl_body* inner, const double* map, const double* shift,
                   fl_body** out) {
    if (int rc = require(inner && map && out, "fl_body_affine: null argument")) return rc;
    return guarded([&] {
        int n = inner->spec.dimension();
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = map[i * n + j];
        Vector v = shift ? to_vector(shift, n) : Vector(Vector::Zero(n));
        *out = new fl_body{BodySpec::affine(inner->spec, m, v)};
    });
}

int fl_lp_curvature(int n, double p, const double* x, double* out) {
    if (int rc = require(x && out, "fl_lp_curvature: null argument")) return rc;
    return guarded([&] { *out = lp_curvature(n, p, to_vector(x, n)); });
}

int fl_unit_ball_volume(int k, double* out) {
    if (int rc = require(out != nullptr, "fl_unit_ball_volume: null argument")) return rc;
    return guarded([&] { *out = unit_ball_volume(k); });
}

int fl_c_constant(int n, double* out) {
    if (int rc = require(out != nullptr, "fl_c_constant: null argument")) return rc;
    return guarded([&] { *out = c_constant(n); });
}

int fl_chain_create(const double* xy, size_t count, fl_chain** out) {
    if (int rc = require(xy && out, "fl_chain_create: null argument")) return rc;
    return guarded([&] {
        PolygonChain chain;
        chain.vertices.reserve(count);
        for (size_t i = 0; i < count; ++i)
            chain.vertices.push_back({xy[2 * i], xy[2 * i + 1]});
        *out = new fl_chain{std::move(chain)};
    });
}

void fl_chain_free(fl_chain* chain) { delete chain; }

int fl_chain_size(const fl_chain* chain, size_t* out) {
    if (int rc = require(chain && out, "fl_chain_size: null argument")) return rc;
    *out = chain->chain.size();
    return FL_OK;
}

int fl_chain_vertices(const fl_chain* chain, double* xy) {
    if (int rc = require(chain && xy, "fl_chain_vertices: null argument")) return rc;
    for (size_t i = 0; i < chain->chain.size(); ++i) {
        xy[2 * i] = chain->chain.vertices[i].x;
        xy[2 * i + 1] = chain->chain.vertices[i].y;
    }
    return FL_OK;
}

int fl_chain_area(const fl_chain* chain, double* out) {
    if (int rc = require(chain && out, "fl_chain_area: null argument")) return rc;
    *out = chain->chain.area();
    return FL_OK;
}

int fl_body_polygonize(const fl_body* body, size_t m, fl_chain** out) {
    if (int rc = require(body && out, "fl_body_polygonize: null argument")) return rc;
    return guarded([&] { *out = new fl_chain{polygonize(body->spec, m)}; });
}

int fl_body_from_chain(const fl_chain* chain, fl_body** out) {
    if (int rc = require(chain && out, "fl_body_from_chain: null argument")) return rc;
    return guarded([&] { *out = new fl_body{BodySpec::polygon(chain->chain)}; });
}

int fl_hausdorff(const fl_chain* p, const fl_chain* q, double* out) {
    if (int rc = require(p && q && out, "fl_hausdorff: null argument")) return rc;
    return guarded([&] { *out = hausdorff(p->chain, q->chain); });
}

int fl_polygon_intersection_area(const fl_chain* p, const fl_chain* q, double* out) {
    if (int rc = require(p && q && out, "fl_polygon_intersection_area: null argument"))
        return rc;
    return guarded([&] { *out = polygon_intersection_area(p->chain, q->chain); });
}

int fl_cap_volume(const fl_body* body, const double* u, double t, double* out) {
    if (int rc = require(body && u && out, "fl_cap_volume: null argument")) return rc;
    return guarded([&] {
        *out = cap_volume(body->spec, to_vector(u, body->spec.dimension()), t);
    });
}

int fl_cut_level(const fl_body* body, const double* u, double delta, fl_cut_result* out) {
    if (int rc = require(body && u && out, "fl_cut_level: null argument")) return rc;
    return guarded([&] {
        CutResult r = cut_level(body->spec, to_vector(u, body->spec.dimension()), delta);
        out->level = r.level;
        out->cap_volume = r.cap_volume;
        out->volume_error = r.volume_error;
        out->iterations = r.iterations;
    });
}

int fl_floating_body(const fl_body* body, double delta, size_t m, int estimate_error,
                     fl_floating** out) {
    if (int rc = require(body && out, "fl_floating_body: null argument")) return rc;
    return guarded([&] {
        FloatingBodyOptions opt;
        opt.estimate_discretization = estimate_error != 0;
        *out = new fl_floating{floating_body(body->spec, delta, m, opt)};
    });
}

void fl_floating_free(fl_floating* fb) { delete fb; }

int fl_floating_direction_count(const fl_floating* fb, size_t* out) {
    if (int rc = require(fb && out, "fl_floating_direction_count: null argument"))
        return rc;
    *out = fb->result.directions.size();
    return FL_OK;
}

int fl_floating_table(const fl_floating* fb, double* dirs, double* levels) {
    if (int rc = require(fb != nullptr, "fl_floating_table: null argument")) return rc;
    int n = fb->result.dimension;
    for (size_t i = 0; i < fb->result.directions.size(); ++i) {
        if (dirs)
            for (int j = 0; j < n; ++j)
                dirs[i * static_cast<size_t>(n) + j] = fb->result.directions[i](j);
        if (levels) levels[i] = fb->result.support_levels[i];
    }
    return FL_OK;
}

int fl_floating_hull(const fl_floating* fb, fl_chain** out) {
    if (int rc = require(fb && out, "fl_floating_hull: null argument")) return rc;
    if (fb->result.dimension != 2) {
        g_last_error = "fl_floating_hull: hull is only available in 2D";
        return FL_ERR_INPUT;
    }
    *out = new fl_chain{fb->result.hull};
    return FL_OK;
}

int fl_floating_contains(const fl_floating* fb, const double* x, int* out) {
    if (int rc = require(fb && x && out, "fl_floating_contains: null argument")) return rc;
    *out = fb->result.contains_point(to_vector(x, fb->result.dimension)) ? 1 : 0;
    return FL_OK;
}

int fl_floating_discretization_error(const fl_floating* fb, double* out) {
    if (int rc = require(fb && out, "fl_floating_discretization_error: null argument"))
        return rc;
    *out = fb->result.discretization_error;
    return FL_OK;
}

int fl_floating_contained_in_source(const fl_floating* fb, int* out) {
    if (int rc = require(fb && out, "fl_floating_contained_in_source: null argument"))
        return rc;
    *out = fb->result.contained_in_source ? 1 : 0;
    return FL_OK;
}

int fl_q_matrix(const fl_body* body, const double* x, const double* xi, int nodes,
                double* q, double* slice_volume) {
    if (int rc = require(body && x && xi && q, "fl_q_matrix: null argument")) return rc;
    return guarded([&] {
        int n = body->spec.dimension();
        QMatrix m = q_matrix(body->spec, to_vector(x, n), to_vector(xi, n), nodes);
        int d = n - 1;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) q[i * d + j] = m.entries(i, j);
        if (slice_volume) *slice_volume = m.slice_volume;
    });
}

int fl_floating_curvature(const fl_body* body, double delta, const double* u,
                          double* out) {
    if (int rc = require(body && u && out, "fl_floating_curvature: null argument"))
        return rc;
    return guarded([&] {
        *out = floating_curvature(body->spec, delta,
                                  to_vector(u, body->spec.dimension()));
    });
}

int fl_limit_ratio(const fl_body* body, const double* x, double delta, double* out) {
    if (int rc = require(body && x && out, "fl_limit_ratio: null argument")) return rc;
    return guarded([&] {
        *out = limit_ratio(body->spec, to_vector(x, body->spec.dimension()), delta);
    });
}

int fl_homothety_defect(const fl_body* body, double delta, size_t m,
                        fl_homothety_result* out) {
    return fl_homothety_hull(body, delta, m, out, nullptr);
}

int fl_homothety_hull(const fl_body* body, double delta, size_t m,
                      fl_homothety_result* out, fl_chain** hull) {
    if (int rc = require(body && out, "fl_homothety_defect: null argument")) return rc;
    return guarded([&] {
        HomothetyDefect d = homothety_defect(body->spec, delta, m);
        out->c = d.c;
        out->c_lsq = d.c_lsq;
        out->defect = d.defect;
        out->discretization_error = d.discretization_error;
        if (hull) *hull = new fl_chain{std::move(d.hull)};
    });
}

int fl_petty_scan(const fl_body* body, size_t m, fl_petty** out) {
    if (int rc = require(body && out, "fl_petty_scan: null argument")) return rc;
    return guarded([&] {
        *out = new fl_petty{petty_scan(body->spec, m), body->spec.dimension()};
    });
}

void fl_petty_free(fl_petty* scan) { delete scan; }

int fl_petty_summary_get(const fl_petty* scan, fl_petty_summary* out) {
    if (int rc = require(scan && out, "fl_petty_summary_get: null argument")) return rc;
    out->t_min = scan->scan.t_min;
    out->t_max = scan->scan.t_max;
    out->tau = scan->scan.tau;
    out->degenerate = scan->scan.degenerate ? 1 : 0;
    return FL_OK;
}

int fl_petty_count(const fl_petty* scan, size_t* out) {
    if (int rc = require(scan && out, "fl_petty_count: null argument")) return rc;
    *out = scan->scan.samples.size();
    return FL_OK;
}

int fl_petty_sample(const fl_petty* scan, size_t i, double* point, double* value) {
    if (int rc = require(scan != nullptr, "fl_petty_sample: null argument")) return rc;
    if (i >= scan->scan.samples.size()) {
        g_last_error = "fl_petty_sample: index out of range";
        return FL_ERR_INPUT;
    }
    const auto& s = scan->scan.samples[i];
    if (point)
        for (int j = 0; j < scan->dimension; ++j) point[j] = s.point(j);
    if (value) *value = s.value;
    return FL_OK;
}

int fl_threshold(const fl_threshold_inputs* in, fl_threshold_report* out) {
    if (int rc = require(in && out, "fl_threshold: null argument")) return rc;
    return guarded([&] {
        ThresholdInputs ti{in->n, in->tau, in->T_M, in->r_m, in->r_M, in->D,
                           in->rho_0, in->R};
        ThresholdReport r = threshold(ti);
        out->a = r.a;
        out->delta_0 = r.delta_0;
        out->delta_1 = r.delta_1;
        out->delta_2 = r.delta_2;
        out->delta_m = r.delta_m;
        out->delta_M = r.delta_M;
        out->ball_term_m = r.ball_term_m;
        out->ball_term_M = r.ball_term_M;
        out->delta_K = r.delta_K;
        out->r_bar_m = r.r_bar_m;
        out->r_bar_M = r.r_bar_M;
        out->R_bar_M = r.R_bar_M;
        out->xi = r.xi;
        out->t_am = r.t_am;
        out->t_M1 = r.t_M1;
        out->t_M2 = r.t_M2;
        out->Delta_am = r.Delta_am;
        out->Delta_aM = r.Delta_aM;
        out->Delta_aM_literal = r.Delta_aM_literal;
        out->delta_M_literal = r.delta_M_literal;
        out->delta_K_literal = r.delta_K_literal;
    });
}

int fl_threshold_parse_file(const char* path, fl_threshold_inputs* out) {
    if (int rc = require(path && out, "fl_threshold_parse_file: null argument")) return rc;
    return guarded([&] {
        ThresholdInputs in = load_threshold_inputs(path);
        out->n = in.n;
        out->tau = in.tau;
        out->T_M = in.T_M;
        out->r_m = in.r_m;
        out->r_M = in.r_M;
        out->D = in.D;
        out->rho_0 = in.rho_0;
        out->R = in.R;
    });
}

int fl_illumination_body(const fl_chain* p, double delta, size_t rays, fl_chain** out) {
    if (int rc = require(p && out, "fl_illumination_body: null argument")) return rc;
    return guarded([&] {
        *out = new fl_chain{illumination_body(p->chain, delta, rays).hull};
    });
}

int fl_convolution_body(const fl_chain* p, double t, size_t rays, fl_chain** out) {
    if (int rc = require(p && out, "fl_convolution_body: null argument")) return rc;
    return guarded([&] {
        *out = new fl_chain{convolution_body(p->chain, t, rays).hull};
    });
}

int fl_santalo_region(const fl_chain* p, double t, size_t rays, fl_chain** out) {
    if (int rc = require(p && out, "fl_santalo_region: null argument")) return rc;
    return guarded([&] { *out = new fl_chain{santalo_region(p->chain, t, rays).hull}; });
}

int fl_polar_area(const fl_chain* p, const double* x, double* out) {
    if (int rc = require(p && x && out, "fl_polar_area: null argument")) return rc;
    return guarded([&] { *out = polar_area(p->chain, {x[0], x[1]}); });
}

} // extern "C"
