/* floatlab C API: convex floating bodies, curvature, homothety analysis.
 *
 * All functions return a status code (FL_OK on success). On failure a
 * thread-local message is available through fl_last_error(). Objects returned
 * through fl_*_create/compute calls are owned by the caller and must be
 * released with the matching fl_*_free function.
 */
#ifndef FLOATLAB_H
#define FLOATLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32
#define FLOATLAB_API __declspec(dllexport)
#else
#define FLOATLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    FL_OK = 0,
    FL_ERR_USAGE = 1,   /* reserved for CLI argument errors */
    FL_ERR_INPUT = 2,   /* bad arguments, malformed specs, domain errors */
    FL_ERR_NUMERIC = 3, /* non-convergence, degenerate results */
    FL_ERR_INTERNAL = 4
};

typedef struct fl_body fl_body;           /* convex body description */
typedef struct fl_chain fl_chain;         /* 2D convex vertex chain */
typedef struct fl_floating fl_floating;   /* floating-body result */
typedef struct fl_petty fl_petty;         /* curvature-functional scan */

/* Message for the most recent failure on this thread. */
FLOATLAB_API const char* fl_last_error(void);

/* Process-wide solver defaults. Set once before computing. */
typedef struct fl_config {
    double tol_vol_rel; /* cut-volume tolerance relative to |K| (default 1e-10) */
    int max_iter;       /* root-solver iteration cap (default 200) */
    uint64_t seed;      /* Monte Carlo seed */
    int mc_grid;        /* stratified cells per axis for 3D Monte Carlo */
} fl_config;
FLOATLAB_API int fl_config_set(const fl_config* cfg);
FLOATLAB_API int fl_config_get(fl_config* cfg);

/* ---- bodies ------------------------------------------------------------ */

/* Parses a body spec (flow-style mapping, see README). */
FLOATLAB_API int fl_body_parse(const char* text, fl_body** out);
FLOATLAB_API int fl_body_parse_file(const char* path, fl_body** out);
/* Serializes with 17 significant digits; free with fl_string_free. */
FLOATLAB_API int fl_body_serialize(const fl_body* body, char** out);
FLOATLAB_API void fl_string_free(char* s);
FLOATLAB_API void fl_body_free(fl_body* body);

FLOATLAB_API int fl_body_dimension(const fl_body* body, int* out);
FLOATLAB_API int fl_body_volume(const fl_body* body, double* out);
FLOATLAB_API int fl_body_centroid(const fl_body* body, double* out);
FLOATLAB_API int fl_body_support(const fl_body* body, const double* u, double* out);
FLOATLAB_API int fl_body_contains(const fl_body* body, const double* x, int* out);
FLOATLAB_API int fl_body_boundary_point(const fl_body* body, const double* u,
                                        double* out_point);
FLOATLAB_API int fl_body_normal_at(const fl_body* body, const double* x,
                                   double* out_normal);
FLOATLAB_API int fl_body_gauss_curvature(const fl_body* body, const double* x,
                                         double* out);
/* Body translated so its centroid is the origin. */
FLOATLAB_API int fl_body_recenter(const fl_body* body, fl_body** out);
/* map: n*n row-major; shift: n entries (NULL for none). */
FLOATLAB_API int fl_body_affine(const fl_body* inner, const double* map,
                                const double* shift, fl_body** out);

FLOATLAB_API int fl_lp_curvature(int n, double p, const double* x, double* out);
FLOATLAB_API int fl_unit_ball_volume(int k, double* out);
FLOATLAB_API int fl_c_constant(int n, double* out);

/* ---- chains ------------------------------------------------------------ */

/* xy: interleaved coordinates of `count` vertices, counterclockwise. */
FLOATLAB_API int fl_chain_create(const double* xy, size_t count, fl_chain** out);
FLOATLAB_API void fl_chain_free(fl_chain* chain);
FLOATLAB_API int fl_chain_size(const fl_chain* chain, size_t* out);
FLOATLAB_API int fl_chain_vertices(const fl_chain* chain, double* xy);
FLOATLAB_API int fl_chain_area(const fl_chain* chain, double* out);
/* Inscribed polygon of a 2D body through m boundary points. */
FLOATLAB_API int fl_body_polygonize(const fl_body* body, size_t m, fl_chain** out);
FLOATLAB_API int fl_body_from_chain(const fl_chain* chain, fl_body** out);

/* Support-sampled Hausdorff distance over 2048 directions. */
FLOATLAB_API int fl_hausdorff(const fl_chain* p, const fl_chain* q, double* out);
FLOATLAB_API int fl_polygon_intersection_area(const fl_chain* p, const fl_chain* q,
                                              double* out);

/* ---- cap volumes -------------------------------------------------------- */

typedef struct fl_cut_result {
    double level;        /* solved cut height t */
    double cap_volume;   /* achieved cap volume */
    double volume_error; /* absolute error bound */
    int iterations;
} fl_cut_result;

FLOATLAB_API int fl_cap_volume(const fl_body* body, const double* u, double t,
                               double* out);
FLOATLAB_API int fl_cut_level(const fl_body* body, const double* u, double delta,
                              fl_cut_result* out);

/* ---- floating bodies ----------------------------------------------------- */

/* m >= 8 directions; estimate_error != 0 adds a Richardson comparison against
 * 2m directions (2D only). */
FLOATLAB_API int fl_floating_body(const fl_body* body, double delta, size_t m,
                                  int estimate_error, fl_floating** out);
FLOATLAB_API void fl_floating_free(fl_floating* fb);
FLOATLAB_API int fl_floating_direction_count(const fl_floating* fb, size_t* out);
/* dirs: m*n entries row-major; levels: m entries. Either may be NULL. */
FLOATLAB_API int fl_floating_table(const fl_floating* fb, double* dirs,
                                   double* levels);
FLOATLAB_API int fl_floating_hull(const fl_floating* fb, fl_chain** out);
FLOATLAB_API int fl_floating_contains(const fl_floating* fb, const double* x,
                                      int* out);
FLOATLAB_API int fl_floating_discretization_error(const fl_floating* fb,
                                                  double* out);
FLOATLAB_API int fl_floating_contained_in_source(const fl_floating* fb, int* out);

/* ---- curvature ----------------------------------------------------------- */

/* q: (n-1)*(n-1) entries row-major; slice_volume may be NULL. */
FLOATLAB_API int fl_q_matrix(const fl_body* body, const double* x, const double* xi,
                             int nodes, double* q, double* slice_volume);
FLOATLAB_API int fl_floating_curvature(const fl_body* body, double delta,
                                       const double* u, double* out);
FLOATLAB_API int fl_limit_ratio(const fl_body* body, const double* x, double delta,
                                double* out);

/* ---- homothety ----------------------------------------------------------- */

typedef struct fl_homothety_result {
    double c;           /* scale factor from the volume ratio */
    double c_lsq;       /* least-squares support fit (diagnostic) */
    double defect;      /* hausdorff(hull, c*K) / min-width(K) */
    double discretization_error;
} fl_homothety_result;

FLOATLAB_API int fl_homothety_defect(const fl_body* body, double delta, size_t m,
                                     fl_homothety_result* out);
FLOATLAB_API int fl_homothety_hull(const fl_body* body, double delta, size_t m,
                                   fl_homothety_result* out, fl_chain** hull);

typedef struct fl_petty_summary {
    double t_min; /* T_m */
    double t_max; /* T_M */
    double tau;   /* +inf when degenerate */
    int degenerate;
} fl_petty_summary;

FLOATLAB_API int fl_petty_scan(const fl_body* body, size_t m, fl_petty** out);
FLOATLAB_API void fl_petty_free(fl_petty* scan);
FLOATLAB_API int fl_petty_summary_get(const fl_petty* scan, fl_petty_summary* out);
FLOATLAB_API int fl_petty_count(const fl_petty* scan, size_t* out);
/* point: n entries; value: the curvature functional at the sample. */
FLOATLAB_API int fl_petty_sample(const fl_petty* scan, size_t i, double* point,
                                 double* value);

typedef struct fl_threshold_inputs {
    int n;
    double tau, T_M, r_m, r_M, D, rho_0, R;
} fl_threshold_inputs;

typedef struct fl_threshold_report {
    double a;
    double delta_0, delta_1, delta_2, delta_m, delta_M;
    double ball_term_m, ball_term_M;
    double delta_K;
    double r_bar_m, r_bar_M, R_bar_M, xi;
    double t_am, t_M1, t_M2;
    double Delta_am, Delta_aM;
    double Delta_aM_literal, delta_M_literal, delta_K_literal;
} fl_threshold_report;

FLOATLAB_API int fl_threshold(const fl_threshold_inputs* in, fl_threshold_report* out);
FLOATLAB_API int fl_threshold_parse_file(const char* path, fl_threshold_inputs* out);

/* ---- generalized bodies --------------------------------------------------- */

/* Hulls come back as chains; a single-vertex chain marks a degenerate point
 * result and an empty chain an empty region. */
FLOATLAB_API int fl_illumination_body(const fl_chain* p, double delta, size_t rays,
                                      fl_chain** out);
FLOATLAB_API int fl_convolution_body(const fl_chain* p, double t, size_t rays,
                                     fl_chain** out);
FLOATLAB_API int fl_santalo_region(const fl_chain* p, double t, size_t rays,
                                   fl_chain** out);
FLOATLAB_API int fl_polar_area(const fl_chain* p, const double* x, double* out);

#ifdef __cplusplus
}
#endif

#endif /* FLOATLAB_H */
