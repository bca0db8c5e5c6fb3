// floatlab CLI: batch workflows over the floatlab C API.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 numeric error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "floatlab.h"
#include "output.hpp"

namespace {

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(int rc, const char* what) {
    if (rc == FL_OK) return;
    int code = rc == FL_ERR_INPUT ? 2 : 3;
    fail(code, std::string(what) + ": " + fl_last_error());
}

using BodyPtr = std::unique_ptr<fl_body, decltype(&fl_body_free)>;
using ChainPtr = std::unique_ptr<fl_chain, decltype(&fl_chain_free)>;

BodyPtr load_body(const std::string& path) {
    fl_body* raw = nullptr;
    check(fl_body_parse_file(path.c_str(), &raw), "loading body spec");
    return BodyPtr(raw, &fl_body_free);
}

std::vector<double> parse_dir(const std::string& text, int dim) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    if (static_cast<int>(v.size()) != dim)
        fail(1, "direction needs " + std::to_string(dim) + " comma-separated entries");
    double n = 0.0;
    for (double c : v) n += c * c;
    n = std::sqrt(n);
    if (n == 0.0) fail(1, "direction must be nonzero");
    for (double& c : v) c /= n;
    return v;
}

std::vector<double> chain_xy(const fl_chain* chain) {
    size_t count = 0;
    fl_chain_size(chain, &count);
    std::vector<double> xy(2 * count);
    if (count) fl_chain_vertices(chain, xy.data());
    return xy;
}

cli::SvgPath body_outline(const fl_body* body, const std::string& stroke,
                          bool dashed = false, double scale = 1.0) {
    fl_chain* raw = nullptr;
    check(fl_body_polygonize(body, 512, &raw), "polygonizing body");
    ChainPtr chain(raw, &fl_chain_free);
    cli::SvgPath path;
    path.xy = chain_xy(chain.get());
    for (double& c : path.xy) c *= scale;
    path.stroke = stroke;
    path.dashed = dashed;
    return path;
}

void write_chain_csv(const std::string& path, const fl_chain* chain) {
    cli::CsvWriter csv(path, {"index", "x", "y"});
    auto xy = chain_xy(chain);
    for (size_t i = 0; 2 * i < xy.size(); ++i)
        csv.row({std::to_string(i), cli::num17(xy[2 * i]), cli::num17(xy[2 * i + 1])});
}

// ---- subcommand payloads ---------------------------------------------------

struct CommonOpts {
    std::string body_path;
    std::size_t m = 720;
    std::string out_csv, out_hull, out_svg;
};

int run_float(const CommonOpts& o, double delta) {
    BodyPtr body = load_body(o.body_path);
    int dim = 0;
    fl_body_dimension(body.get(), &dim);
    fl_floating* raw = nullptr;
    check(fl_floating_body(body.get(), delta, o.m, 0, &raw), "floating body");
    std::unique_ptr<fl_floating, decltype(&fl_floating_free)> fb(raw, &fl_floating_free);

    size_t count = 0;
    fl_floating_direction_count(fb.get(), &count);
    std::vector<double> dirs(count * dim), levels(count);
    fl_floating_table(fb.get(), dirs.data(), levels.data());

    if (!o.out_csv.empty()) {
        std::vector<std::string> header = {"index", "angle", "ux", "uy", "cut_level"};
        if (dim == 3) header = {"index", "ux", "uy", "uz", "cut_level"};
        cli::CsvWriter csv(o.out_csv, header);
        for (size_t i = 0; i < count; ++i) {
            if (dim == 2) {
                double ang = std::atan2(dirs[2 * i + 1], dirs[2 * i]);
                if (ang < 0.0) ang += 2.0 * std::numbers::pi;
                csv.row({std::to_string(i), cli::num17(ang), cli::num17(dirs[2 * i]),
                         cli::num17(dirs[2 * i + 1]), cli::num17(levels[i])});
            } else {
                csv.row({std::to_string(i), cli::num17(dirs[3 * i]),
                         cli::num17(dirs[3 * i + 1]), cli::num17(dirs[3 * i + 2]),
                         cli::num17(levels[i])});
            }
        }
    }

    if (dim == 2) {
        fl_chain* hull_raw = nullptr;
        check(fl_floating_hull(fb.get(), &hull_raw), "hull");
        ChainPtr hull(hull_raw, &fl_chain_free);
        size_t hv = 0;
        fl_chain_size(hull.get(), &hv);
        double area = 0.0;
        fl_chain_area(hull.get(), &area);
        if (!o.out_hull.empty()) write_chain_csv(o.out_hull, hull.get());
        if (!o.out_svg.empty()) {
            cli::SvgPath hp;
            hp.xy = chain_xy(hull.get());
            hp.stroke = "#1f6fd0";
            cli::write_svg(o.out_svg, {body_outline(body.get(), "#777777"), hp});
        }
        std::cout << "floating body: delta=" << delta << " m=" << o.m
                  << " hull_vertices=" << hv << " hull_area=" << cli::num17(area) << "\n";
    } else {
        std::cout << "floating body: delta=" << delta << " m=" << o.m
                  << " (3D halfspace table)\n";
    }
    return 0;
}

int run_curvature(const CommonOpts& o, double delta, const std::string& dir) {
    BodyPtr body = load_body(o.body_path);
    int dim = 0;
    fl_body_dimension(body.get(), &dim);
    auto u = parse_dir(dir, dim);
    double kappa = 0.0;
    check(fl_floating_curvature(body.get(), delta, u.data(), &kappa),
          "floating curvature");
    if (!o.out_csv.empty()) {
        std::vector<std::string> header = {"delta"};
        for (int i = 0; i < dim; ++i) header.push_back("u" + std::to_string(i));
        header.push_back("curvature");
        cli::CsvWriter csv(o.out_csv, header);
        std::vector<std::string> row = {cli::num17(delta)};
        for (int i = 0; i < dim; ++i) row.push_back(cli::num17(u[i]));
        row.push_back(cli::num17(kappa));
        csv.row(row);
    }
    std::cout << "floating curvature: delta=" << delta << " kappa=" << cli::num17(kappa)
              << "\n";
    return 0;
}

int run_limit_study(const CommonOpts& o, const std::string& dir,
                    const std::string& deltas_text) {
    BodyPtr body = load_body(o.body_path);
    int dim = 0;
    fl_body_dimension(body.get(), &dim);
    auto u = parse_dir(dir, dim);
    std::vector<double> x(dim);
    check(fl_body_boundary_point(body.get(), u.data(), x.data()), "boundary point");
    double kappa = 0.0;
    check(fl_body_gauss_curvature(body.get(), x.data(), &kappa), "gauss curvature");
    double target = std::pow(kappa, 1.0 / (dim + 1.0));

    std::vector<double> deltas;
    std::stringstream ss(deltas_text);
    std::string cell;
    while (std::getline(ss, cell, ',')) deltas.push_back(std::stod(cell));
    if (deltas.empty()) fail(1, "limit-study needs at least one delta");

    std::unique_ptr<cli::CsvWriter> csv;
    if (!o.out_csv.empty())
        csv = std::make_unique<cli::CsvWriter>(
            o.out_csv,
            std::vector<std::string>{"delta", "ratio", "target", "abs_err"});
    std::cout << "limit study: target kappa^(1/(n+1)) = " << cli::num17(target) << "\n";
    for (double d : deltas) {
        double ratio = 0.0;
        check(fl_limit_ratio(body.get(), x.data(), d, &ratio), "limit ratio");
        double err = std::abs(ratio - target);
        if (csv)
            csv->row({cli::num17(d), cli::num17(ratio), cli::num17(target),
                      cli::num17(err)});
        std::cout << "  delta=" << cli::num17(d) << " ratio=" << cli::num17(ratio)
                  << " abs_err=" << cli::num17(err) << "\n";
    }
    return 0;
}

int run_homothety(const CommonOpts& o, double delta, double class_tol) {
    BodyPtr body = load_body(o.body_path);
    int dim = 0;
    fl_body_dimension(body.get(), &dim);
    if (dim != 2) fail(2, "homothety-check supports 2D bodies");
    fl_homothety_result res{};
    fl_chain* hull_raw = nullptr;
    check(fl_homothety_hull(body.get(), delta, o.m, &res, &hull_raw), "homothety check");
    ChainPtr hull(hull_raw, &fl_chain_free);

    double tol = std::max(class_tol, 5.0 * res.discretization_error);
    bool homothetic = res.defect <= tol;
    if (!o.out_csv.empty()) {
        cli::CsvWriter csv(o.out_csv, {"delta", "m", "c", "c_lsq", "defect",
                                       "discretization_error", "classification_tol",
                                       "homothetic"});
        csv.row({cli::num17(delta), std::to_string(o.m), cli::num17(res.c),
                 cli::num17(res.c_lsq), cli::num17(res.defect),
                 cli::num17(res.discretization_error), cli::num17(tol),
                 homothetic ? "1" : "0"});
    }
    if (!o.out_hull.empty()) write_chain_csv(o.out_hull, hull.get());
    if (!o.out_svg.empty()) {
        fl_body* centered_raw = nullptr;
        check(fl_body_recenter(body.get(), &centered_raw), "recenter");
        BodyPtr centered(centered_raw, &fl_body_free);
        cli::SvgPath hp;
        hp.xy = chain_xy(hull.get());
        hp.stroke = "#1f6fd0";
        cli::write_svg(o.out_svg,
                       {body_outline(centered.get(), "#777777"), hp,
                        body_outline(centered.get(), "#d03030", true, res.c)});
    }
    std::cout << "homothety check: delta=" << delta << " m=" << o.m
              << " c=" << cli::num17(res.c) << " defect=" << cli::num17(res.defect)
              << " disc_err=" << cli::num17(res.discretization_error) << "\n"
              << (homothetic ? "homothetic" : "NOT homothetic")
              << " at resolution m=" << o.m
              << " (numerical verdict at tolerance " << cli::num17(tol)
              << ", not a proof)\n";
    return 0;
}

int run_petty(const CommonOpts& o) {
    BodyPtr body = load_body(o.body_path);
    int dim = 0;
    fl_body_dimension(body.get(), &dim);
    fl_petty* raw = nullptr;
    check(fl_petty_scan(body.get(), o.m, &raw), "petty scan");
    std::unique_ptr<fl_petty, decltype(&fl_petty_free)> scan(raw, &fl_petty_free);
    fl_petty_summary s{};
    fl_petty_summary_get(scan.get(), &s);
    if (!o.out_csv.empty()) {
        std::vector<std::string> header = {"index"};
        for (int i = 0; i < dim; ++i) header.push_back("x" + std::to_string(i));
        header.push_back("functional");
        cli::CsvWriter csv(o.out_csv, header);
        size_t count = 0;
        fl_petty_count(scan.get(), &count);
        std::vector<double> pt(dim);
        for (size_t i = 0; i < count; ++i) {
            double value = 0.0;
            fl_petty_sample(scan.get(), i, pt.data(), &value);
            std::vector<std::string> row = {std::to_string(i)};
            for (int j = 0; j < dim; ++j) row.push_back(cli::num17(pt[j]));
            row.push_back(cli::num17(value));
            csv.row(row);
        }
    }
    std::cout << "petty scan: m=" << o.m << " T_m=" << cli::num17(s.t_min)
              << " T_M=" << cli::num17(s.t_max) << " tau=" << cli::num17(s.tau)
              << " degenerate=" << (s.degenerate ? "yes" : "no") << "\n";
    if (s.degenerate)
        std::cout << "degenerate curvature (0 or infinite) found: the body cannot be "
                     "homothetic to its floating bodies at small delta\n";
    return 0;
}

int run_threshold(const std::string& inputs_path, const std::string& out_csv,
                  bool paper_literal) {
    fl_threshold_inputs in{};
    check(fl_threshold_parse_file(inputs_path.c_str(), &in), "loading threshold inputs");
    fl_threshold_report r{};
    check(fl_threshold(&in, &r), "threshold");
    double chosen = paper_literal ? r.delta_K_literal : r.delta_K;
    if (!out_csv.empty()) {
        cli::CsvWriter csv(out_csv, {"component", "value"});
        csv.row({"a", cli::num17(r.a)});
        csv.row({"delta_0", cli::num17(r.delta_0)});
        csv.row({"delta_1", cli::num17(r.delta_1)});
        csv.row({"delta_2", cli::num17(r.delta_2)});
        csv.row({"delta_m", cli::num17(r.delta_m)});
        csv.row({"delta_M", cli::num17(r.delta_M)});
        csv.row({"delta_M_literal", cli::num17(r.delta_M_literal)});
        csv.row({"ball_term_m", cli::num17(r.ball_term_m)});
        csv.row({"ball_term_M", cli::num17(r.ball_term_M)});
        csv.row({"delta_K", cli::num17(r.delta_K)});
        csv.row({"delta_K_literal", cli::num17(r.delta_K_literal)});
        csv.row({"t_am", cli::num17(r.t_am)});
        csv.row({"t_M1", cli::num17(r.t_M1)});
        csv.row({"t_M2", cli::num17(r.t_M2)});
        csv.row({"Delta_am", cli::num17(r.Delta_am)});
        csv.row({"Delta_aM", cli::num17(r.Delta_aM)});
        csv.row({"Delta_aM_literal", cli::num17(r.Delta_aM_literal)});
        csv.row({"xi", cli::num17(r.xi)});
    }
    std::cout << "threshold: a=" << cli::num17(r.a) << " delta_0=" << cli::num17(r.delta_0)
              << " delta_1=" << cli::num17(r.delta_1) << " delta_2=" << cli::num17(r.delta_2)
              << " delta_m=" << cli::num17(r.delta_m) << " delta_M=" << cli::num17(r.delta_M)
              << "\ndelta(K)=" << cli::num17(chosen)
              << (paper_literal ? " (paper-literal delta_M branch)" : "") << "\n";
    return 0;
}

int run_genbody(const CommonOpts& o, const std::string& kind, double param,
                std::size_t rays, std::size_t poly_m) {
    BodyPtr body = load_body(o.body_path);
    int dim = 0;
    fl_body_dimension(body.get(), &dim);
    if (dim != 2) fail(2, "genbody supports 2D bodies");
    fl_chain* poly_raw = nullptr;
    check(fl_body_polygonize(body.get(), poly_m, &poly_raw), "polygonizing body");
    ChainPtr poly(poly_raw, &fl_chain_free);

    fl_chain* hull_raw = nullptr;
    if (kind == "illumination")
        check(fl_illumination_body(poly.get(), param, rays, &hull_raw), "illumination body");
    else if (kind == "convolution")
        check(fl_convolution_body(poly.get(), param, rays, &hull_raw), "convolution body");
    else if (kind == "santalo")
        check(fl_santalo_region(poly.get(), param, rays, &hull_raw), "santalo region");
    else
        fail(1, "unknown genbody kind: " + kind);
    ChainPtr hull(hull_raw, &fl_chain_free);

    size_t hv = 0;
    fl_chain_size(hull.get(), &hv);
    double area = 0.0;
    fl_chain_area(hull.get(), &area);
    if (!o.out_hull.empty()) write_chain_csv(o.out_hull, hull.get());
    if (!o.out_svg.empty()) {
        cli::SvgPath hp;
        hp.xy = chain_xy(hull.get());
        hp.stroke = "#1f6fd0";
        cli::write_svg(o.out_svg, {body_outline(body.get(), "#777777"), hp});
    }
    std::cout << "genbody " << kind << ": param=" << cli::num17(param)
              << " rays=" << rays << " hull_vertices=" << hv
              << " hull_area=" << cli::num17(area);
    if (hv == 0) std::cout << " (empty region)";
    if (hv == 1) std::cout << " (degenerate point)";
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"floatlab: convex floating bodies, curvature and homothety analysis"};
    app.require_subcommand(1);

    double tol_vol = 1e-10;
    std::uint64_t seed = 20240915u;
    double class_tol = 1e-3;
    app.add_option("--tol-vol", tol_vol, "cut volume tolerance relative to |K|");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--class-tol", class_tol, "homothety classification tolerance");

    CommonOpts c_float, c_curv, c_limit, c_hom, c_petty, c_gen;
    double delta_float = 0.1, delta_curv = 0.1, delta_hom = 0.1;
    std::string dir_curv = "1,0", dir_limit = "0,1", deltas_limit = "1e-2,1e-3,1e-4";
    std::string thr_inputs, thr_csv, gen_kind;
    double gen_param = 0.1;
    std::size_t gen_rays = 720, gen_poly_m = 2048;
    bool paper_literal = false;

    auto add_common = [&](CLI::App* sub, CommonOpts& o) {
        sub->add_option("--body", o.body_path, "body spec file")->required();
        sub->add_option("--m", o.m, "number of directions");
        sub->add_option("--out-csv", o.out_csv, "table output path");
        sub->add_option("--out-hull", o.out_hull, "hull vertices output path");
        sub->add_option("--out-svg", o.out_svg, "overlay output path");
    };

    auto* s_float = app.add_subcommand("float", "construct a floating body");
    add_common(s_float, c_float);
    s_float->add_option("--delta", delta_float, "cap volume")->required();

    auto* s_curv = app.add_subcommand("curvature", "floating-body curvature via Q");
    add_common(s_curv, c_curv);
    s_curv->add_option("--delta", delta_curv, "cap volume")->required();
    s_curv->add_option("--dir", dir_curv, "outward direction, comma separated");

    auto* s_limit = app.add_subcommand("limit-study", "radial shrink ratio vs delta");
    add_common(s_limit, c_limit);
    s_limit->add_option("--dir", dir_limit, "boundary point direction");
    s_limit->add_option("--deltas", deltas_limit, "comma-separated deltas");

    auto* s_hom = app.add_subcommand("homothety-check", "floating-body homothety defect");
    add_common(s_hom, c_hom);
    s_hom->add_option("--delta", delta_hom, "cap volume")->required();

    auto* s_petty = app.add_subcommand("petty-scan", "curvature functional scan");
    add_common(s_petty, c_petty);

    auto* s_thr = app.add_subcommand("threshold", "explicit smallness threshold");
    s_thr->add_option("--inputs", thr_inputs, "threshold inputs file")->required();
    s_thr->add_option("--out-csv", thr_csv, "report output path");
    s_thr->add_flag("--paper-literal", paper_literal,
                    "use the as-printed delta_M branch in delta(K)");

    auto* s_gen = app.add_subcommand("genbody", "illumination/convolution/santalo bodies");
    add_common(s_gen, c_gen);
    s_gen->add_option("--kind", gen_kind, "illumination | convolution | santalo")
        ->required();
    s_gen->add_option("--param", gen_param, "delta or t")->required();
    s_gen->add_option("--rays", gen_rays, "ray count");
    s_gen->add_option("--poly-m", gen_poly_m, "polygonization resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 1;
    }

    fl_config cfg{};
    fl_config_get(&cfg);
    cfg.tol_vol_rel = tol_vol;
    cfg.seed = seed;
    if (fl_config_set(&cfg) != FL_OK) {
        std::cerr << "error: " << fl_last_error() << "\n";
        return 1;
    }

    try {
        if (s_float->parsed()) return run_float(c_float, delta_float);
        if (s_curv->parsed()) return run_curvature(c_curv, delta_curv, dir_curv);
        if (s_limit->parsed()) return run_limit_study(c_limit, dir_limit, deltas_limit);
        if (s_hom->parsed()) return run_homothety(c_hom, delta_hom, class_tol);
        if (s_petty->parsed()) return run_petty(c_petty);
        if (s_thr->parsed()) return run_threshold(thr_inputs, thr_csv, paper_literal);
        if (s_gen->parsed())
            return run_genbody(c_gen, gen_kind, gen_param, gen_rays, gen_poly_m);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
