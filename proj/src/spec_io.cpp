#include "floatlab/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <yaml-cpp/yaml.h>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_number(const YAML::Node& node, const char* what) {
    if (!node || !node.IsScalar())
        throw input_error(std::string("body spec: missing numeric field '") + what + "'");
    std::string s = node.Scalar();
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "inf" || lower == ".inf" || lower == "infinity")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw input_error(std::string("body spec: field '") + what +
                          "' is not a number: " + s);
    }
}

Matrix parse_matrix(const YAML::Node& node, const char* what) {
    if (!node || !node.IsSequence() || node.size() == 0)
        throw input_error(std::string("body spec: '") + what + "' must be a matrix");
    std::size_t rows = node.size();
    std::size_t cols = node[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!node[i].IsSequence() || node[i].size() != cols)
            throw input_error(std::string("body spec: ragged matrix in '") + what + "'");
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                parse_number(node[i][j], what);
    }
    return m;
}

Vector parse_vector(const YAML::Node& node, const char* what) {
    if (!node || !node.IsSequence())
        throw input_error(std::string("body spec: '") + what + "' must be a list");
    Vector v(static_cast<Eigen::Index>(node.size()));
    for (std::size_t i = 0; i < node.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = parse_number(node[i], what);
    return v;
}

BodySpec from_node(const YAML::Node& node) {
    if (!node.IsMap()) throw input_error("body spec: expected a mapping");
    std::string kind = node["kind"] ? node["kind"].as<std::string>() : "";
    if (kind == "lp_ball") {
        int n = static_cast<int>(parse_number(node["n"], "n"));
        double p = parse_number(node["p"], "p");
        if (p < 1.0) throw input_error("body spec: p must be >= 1");
        return BodySpec::lp_ball(n, p);
    }
    if (kind == "polygon") {
        const YAML::Node verts = node["vertices"];
        if (!verts || !verts.IsSequence())
            throw input_error("body spec: polygon needs a 'vertices' list");
        PolygonChain chain;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            Vector v = parse_vector(verts[i], "vertices");
            if (v.size() != 2) throw input_error("body spec: polygon vertices must be 2D");
            chain.vertices.push_back({v(0), v(1)});
        }
        return BodySpec::polygon(std::move(chain));
    }
    if (kind == "ellipsoid") {
        Matrix shape = parse_matrix(node["shape"], "shape");
        Vector center = node["center"] ? parse_vector(node["center"], "center")
                                       : Vector(Vector::Zero(shape.rows()));
        return BodySpec::ellipsoid(std::move(shape), std::move(center));
    }
    if (kind == "affine") {
        if (!node["inner"]) throw input_error("body spec: affine needs 'inner'");
        BodySpec inner = from_node(node["inner"]);
        Matrix map = parse_matrix(node["map"], "map");
        Vector shift = node["shift"] ? parse_vector(node["shift"], "shift")
                                     : Vector(Vector::Zero(map.rows()));
        return BodySpec::affine(std::move(inner), std::move(map), std::move(shift));
    }
    throw input_error("body spec: unknown kind '" + kind +
                      "' (expected lp_ball | polygon | ellipsoid | affine)");
}

YAML::Node load_yaml(const std::string& text) {
    try {
        return YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw input_error("syntax error at line " + std::to_string(e.mark.line + 1) +
                          ", column " + std::to_string(e.mark.column + 1) + ": " +
                          e.msg);
    } catch (const YAML::Exception& e) {
        throw input_error(std::string("syntax error: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void serialize_into(const BodySpec& k, std::string& out) {
    if (const auto* lp = k.as_lp_ball()) {
        out += "{kind: lp_ball, n: " + std::to_string(lp->n) + ", p: " + fmt(lp->p) + "}";
        return;
    }
    if (const auto* poly = k.as_polygon()) {
        out += "{kind: polygon, vertices: [";
        for (std::size_t i = 0; i < poly->chain.size(); ++i) {
            if (i) out += ", ";
            out += "[" + fmt(poly->chain.vertices[i].x) + ", " +
                   fmt(poly->chain.vertices[i].y) + "]";
        }
        out += "]}";
        return;
    }
    auto emit_matrix = [&](const Matrix& m) {
        out += "[";
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i) out += ", ";
            out += "[";
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                if (j) out += ", ";
                out += fmt(m(i, j));
            }
            out += "]";
        }
        out += "]";
    };
    auto emit_vector = [&](const Vector& v) {
        out += "[";
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += fmt(v(i));
        }
        out += "]";
    };
    if (const auto* el = k.as_ellipsoid()) {
        out += "{kind: ellipsoid, shape: ";
        emit_matrix(el->shape);
        out += ", center: ";
        emit_vector(el->center);
        out += "}";
        return;
    }
    const auto* af = k.as_affine();
    out += "{kind: affine, inner: ";
    serialize_into(*af->inner, out);
    out += ", map: ";
    emit_matrix(af->map);
    out += ", shift: ";
    emit_vector(af->shift);
    out += "}";
}

} // namespace

BodySpec parse_body_spec(const std::string& text) { return from_node(load_yaml(text)); }

BodySpec load_body_spec(const std::string& path) {
    return parse_body_spec(read_file(path));
}

std::string serialize_body_spec(const BodySpec& k) {
    std::string out;
    serialize_into(k, out);
    return out;
}

ThresholdInputs parse_threshold_inputs(const std::string& text) {
    YAML::Node node = load_yaml(text);
    if (!node.IsMap()) throw input_error("threshold inputs: expected a mapping");
    ThresholdInputs in;
    in.n = static_cast<int>(parse_number(node["n"], "n"));
    in.tau = parse_number(node["tau"], "tau");
    in.T_M = parse_number(node["T_M"], "T_M");
    in.r_m = parse_number(node["r_m"], "r_m");
    in.r_M = parse_number(node["r_M"], "r_M");
    in.D = parse_number(node["D"], "D");
    in.rho_0 = parse_number(node["rho_0"], "rho_0");
    in.R = parse_number(node["R"], "R");
    return in;
}

ThresholdInputs load_threshold_inputs(const std::string& path) {
    return parse_threshold_inputs(read_file(path));
}

} // namespace floatlab
