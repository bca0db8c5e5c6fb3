#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

inline std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// CSV writer with a fixed header; numbers at 17 significant digits so two
// runs with identical configuration produce byte-identical files.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header)
        : out_(path) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out_ << ',';
            out_ << header[i];
        }
        out_ << '\n';
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

struct SvgPath {
    std::vector<double> xy; // interleaved
    std::string stroke;
    bool closed = true;
    bool dashed = false;
};

// Diagnostic overlay; never an acceptance surface.
inline void write_svg(const std::string& path, const std::vector<SvgPath>& paths) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.xy.size(); i += 2) {
            xmin = std::min(xmin, p.xy[i]);
            xmax = std::max(xmax, p.xy[i]);
            ymin = std::min(ymin, p.xy[i + 1]);
            ymax = std::max(ymax, p.xy[i + 1]);
        }
    if (xmin > xmax) { xmin = ymin = -1.0; xmax = ymax = 1.0; }
    double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
    xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;
    double w = xmax - xmin, h = ymax - ymin;
    double s = 640.0 / std::max(w, h);

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num17(w * s)
        << "\" height=\"" << num17(h * s) << "\">\n";
    for (const auto& p : paths) {
        out << "<polyline fill=\"none\" stroke=\"" << p.stroke << "\"";
        if (p.dashed) out << " stroke-dasharray=\"6 4\"";
        out << " points=\"";
        auto emit = [&](double x, double y) {
            out << num17((x - xmin) * s) << ',' << num17((ymax - y) * s) << ' ';
        };
        for (std::size_t i = 0; i + 1 < p.xy.size(); i += 2) emit(p.xy[i], p.xy[i + 1]);
        if (p.closed && p.xy.size() >= 2) emit(p.xy[0], p.xy[1]);
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace cli
