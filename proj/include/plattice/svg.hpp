#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "plattice/homology.hpp"

namespace plat {

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline double to_double(const Rational& r) {
    return rat_num(r).convert_to<double>() / rat_den(r).convert_to<double>();
}

inline const char* dim_color(int dim) {
    static const char* palette[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                                    "#66ccee", "#aa3377"};
    return palette[dim % 6];
}

} // namespace detail

/// Barcode view: one horizontal bar per curve step per dimension, labelled
/// with the step's rank. Geometry is fixed, so output is stable across runs.
inline std::string barcode_svg(const std::vector<BettiCurve>& curves) {
    using detail::svg_num;
    using detail::to_double;

    double t0 = 0, t1 = 1;
    bool seen = false;
    for (const BettiCurve& curve : curves)
        for (const BettiStep& step : curve.steps) {
            double s = to_double(step.start), e = to_double(step.end);
            if (!seen) {
                t0 = s;
                t1 = e;
                seen = true;
            }
            t0 = std::min(t0, s);
            t1 = std::max(t1, e);
        }
    if (t1 <= t0)
        t1 = t0 + 1;
    const double left = 60, width = 540, row = 44, top = 30;
    auto x_of = [&](double t) { return left + (t - t0) / (t1 - t0) * width; };
    double height = top + row * static_cast<double>(curves.size()) + 30;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" +
                      svg_num(height) + "\" viewBox=\"0 0 640 " + svg_num(height) + "\">\n";
    out += "<line x1=\"" + svg_num(left) + "\" y1=\"" + svg_num(height - 24) + "\" x2=\"" +
           svg_num(left + width) + "\" y2=\"" + svg_num(height - 24) +
           "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const BettiCurve& curve = curves[i];
        double y = top + row * static_cast<double>(i);
        out += "<text x=\"8\" y=\"" + svg_num(y + 14) + "\" font-size=\"13\">H" +
               std::to_string(curve.dimension) + "</text>\n";
        for (const BettiStep& step : curve.steps) {
            double xs = x_of(to_double(step.start));
            double xe = x_of(to_double(step.end));
            double opacity = step.rank == 0 ? 0.08 : std::min(0.35 + 0.2 * step.rank, 1.0);
            out += "<rect x=\"" + svg_num(xs) + "\" y=\"" + svg_num(y) + "\" width=\"" +
                   svg_num(std::max(xe - xs, 1.0)) + "\" height=\"16\" fill=\"" +
                   detail::dim_color(curve.dimension) + "\" fill-opacity=\"" +
                   svg_num(opacity) + "\"/>\n";
            out += "<text x=\"" + svg_num((xs + xe) / 2) + "\" y=\"" + svg_num(y + 13) +
                   "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(step.rank) +
                   "</text>\n";
        }
        // tick labels along the axis from the first curve's boundaries
        if (i == 0)
            for (const BettiStep& step : curve.steps) {
                out += "<text x=\"" + svg_num(x_of(to_double(step.start))) + "\" y=\"" +
                       svg_num(height - 8) + "\" font-size=\"10\" text-anchor=\"middle\">" +
                       to_string(step.start) + "</text>\n";
                out += "<text x=\"" + svg_num(x_of(to_double(step.end))) + "\" y=\"" +
                       svg_num(height - 8) + "\" font-size=\"10\" text-anchor=\"middle\">" +
                       to_string(step.end) + "</text>\n";
            }
    }
    out += "</svg>\n";
    return out;
}

/// Diagram view: carrier square with the diagonal, one marker per point,
/// radius scaled by multiplicity.
inline std::string diagram_svg(const PersistenceDiagram& d, const Bounds& bounds) {
    using detail::svg_num;
    using detail::to_double;

    const double margin = 50, side = 400;
    double e1 = to_double(bounds.eps1());
    double e2 = to_double(bounds.eps2());
    auto x_of = [&](double b) { return margin + b / e1 * side; };
    auto y_of = [&](double dth) { return margin + side - dth / e2 * side; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
                      "viewBox=\"0 0 500 500\">\n";
    out += "<rect x=\"" + svg_num(margin) + "\" y=\"" + svg_num(margin) + "\" width=\"" +
           svg_num(side) + "\" height=\"" + svg_num(side) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
    double diag = std::min(e1, e2);
    out += "<line x1=\"" + svg_num(x_of(0)) + "\" y1=\"" + svg_num(y_of(0)) + "\" x2=\"" +
           svg_num(x_of(diag)) + "\" y2=\"" + svg_num(y_of(diag)) +
           "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    out += "<text x=\"" + svg_num(margin + side / 2) +
           "\" y=\"490\" font-size=\"12\" text-anchor=\"middle\">birth (0 to " +
           to_string(bounds.eps1()) + ")</text>\n";
    out += "<text x=\"14\" y=\"" + svg_num(margin + side / 2) +
           "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
           svg_num(margin + side / 2) + ")\">death (0 to " + to_string(bounds.eps2()) +
           ")</text>\n";
    for (const auto& [point, mult] : d.points) {
        double r = 4.0 * std::sqrt(static_cast<double>(mult));
        out += "<circle cx=\"" + svg_num(x_of(to_double(point.x1()))) + "\" cy=\"" +
               svg_num(y_of(to_double(point.x2()))) + "\" r=\"" + svg_num(r) +
               "\" fill=\"#4477aa\" fill-opacity=\"0.7\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace plat
