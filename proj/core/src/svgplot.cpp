#include "pmblow/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pmblow/errors.hpp"
#include "pmblow/table.hpp"

namespace pmb {

namespace {
constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;
} // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label, bool log_x,
                 bool log_y)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)),
      log_x_(log_x),
      log_y_(log_y) {}

void SvgPlot::add_series(std::string name, std::vector<double> x, std::vector<double> y,
                         std::string color) {
    series_.push_back({std::move(name), std::move(x), std::move(y), std::move(color)});
}

void SvgPlot::add_vline(double x, std::string color, std::string label) {
    vlines_.push_back({x, std::move(color), std::move(label)});
}

std::string SvgPlot::render() const {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    auto admit_x = [&](double v) { return !log_x_ || v > 0.0; };
    auto admit_y = [&](double v) { return !log_y_ || v > 0.0; };
    for (const auto& s : series_) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!admit_x(s.x[i]) || !admit_y(s.y[i])) continue;
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            y_min = std::min(y_min, s.y[i]);
            y_max = std::max(y_max, s.y[i]);
        }
    }
    if (!(x_min < x_max)) { x_min -= 1.0; x_max = x_min + 2.0; }
    if (!(y_min < y_max)) { y_min -= 1.0; y_max = y_min + 2.0; }

    auto fx = [&](double v) {
        const double lo = log_x_ ? std::log10(x_min) : x_min;
        const double hi = log_x_ ? std::log10(x_max) : x_max;
        const double t = ((log_x_ ? std::log10(v) : v) - lo) / (hi - lo);
        return kMarginLeft + t * (kWidth - kMarginLeft - kMarginRight);
    };
    auto fy = [&](double v) {
        const double lo = log_y_ ? std::log10(y_min) : y_min;
        const double hi = log_y_ ? std::log10(y_max) : y_max;
        const double t = ((log_y_ ? std::log10(v) : v) - lo) / (hi - lo);
        return kHeight - kMarginBottom - t * (kHeight - kMarginTop - kMarginBottom);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title_ << "</text>\n";

    // axes
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom << "\" x2=\""
        << kWidth - kMarginRight << "\" y2=\"" << kHeight - kMarginBottom
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label_ << "</text>\n";
    svg << "<text x=\"16\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
        << kHeight / 2 << ")\">" << y_label_ << "</text>\n";

    // ticks
    for (int k = 0; k <= 5; ++k) {
        const double tx = x_min + (x_max - x_min) * k / 5.0;
        const double ty = y_min + (y_max - y_min) * k / 5.0;
        const double vx = log_x_ ? x_min * std::pow(x_max / x_min, k / 5.0) : tx;
        const double vy = log_y_ ? y_min * std::pow(y_max / y_min, k / 5.0) : ty;
        svg << "<text x=\"" << fx(vx) << "\" y=\"" << kHeight - kMarginBottom + 16
            << "\" text-anchor=\"middle\" font-size=\"10\">" << format_double(vx)
            << "</text>\n";
        svg << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << fy(vy) + 3
            << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(vy) << "</text>\n";
    }

    for (const auto& line : vlines_) {
        if (!admit_x(line.x)) continue;
        svg << "<line x1=\"" << fx(line.x) << "\" y1=\"" << kMarginTop << "\" x2=\""
            << fx(line.x) << "\" y2=\"" << kHeight - kMarginBottom << "\" stroke=\""
            << line.color << "\" stroke-dasharray=\"6 3\"/>\n";
        svg << "<text x=\"" << fx(line.x) + 4 << "\" y=\"" << kMarginTop + 12
            << "\" font-size=\"10\" fill=\"" << line.color << "\">" << line.label
            << "</text>\n";
    }

    double legend_y = kMarginTop + 14.0;
    for (const auto& s : series_) {
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!admit_x(s.x[i]) || !admit_y(s.y[i])) continue;
            svg << fx(s.x[i]) << ',' << fy(s.y[i]) << ' ';
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << kWidth - kMarginRight - 150 << "\" y=\"" << legend_y
            << "\" font-size=\"11\" fill=\"" << s.color << "\">" << s.name << "</text>\n";
        legend_y += 14.0;
    }
    svg << "</svg>\n";
    return svg.str();
}

void SvgPlot::write(const std::string& path) const {
    std::ofstream file(path);
    if (!file) throw Error("cannot write plot: " + path);
    file << render();
}

} // namespace pmb
