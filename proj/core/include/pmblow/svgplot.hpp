#pragma once

#include <string>
#include <vector>

namespace pmb {

/// Minimal static vector plots: polylines on linear or log axes, with ticks,
/// labels and an optional vertical marker.  No interactivity.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string x_label, std::string y_label,
            bool log_x = false, bool log_y = false);

    void add_series(std::string name, std::vector<double> x, std::vector<double> y,
                    std::string color);
    void add_vline(double x, std::string color, std::string label);

    std::string render() const;
    void write(const std::string& path) const;

  private:
    struct Series {
        std::string name;
        std::vector<double> x, y;
        std::string color;
    };
    struct VLine {
        double x;
        std::string color;
        std::string label;
    };

    std::string title_, x_label_, y_label_;
    bool log_x_, log_y_;
    std::vector<Series> series_;
    std::vector<VLine> vlines_;
};

} // namespace pmb
