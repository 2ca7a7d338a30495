#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace olu {

/// Static SVG line chart, enough for the result figures: polyline series,
/// min/max bands, a dashed reference line, optional log-log axes.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label,
          bool log_x = false, bool log_y = false)
      : title_(std::move(title)),
        x_label_(std::move(x_label)),
        y_label_(std::move(y_label)),
        log_x_(log_x),
        log_y_(log_y) {}

  void add_series(const std::string& name, std::vector<double> xs,
                  std::vector<double> ys) {
    series_.push_back({name, std::move(xs), std::move(ys)});
  }

  void add_band(std::vector<double> xs, std::vector<double> lo,
                std::vector<double> hi, std::size_t color_of_series) {
    bands_.push_back({std::move(xs), std::move(lo), std::move(hi),
                      color_of_series});
  }

  void add_hline(double y, const std::string& label) {
    hlines_.push_back({y, label});
  }

  // Renders the chart body into `out` at the given offset (used for
  // multi-panel figures); standalone documents come from render().
  void render_into(std::ostringstream& out, double x0, double y0) const {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto eat = [&](double x, double y) {
      xmin = std::min(xmin, tx(x));
      xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, ty(y));
      ymax = std::max(ymax, ty(y));
    };
    for (const auto& s : series_) {
      for (std::size_t i = 0; i < s.xs.size(); ++i) eat(s.xs[i], s.ys[i]);
    }
    for (const auto& b : bands_) {
      for (std::size_t i = 0; i < b.xs.size(); ++i) {
        eat(b.xs[i], b.lo[i]);
        eat(b.xs[i], b.hi[i]);
      }
    }
    for (const auto& [y, label] : hlines_) eat(log_x_ ? 1.0 : xmin, y);
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    const double pad_y = 0.06 * (ymax - ymin);
    ymin -= pad_y;
    ymax += pad_y;

    auto px = [&](double x) {
      return x0 + kMarginL +
             (tx(x) - xmin) / (xmax - xmin) * (kPanelW - kMarginL - kMarginR);
    };
    auto py = [&](double y) {
      return y0 + kMarginT +
             (ymax - ty(y)) / (ymax - ymin) * (kPanelH - kMarginT - kMarginB);
    };

    out << "<rect x='" << x0 + kMarginL << "' y='" << y0 + kMarginT
        << "' width='" << kPanelW - kMarginL - kMarginR << "' height='"
        << kPanelH - kMarginT - kMarginB
        << "' fill='white' stroke='#888'/>\n";
    out << "<text x='" << x0 + kPanelW / 2 << "' y='" << y0 + 16
        << "' text-anchor='middle' font-size='13'>" << title_ << "</text>\n";
    out << "<text x='" << x0 + kPanelW / 2 << "' y='" << y0 + kPanelH - 4
        << "' text-anchor='middle' font-size='11'>" << x_label_ << "</text>\n";
    out << "<text x='" << x0 + 12 << "' y='" << y0 + kPanelH / 2
        << "' text-anchor='middle' font-size='11' transform='rotate(-90 "
        << x0 + 12 << ' ' << y0 + kPanelH / 2 << ")'>" << y_label_
        << "</text>\n";

    // axis ticks: 5 ticks per axis in transformed space
    for (int k = 0; k <= 4; ++k) {
      const double fx = xmin + (xmax - xmin) * k / 4.0;
      const double fy = ymin + (ymax - ymin) * k / 4.0;
      out << "<text x='" << x0 + kMarginL +
                 (kPanelW - kMarginL - kMarginR) * k / 4.0
          << "' y='" << y0 + kPanelH - kMarginB + 14
          << "' text-anchor='middle' font-size='9'>" << tick_label(fx, log_x_)
          << "</text>\n";
      out << "<text x='" << x0 + kMarginL - 4 << "' y='"
          << y0 + kPanelH - kMarginB -
                 (kPanelH - kMarginT - kMarginB) * k / 4.0 + 3
          << "' text-anchor='end' font-size='9'>" << tick_label(fy, log_y_)
          << "</text>\n";
    }

    for (const auto& b : bands_) {
      out << "<polygon points='";
      for (std::size_t i = 0; i < b.xs.size(); ++i) {
        out << px(b.xs[i]) << ',' << py(b.hi[i]) << ' ';
      }
      for (std::size_t i = b.xs.size(); i-- > 0;) {
        out << px(b.xs[i]) << ',' << py(b.lo[i]) << ' ';
      }
      out << "' fill='" << color(b.color_index) << "' fill-opacity='0.15' "
          << "stroke='none'/>\n";
    }
    for (const auto& [y, label] : hlines_) {
      out << "<line x1='" << x0 + kMarginL << "' y1='" << py(y) << "' x2='"
          << x0 + kPanelW - kMarginR << "' y2='" << py(y)
          << "' stroke='#444' stroke-dasharray='5,4'/>\n";
      out << "<text x='" << x0 + kPanelW - kMarginR - 2 << "' y='"
          << py(y) - 3 << "' text-anchor='end' font-size='9'>" << label
          << "</text>\n";
    }
    for (std::size_t si = 0; si < series_.size(); ++si) {
      const auto& s = series_[si];
      out << "<polyline fill='none' stroke='" << color(si)
          << "' stroke-width='1.5' points='";
      for (std::size_t i = 0; i < s.xs.size(); ++i) {
        out << px(s.xs[i]) << ',' << py(s.ys[i]) << ' ';
      }
      out << "'/>\n";
      out << "<text x='" << x0 + kMarginL + 8 << "' y='"
          << y0 + kMarginT + 14 + 13 * double(si) << "' font-size='10' fill='"
          << color(si) << "'>" << s.name << "</text>\n";
    }
  }

  std::string render() const {
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kPanelW
        << "' height='" << kPanelH << "'>\n";
    render_into(out, 0, 0);
    out << "</svg>\n";
    return out.str();
  }

  static std::string render_panels(const std::vector<SvgPlot>& panels) {
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='"
        << kPanelW * double(panels.size()) << "' height='" << kPanelH
        << "'>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
      panels[i].render_into(out, kPanelW * double(i), 0);
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  struct Series {
    std::string name;
    std::vector<double> xs, ys;
  };
  struct Band {
    std::vector<double> xs, lo, hi;
    std::size_t color_index;
  };

  static constexpr double kPanelW = 420, kPanelH = 320;
  static constexpr double kMarginL = 52, kMarginR = 12, kMarginT = 26,
                          kMarginB = 38;

  double tx(double x) const { return log_x_ ? std::log10(x) : x; }
  double ty(double y) const { return log_y_ ? std::log10(y) : y; }

  static std::string tick_label(double transformed, bool log_scale) {
    char buf[32];
    if (log_scale) {
      std::snprintf(buf, sizeof(buf), "%.3g", std::pow(10.0, transformed));
    } else {
      std::snprintf(buf, sizeof(buf), "%.3g", transformed);
    }
    return buf;
  }

  static const char* color(std::size_t i) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    return palette[i % 6];
  }

  std::string title_, x_label_, y_label_;
  bool log_x_, log_y_;
  std::vector<Series> series_;
  std::vector<Band> bands_;
  std::vector<std::pair<double, std::string>> hlines_;
};

}  // namespace olu
