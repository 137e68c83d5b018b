// svg.cpp -- minimal chart rendering.

#include "conlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace conlab {

namespace {

constexpr double kWidth = 720, kHeight = 420;
constexpr double kLeft = 64, kRight = 24, kTop = 40, kBottom = 44;

const char* kPalette[] = {"#1b6ca8", "#c84b31", "#2d6a4f", "#845ec2",
                          "#b07d2b", "#5f6f94"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void take(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (lo > hi) {
      lo = 0;
      hi = 1;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

class Canvas {
 public:
  Canvas(const std::string& title, Range xr, Range yr) : xr_(xr), yr_(yr) {
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
             "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
             " " + num(kHeight) + "\">\n";
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    body_ += "<text x=\"" + num(kWidth / 2) +
             "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" "
             "text-anchor=\"middle\">" +
             escape(title) + "</text>\n";
    frame();
  }

  double px(double x) const {
    return kLeft + (x - xr_.lo) / (xr_.hi - xr_.lo) * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    return kHeight - kBottom -
           (y - yr_.lo) / (yr_.hi - yr_.lo) * (kHeight - kTop - kBottom);
  }

  void polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                const char* color) {
    if (xs.empty()) return;
    body_ += "<polyline fill=\"none\" stroke=\"";
    body_ += color;
    body_ += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) body_ += ' ';
      body_ += num(px(xs[i])) + "," + num(py(ys[i]));
    }
    body_ += "\"/>\n";
  }

  void segment(double x0, double y0, double x1, double y1, const char* color,
               double width) {
    body_ += "<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y0)) +
             "\" x2=\"" + num(px(x1)) + "\" y2=\"" + num(py(y1)) +
             "\" stroke=\"" + color + "\" stroke-width=\"" + num(width) +
             "\"/>\n";
  }

  void legend(const std::vector<std::string>& names) {
    double y = kTop + 14;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
      body_ += "<rect x=\"" + num(kLeft + 10) + "\" y=\"" + num(y - 9) +
               "\" width=\"14\" height=\"4\" fill=\"" + color + "\"/>\n";
      body_ += "<text x=\"" + num(kLeft + 30) + "\" y=\"" + num(y - 3) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape(names[i]) + "</text>\n";
      y += 18;
    }
  }

  void write(const std::string& path) {
    body_ += "</svg>\n";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body_;
  }

 private:
  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '&')
        r += "&amp;";
      else if (c == '<')
        r += "&lt;";
      else if (c == '>')
        r += "&gt;";
      else
        r += c;
    }
    return r;
  }

  void frame() {
    body_ += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
             num(kWidth - kLeft - kRight) + "\" height=\"" +
             num(kHeight - kTop - kBottom) +
             "\" fill=\"none\" stroke=\"#444444\"/>\n";
    for (int i = 0; i <= 4; ++i) {
      const double fx = xr_.lo + (xr_.hi - xr_.lo) * i / 4;
      const double fy = yr_.lo + (yr_.hi - yr_.lo) * i / 4;
      body_ += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kHeight - kBottom + 16) +
               "\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"middle\">" +
               num(fx) + "</text>\n";
      body_ += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(fy) + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"end\">" +
               num(fy) + "</text>\n";
    }
  }

  Range xr_, yr_;
  std::string body_;
};

}  // namespace

void write_line_chart(const std::string& path, const std::string& title,
                      const std::vector<Series>& series) {
  Range xr, yr;
  for (const Series& s : series) {
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("write_line_chart: ragged series " + s.name);
    for (double v : s.x) xr.take(v);
    for (double v : s.y) yr.take(v);
  }
  xr.finish();
  yr.finish();
  Canvas canvas(title, xr, yr);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < series.size(); ++i) {
    canvas.polyline(series[i].x, series[i].y,
                    kPalette[i % (sizeof kPalette / sizeof *kPalette)]);
    names.push_back(series[i].name);
  }
  canvas.legend(names);
  canvas.write(path);
}

void write_bar_chart(const std::string& path, const std::string& title,
                     const std::vector<std::pair<double, double>>& bars) {
  Range xr, yr;
  for (const auto& [b, d] : bars) {
    xr.take(b);
    xr.take(d);
  }
  yr.take(0.0);
  yr.take(bars.empty() ? 1.0 : (double)bars.size() + 1.0);
  xr.finish();
  yr.finish();
  Canvas canvas(title, xr, yr);
  for (std::size_t i = 0; i < bars.size(); ++i)
    canvas.segment(bars[i].first, (double)i + 1, bars[i].second, (double)i + 1,
                   kPalette[0], 4.0);
  canvas.write(path);
}

}  // namespace conlab
