// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qstrack/harness.hpp"

namespace qstrack {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 76.0;
constexpr double kMarginRight = 180.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 64.0;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"};

std::string num(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

}  // namespace

std::string svg_text(const std::vector<TrajectoryReport>& reports) {
  if (reports.empty()) throw ContractError("svg_text: no reports");
  for (const auto& r : reports) {
    if (r.size() == 0) throw ContractError("svg_text: empty report");
  }

  long kmax = 1;
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = 0.0;
  for (const auto& r : reports) {
    kmax = std::max(kmax, r.k.back());
    for (double v : r.d) {
      if (v > 0.0) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
      }
    }
  }
  if (!(vmax > 0.0)) {  // all-zero series: pick an arbitrary decade range
    vmin = 1e-12;
    vmax = 1.0;
  }
  const double emin = std::floor(std::log10(vmin));
  const double emax = std::ceil(std::log10(vmax * 1.0000001));
  const double span = std::max(1.0, emax - emin);

  const double pw = kWidth - kMarginLeft - kMarginRight;
  const double ph = kHeight - kMarginTop - kMarginBottom;
  const auto xmap = [&](double k) {
    return kmax > 1 ? kMarginLeft + (k - 1.0) / (double(kmax) - 1.0) * pw
                    : kMarginLeft + 0.5 * pw;
  };
  const auto ymap = [&](double v) {
    const double clamped = std::max(v, vmin);
    return kMarginTop + (emax - std::log10(clamped)) / span * ph;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">online reconstruction "
         "accuracy</text>\n";

  // axes
  const double x0 = kMarginLeft, x1 = kMarginLeft + pw;
  const double y0 = kMarginTop + ph, y1 = kMarginTop;
  svg << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\""
      << num(x1) << "\" y2=\"" << num(y0) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\""
      << num(x0) << "\" y2=\"" << num(y1) << "\" stroke=\"black\"/>\n";

  // y ticks at decades
  const int estep = span > 8 ? int(std::ceil(span / 8.0)) : 1;
  for (int e = int(emin); e <= int(emax); e += estep) {
    const double y = ymap(std::pow(10.0, e));
    svg << "<line x1=\"" << num(x0 - 4) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(x0) << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(x0 - 8) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">1e" << e << "</text>\n";
  }
  // x ticks
  const int nticks = 5;
  for (int t = 0; t <= nticks; ++t) {
    const double k = 1.0 + (double(kmax) - 1.0) * t / nticks;
    const double x = xmap(k);
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\""
        << num(x) << "\" y2=\"" << num(y0 + 4) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(x) << "\" y=\"" << num(y0 + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" << long(std::lround(k)) << "</text>\n";
  }
  svg << "<text x=\"" << num(x0 + pw / 2) << "\" y=\"" << num(kHeight - 18)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">sampling time k</text>\n";
  svg << "<text x=\"20\" y=\"" << num(y1 + ph / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 20 " << num(y1 + ph / 2)
      << ")\">normalized distance D</text>\n";

  for (std::size_t r = 0; r < reports.size(); ++r) {
    const auto& rep = reports[r];
    const char* color = kColors[r % 4];
    if (rep.size() == 1) {
      svg << "<circle cx=\"" << num(xmap(double(rep.k[0]))) << "\" cy=\""
          << num(ymap(rep.d[0])) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    } else {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < rep.size(); ++i) {
        if (i) svg << ' ';
        svg << num(xmap(double(rep.k[i]))) << ',' << num(ymap(rep.d[i]));
      }
      svg << "\"/>\n";
    }
    // legend
    const double ly = kMarginTop + 16.0 + 22.0 * double(r);
    const double lx = x1 + 16.0;
    svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(lx + 28) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(lx + 34) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << rep.algorithm
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qstrack
