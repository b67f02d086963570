#include "pdc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pdc {

namespace {

struct Range {
  double lo = 0.0, hi = 1.0;

  void widen(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  double span() const { return hi - lo; }
};

Range column_range(const Table& t, std::size_t col) {
  Range r{std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  for (const auto& row : t.rows) r.widen(row[col]);
  if (!(r.lo < r.hi)) {  // flat or empty series: give it some height
    const double c = std::isfinite(r.lo) ? r.lo : 0.0;
    r = {c - 1.0, c + 1.0};
  }
  return r;
}

// Round a tick step to a 1/2/5 decade multiple.
double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  const double nice = frac < 1.5 ? 1.0 : frac < 3.5 ? 2.0 : frac < 7.5 ? 5.0 : 10.0;
  return nice * mag;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

std::string render_line_chart(const Table& t, const ChartSpec& spec) {
  if (t.rows.empty() || t.columns.empty()) {
    throw std::invalid_argument("render_line_chart: empty table");
  }
  if (spec.x_column >= t.columns.size()) {
    throw std::invalid_argument("render_line_chart: x column out of range");
  }
  std::vector<std::size_t> ys = spec.y_columns;
  if (ys.empty()) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c != spec.x_column) ys.push_back(c);
    }
  }
  for (std::size_t c : ys) {
    if (c >= t.columns.size()) {
      throw std::invalid_argument("render_line_chart: y column out of range");
    }
  }

  const double w = spec.width, h = spec.height;
  const double ml = 70, mr = 140, mt = spec.title.empty() ? 20 : 44, mb = 50;
  const double pw = w - ml - mr, ph = h - mt - mb;

  Range xr = column_range(t, spec.x_column);
  Range yr{std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};
  for (std::size_t c : ys) {
    const Range r = column_range(t, c);
    yr.widen(r.lo);
    yr.widen(r.hi);
  }
  if (!(yr.lo < yr.hi)) yr = {yr.lo - 1.0, yr.lo + 1.0};
  // A little vertical headroom.
  const double pad = 0.05 * yr.span();
  yr.lo -= pad;
  yr.hi += pad;

  const auto px = [&](double x) { return ml + (x - xr.lo) / xr.span() * pw; };
  const auto py = [&](double y) { return mt + (yr.hi - y) / yr.span() * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  if (!spec.title.empty()) {
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" "
          "font-size=\"15\">"
       << spec.title << "</text>\n";
  }

  // Axes box and ticks with grid lines.
  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  const double xstep = nice_step(xr.span(), 6);
  for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-12 * xr.span();
       x += xstep) {
    os << "<line x1=\"" << px(x) << "\" y1=\"" << mt << "\" x2=\"" << px(x)
       << "\" y2=\"" << mt + ph << "\" stroke=\"#dddddd\"/>\n"
       << "<text x=\"" << px(x) << "\" y=\"" << mt + ph + 18
       << "\" text-anchor=\"middle\">" << format_number(x) << "</text>\n";
  }
  const double ystep = nice_step(yr.span(), 6);
  for (double y = std::ceil(yr.lo / ystep) * ystep; y <= yr.hi + 1e-12 * yr.span();
       y += ystep) {
    os << "<line x1=\"" << ml << "\" y1=\"" << py(y) << "\" x2=\"" << ml + pw
       << "\" y2=\"" << py(y) << "\" stroke=\"#dddddd\"/>\n"
       << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4
       << "\" text-anchor=\"end\">" << format_number(y) << "</text>\n";
  }

  // Axis titles.
  os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << h - 10
     << "\" text-anchor=\"middle\">" << t.columns[spec.x_column] << "</text>\n";
  os << "<text x=\"16\" y=\"" << mt + ph / 2
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << mt + ph / 2
     << ")\">" << (ys.size() == 1 ? t.columns[ys[0]] : std::string("value"))
     << "</text>\n";

  // One polyline per series plus legend entry.
  for (std::size_t si = 0; si < ys.size(); ++si) {
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(*kPalette))];
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : t.rows) {
      os << px(row[spec.x_column]) << "," << py(row[ys[si]]) << " ";
    }
    os << "\"/>\n";
    const double ly = mt + 16 + 18 * static_cast<double>(si);
    os << "<line x1=\"" << ml + pw + 10 << "\" y1=\"" << ly << "\" x2=\""
       << ml + pw + 34 << "\" y2=\"" << ly << "\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n"
       << "<text x=\"" << ml + pw + 40 << "\" y=\"" << ly + 4 << "\">"
       << t.columns[ys[si]] << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void write_svg_file(const std::string& path, const Table& t,
                    const ChartSpec& spec) {
  const std::string body = render_line_chart(t, spec);
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << body;
  if (!os.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace pdc
