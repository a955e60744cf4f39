#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sircli {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 620.0;
constexpr double kMarginL = 80.0, kMarginR = 30.0, kMarginT = 30.0,
                 kMarginB = 60.0;

struct Range {
  double lo = 0.0, hi = 1.0;

  void widen(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi <= lo) {
      lo -= 0.5;
      hi += 0.5;
    } else {
      const double m = 0.03 * (hi - lo);
      lo -= m;
      hi += m;
    }
  }
};

Range column_range(const CsvTable& t, int col) {
  Range r;
  bool first = true;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double v = cell_number(t, i, col);
    if (first) {
      r.lo = r.hi = v;
      first = false;
    } else {
      r.widen(v);
    }
  }
  r.pad();
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// One cartesian panel with axes, tick labels at the extremes, and titles.
class Panel {
 public:
  Panel(std::ostringstream& out, double top, double bottom, Range x, Range y,
        const std::string& xlabel, const std::string& ylabel)
      : out_(out), top_(top), bottom_(bottom), x_(x), y_(y) {
    out_ << "<rect x='" << kMarginL << "' y='" << top_ << "' width='"
         << kWidth - kMarginL - kMarginR << "' height='" << bottom_ - top_
         << "' fill='none' stroke='black'/>\n";
    out_ << "<text x='" << (kMarginL + kWidth - kMarginR) / 2 << "' y='"
         << bottom_ + 36 << "' text-anchor='middle' font-size='14'>" << xlabel
         << "</text>\n";
    out_ << "<text x='" << kMarginL - 56 << "' y='" << (top_ + bottom_) / 2
         << "' text-anchor='middle' font-size='14' transform='rotate(-90 "
         << kMarginL - 56 << " " << (top_ + bottom_) / 2 << ")'>" << ylabel
         << "</text>\n";
    tick_labels();
  }

  double px(double v) const {
    return kMarginL +
           (v - x_.lo) / (x_.hi - x_.lo) * (kWidth - kMarginL - kMarginR);
  }
  double py(double v) const {
    return bottom_ - (v - y_.lo) / (y_.hi - y_.lo) * (bottom_ - top_);
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& color, const std::string& dash = "") {
    if (pts.empty()) return;
    out_ << "<polyline fill='none' stroke='" << color << "'";
    if (!dash.empty()) out_ << " stroke-dasharray='" << dash << "'";
    out_ << " points='";
    for (const auto& [x, y] : pts) out_ << px(x) << "," << py(y) << " ";
    out_ << "'/>\n";
  }

  void dot(double x, double y, const std::string& color, double rpx = 1.2) {
    out_ << "<circle cx='" << px(x) << "' cy='" << py(y) << "' r='" << rpx
         << "' fill='" << color << "'/>\n";
  }

  void rect(double x0, double x1, double y0, double y1,
            const std::string& fill) {
    const double rx = px(x0), ry = py(y1);
    out_ << "<rect x='" << rx << "' y='" << ry << "' width='"
         << px(x1) - px(x0) << "' height='" << py(y0) - ry << "' fill='"
         << fill << "' stroke='none'/>\n";
  }

  void hline(double y, const std::string& color, const std::string& dash) {
    polyline({{x_.lo, y}, {x_.hi, y}}, color, dash);
  }

 private:
  void tick_labels() {
    out_ << "<text x='" << kMarginL << "' y='" << bottom_ + 18
         << "' text-anchor='middle' font-size='12'>" << fmt(x_.lo)
         << "</text>\n";
    out_ << "<text x='" << kWidth - kMarginR << "' y='" << bottom_ + 18
         << "' text-anchor='middle' font-size='12'>" << fmt(x_.hi)
         << "</text>\n";
    out_ << "<text x='" << kMarginL - 8 << "' y='" << bottom_
         << "' text-anchor='end' font-size='12'>" << fmt(y_.lo) << "</text>\n";
    out_ << "<text x='" << kMarginL - 8 << "' y='" << top_ + 12
         << "' text-anchor='end' font-size='12'>" << fmt(y_.hi) << "</text>\n";
  }

  std::ostringstream& out_;
  double top_, bottom_;
  Range x_, y_;
};

int need_column(const CsvTable& t, const std::string& name) {
  const int c = t.column(name);
  if (c < 0) throw UsageError("CSV is missing column '" + name + "'");
  return c;
}

std::vector<std::pair<double, double>> series(const CsvTable& t, int xc,
                                              int yc) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    pts.emplace_back(cell_number(t, i, xc), cell_number(t, i, yc));
  return pts;
}

void render_timeseries(const CsvTable& t, std::ostringstream& out) {
  const int tc = need_column(t, "t");
  const int sc = need_column(t, "S");
  const int ic = need_column(t, "I");
  const int s2 = t.column("S2");
  const int i2 = t.column("I2");

  const Range xr = t.rows.empty() ? Range{} : column_range(t, tc);
  Range sr = t.rows.empty() ? Range{} : column_range(t, sc);
  Range ir = t.rows.empty() ? Range{} : column_range(t, ic);
  if (s2 >= 0 && !t.rows.empty()) {
    const Range r2 = column_range(t, s2);
    sr.widen(r2.lo);
    sr.widen(r2.hi);
  }
  if (i2 >= 0 && !t.rows.empty()) {
    const Range r2 = column_range(t, i2);
    ir.widen(r2.lo);
    ir.widen(r2.hi);
  }

  const double mid = (kMarginT + kHeight - kMarginB) / 2;
  Panel top(out, kMarginT, mid - 24, xr, sr, "", "S");
  Panel bot(out, mid + 24, kHeight - kMarginB, xr, ir, "t (years)", "I");
  if (!t.rows.empty()) {
    top.polyline(series(t, tc, sc), "#1f6f43");
    bot.polyline(series(t, tc, ic), "#1f6f43");
    if (s2 >= 0) top.polyline(series(t, tc, s2), "#d7263d");
    if (i2 >= 0) bot.polyline(series(t, tc, i2), "#d7263d");
  }
}

void render_bifurcation(const CsvTable& t, std::ostringstream& out) {
  const int pc = need_column(t, "param");
  const int sc = need_column(t, "S");
  const Range xr = t.rows.empty() ? Range{} : column_range(t, pc);
  const Range yr = t.rows.empty() ? Range{} : column_range(t, sc);
  Panel panel(out, kMarginT, kHeight - kMarginB, xr, yr, "parameter", "S");
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    panel.dot(cell_number(t, i, pc), cell_number(t, i, sc), "#27496d", 0.9);
}

void render_lyapunov(const CsvTable& t, std::ostringstream& out) {
  const int pc = need_column(t, "param");
  const int lc = need_column(t, "lambda1");
  const Range xr = t.rows.empty() ? Range{} : column_range(t, pc);
  Range yr = t.rows.empty() ? Range{} : column_range(t, lc);
  yr.widen(0.0);
  yr.pad();
  Panel panel(out, kMarginT, kHeight - kMarginB, xr, yr, "parameter",
              "lambda1 (1/year)");
  if (!t.rows.empty()) {
    panel.hline(0.0, "#888888", "6,4");
    panel.polyline(series(t, pc, lc), "#27496d");
  }
}

const char* bin_color(const std::string& bin) {
  if (bin == "blue") return "#3a6fd8";
  if (bin == "green") return "#2f9e44";
  if (bin == "red") return "#d7263d";
  if (bin == "orange") return "#f28c28";
  return "#ffffff";
}

void render_density(const CsvTable& t, std::ostringstream& out) {
  const int pc = need_column(t, "phi");
  const int ac = need_column(t, "alpha");
  const int bc = need_column(t, "bin");

  std::set<double> phis, alphas;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    phis.insert(cell_number(t, i, pc));
    alphas.insert(cell_number(t, i, ac));
  }

  Range xr, yr;
  if (!t.rows.empty()) {
    xr = {*phis.begin(), *phis.rbegin()};
    yr = {*alphas.begin(), *alphas.rbegin()};
  }
  // half-cell padding so edge cells are fully visible
  const double dx =
      phis.size() > 1 ? (xr.hi - xr.lo) / double(phis.size() - 1) : 1.0;
  const double dy =
      alphas.size() > 1 ? (yr.hi - yr.lo) / double(alphas.size() - 1) : 1.0;
  xr.lo -= dx / 2;
  xr.hi += dx / 2;
  yr.lo -= dy / 2;
  yr.hi += dy / 2;
  if (t.rows.empty()) {
    xr = {0, 1};
    yr = {0, 1};
  }

  Panel panel(out, kMarginT, kHeight - kMarginB, xr, yr, "phi (radians)",
              "alpha (1/year)");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double phi = cell_number(t, i, pc);
    const double alpha = cell_number(t, i, ac);
    const std::string& bin = t.rows[i][static_cast<std::size_t>(bc)];
    panel.rect(phi - dx / 2, phi + dx / 2, alpha - dy / 2, alpha + dy / 2,
               bin_color(bin));
  }
}

}  // namespace

void render_svg(const CsvTable& table, const std::string& kind,
                const std::string& out_path) {
  std::ostringstream body;
  if (kind == "timeseries")
    render_timeseries(table, body);
  else if (kind == "bifurcation")
    render_bifurcation(table, body);
  else if (kind == "lyapunov-curve")
    render_lyapunov(table, body);
  else if (kind == "density")
    render_density(table, body);
  else
    throw UsageError("unknown plot kind '" + kind + "'");

  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open '" + out_path + "' for writing");
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
      << "' height='" << kHeight << "' viewBox='0 0 " << kWidth << " "
      << kHeight << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << body.str() << "</svg>\n";
  out.flush();
  if (!out) throw IoError("write failure on '" + out_path + "'");
}

}  // namespace sircli
