#include "vloc/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "vloc/liouvillian.hpp"
#include "vloc/steady_state.hpp"

namespace vloc {

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::string(buf);
}

}  // namespace

void export_csv(const LocalizationMap& map, std::ostream& sink) {
  sink << "x,y,im_chi\n";
  const GridSpec& g = map.grid;
  for (int j = 0; j < g.ny; ++j) {
    const double y = g.y(j);
    for (int i = 0; i < g.nx; ++i)
      sink << fmt9(g.x(i)) << ',' << fmt9(y) << ',' << fmt9(map.at(i, j)) << '\n';
  }
  if (!sink) throw Error("csv write failed");
}

LocalizationMap parse_csv(std::istream& source) {
  std::string header;
  if (!std::getline(source, header) || header != "x,y,im_chi")
    throw ParseError(1, "expected header `x,y,im_chi`");

  std::vector<double> xs, ys, vs;
  std::string line;
  int line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    double x, y, v;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &v) != 3)
      throw ParseError(line_no, "expected `x,y,value`");
    xs.push_back(x);
    ys.push_back(y);
    vs.push_back(v);
  }
  if (vs.empty()) throw ParseError(line_no, "no data rows");

  // Row-major y-outer: x cycles fastest.
  int nx = 0;
  while (nx < static_cast<int>(xs.size()) && !(nx > 0 && xs[nx] == xs[0])) ++nx;
  if (nx == 0 || vs.size() % nx != 0)
    throw ParseError(line_no, "rows do not form a rectangular grid");
  const int ny = static_cast<int>(vs.size()) / nx;

  LocalizationMap map;
  map.grid.x_min = xs.front();
  map.grid.x_max = xs[nx - 1];
  map.grid.y_min = ys.front();
  map.grid.y_max = ys.back();
  map.grid.nx = nx;
  map.grid.ny = ny;
  map.values = std::move(vs);
  return map;
}

void export_heatmap(const LocalizationMap& map, std::ostream& sink) {
  const GridSpec& g = map.grid;
  double vmin = map.values[0], vmax = map.values[0];
  for (double v : map.values) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const double scale = std::max(std::abs(vmin), std::abs(vmax));

  sink << "P6\n" << g.nx << ' ' << g.ny << '\n';
  sink << "# im_chi min=" << fmt9(vmin) << " max=" << fmt9(vmax) << '\n';
  sink << "255\n";

  std::string pixels;
  pixels.reserve(static_cast<size_t>(g.nx) * g.ny * 3);
  for (int j = g.ny - 1; j >= 0; --j) {  // top row = y_max
    for (int i = 0; i < g.nx; ++i) {
      const double v = map.at(i, j);
      double s = scale > 0.0 ? v / scale : 0.0;
      s = std::clamp(s, -1.0, 1.0);
      const auto level = [](double t) {
        return static_cast<char>(std::lround(255.0 * t));
      };
      if (s >= 0.0) {  // white -> red
        pixels.push_back(level(1.0));
        pixels.push_back(level(1.0 - s));
        pixels.push_back(level(1.0 - s));
      } else {  // white -> blue
        pixels.push_back(level(1.0 + s));
        pixels.push_back(level(1.0 + s));
        pixels.push_back(level(1.0));
      }
    }
  }
  sink.write(pixels.data(), static_cast<std::streamsize>(pixels.size()));
  if (!sink) throw Error("heatmap write failed");
}

void export_audit(const std::vector<SystemParams>& points, std::ostream& sink) {
  sink << "closed-form vs linear-response first-order rho13\n";
  sink << std::left;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%10s %10s %10s %8s %24s %24s %12s\n", "delta_p",
                "delta_c", "omega_c", "p", "analytic", "numeric", "rel_error");
  sink << buf;
  double max_rel = 0.0;
  for (const auto& pt : points) {
    const PerturbativeComparison cmp = compare_analytic_numeric(pt);
    max_rel = std::max(max_rel, cmp.rel_error);
    char an[32], nu[32];
    std::snprintf(an, sizeof an, "%.6e%+.6ei", cmp.analytic.real(), cmp.analytic.imag());
    std::snprintf(nu, sizeof nu, "%.6e%+.6ei", cmp.numeric.real(), cmp.numeric.imag());
    std::snprintf(buf, sizeof buf, "%10.4g %10.4g %10.4g %8.4f %24s %24s %12.4e\n",
                  pt.delta_p, pt.delta_c, pt.omega_c, pt.p(), an, nu, cmp.rel_error);
    sink << buf;
  }
  sink << "points: " << points.size() << "  max rel_error: ";
  char tail[32];
  std::snprintf(tail, sizeof tail, "%.6e", max_rel);
  sink << tail << '\n';

  // Frozen-population zero-order coherences against the stationary state at
  // omega_p = 0.  Deviations above 1e-8 are flagged; at strong coupling the
  // populations are heavily redistributed, so large flags are expected.
  sink << "\nzero-order coherences vs stationary state at omega_p = 0\n";
  std::snprintf(buf, sizeof buf, "%10s %10s %10s %8s %12s %12s %12s %5s\n", "delta_p",
                "delta_c", "omega_c", "p", "rel_12", "rel_13", "rel_23", "flag");
  sink << buf;
  for (const auto& pt : points) {
    SystemParams dark = pt;
    dark.omega_p = 0.0;
    const auto sol = steady_state(build_liouvillian(dark));
    const ZeroOrderCoherences z = zero_order_coherences(pt);
    // Coherences at roundoff scale carry no information; their relative
    // error is reported but never flagged.
    const auto rel = [](std::complex<double> a, std::complex<double> b) {
      return std::abs(a - b) / std::max(std::abs(b), 1e-300);
    };
    const auto significant = [&](std::complex<double> a, std::complex<double> b) {
      return std::max(std::abs(a), std::abs(b)) > 1e-12;
    };
    const double r12 = rel(z.rho12_0, sol.rho.rho(0, 1));
    const double r13 = rel(z.rho13_0, sol.rho.rho(0, 2));
    const double r23 = rel(z.rho23_0, sol.rho.rho(1, 2));
    const bool flagged =
        (r12 > 1e-8 && significant(z.rho12_0, sol.rho.rho(0, 1))) ||
        (r13 > 1e-8 && significant(z.rho13_0, sol.rho.rho(0, 2))) ||
        (r23 > 1e-8 && significant(z.rho23_0, sol.rho.rho(1, 2)));
    std::snprintf(buf, sizeof buf, "%10.4g %10.4g %10.4g %8.4f %12.4e %12.4e %12.4e %5s\n",
                  pt.delta_p, pt.delta_c, pt.omega_c, pt.p(), r12, r13, r23,
                  flagged ? "*" : "");
    sink << buf;
  }
  if (!sink) throw Error("audit write failed");
}

void export_peaks(const LocalizationMap& map, const PeakSet& peaks,
                  const QuadrantSummary& quadrants, std::ostream& sink) {
  sink << "extrema (prominence threshold " << fmt9(peaks.threshold) << ")\n";
  for (const auto& pk : peaks.peaks)
    sink << (pk.kind == Peak::Kind::kMax ? "max" : "min") << " at (" << fmt9(pk.x)
         << ", " << fmt9(pk.y) << ") value " << fmt9(pk.value) << " prominence "
         << fmt9(pk.prominence) << '\n';
  sink << "quadrant  mass          top_decile    max_abs\n";
  static const char* kNames[4] = {"I", "II", "III", "IV"};
  for (int q = 0; q < 4; ++q) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-9s %-13.6g %-13.6g %-13.6g\n", kNames[q],
                  quadrants.mass[q], quadrants.top_decile_fraction[q],
                  quadrants.max_abs[q]);
    sink << buf;
  }
  if (!sink) throw Error("peaks write failed");
}

}  // namespace vloc
