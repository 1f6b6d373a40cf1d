#include "vloc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace vloc {

namespace {

// -1 for no quadrant (axis node), otherwise 0..3 for I..IV.
int quadrant_index(double x, double y) {
  if (x == 0.0 || y == 0.0) return -1;
  if (x > 0.0) return y > 0.0 ? 0 : 3;
  return y > 0.0 ? 1 : 2;
}

}  // namespace

PeakSet find_extrema(const LocalizationMap& map, double prominence) {
  if (prominence < 0.0) throw RangeError("prominence must be non-negative");
  const GridSpec& g = map.grid;
  const int nx = g.nx, ny = g.ny;
  const size_t n = map.values.size();

  std::vector<double> mag(n);
  for (size_t k = 0; k < n; ++k) mag[k] = std::abs(map.values[k]);

  // Superlevel filtration of the magnitude surface.  Sweeping from the top,
  // each new summit births a component; when a component meets a taller one
  // at a saddle, the summit's prominence is its height above that saddle.
  std::vector<size_t> order(n);
  for (size_t k = 0; k < n; ++k) order[k] = k;
  auto lex_less = [nx](size_t a, size_t b) {
    const int ia = static_cast<int>(a) % nx, ja = static_cast<int>(a) / nx;
    const int ib = static_cast<int>(b) % nx, jb = static_cast<int>(b) / nx;
    return ia != ib ? ia < ib : ja < jb;
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return mag[a] != mag[b] ? mag[a] > mag[b] : lex_less(a, b);
  });

  constexpr size_t kUnseen = static_cast<size_t>(-1);
  std::vector<size_t> parent(n, kUnseen);
  std::vector<size_t> summit(n);  // root -> birth node of the component
  std::vector<std::pair<size_t, double>> prominences;  // (summit node, value)

  std::function<size_t(size_t)> find = [&](size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };

  for (size_t node : order) {
    parent[node] = node;
    summit[node] = node;
    for (int dj = -1; dj <= 1; ++dj) {
      for (int di = -1; di <= 1; ++di) {
        if (di == 0 && dj == 0) continue;
        const int ni = static_cast<int>(node) % nx + di;
        const int nj = static_cast<int>(node) / nx + dj;
        if (ni < 0 || ni >= nx || nj < 0 || nj >= ny) continue;
        const size_t other = static_cast<size_t>(nj) * nx + ni;
        if (parent[other] == kUnseen) continue;
        const size_t ra = find(node), rb = find(other);
        if (ra == rb) continue;
        // The component with the lower summit dies at this saddle.
        size_t winner = ra, loser = rb;
        const double sa = mag[summit[ra]], sb = mag[summit[rb]];
        if (sa < sb || (sa == sb && lex_less(summit[rb], summit[ra]))) {
          winner = rb;
          loser = ra;
        }
        prominences.emplace_back(summit[loser], mag[summit[loser]] - mag[node]);
        parent[loser] = winner;
      }
    }
  }
  // The surviving summit spans the whole map; its prominence is the range.
  const size_t top = find(order.front());
  prominences.emplace_back(summit[top], mag[summit[top]] - mag[order.back()]);

  PeakSet out;
  out.threshold = prominence;
  for (const auto& [node, prom] : prominences) {
    if (!(prom > 0.0) || prom < prominence) continue;
    const int i = static_cast<int>(node) % nx;
    const int j = static_cast<int>(node) / nx;
    const double v = map.values[node];
    out.peaks.push_back({g.x(i), g.y(j), v,
                         v >= 0.0 ? Peak::Kind::kMax : Peak::Kind::kMin, i, j, prom});
  }
  std::sort(out.peaks.begin(), out.peaks.end(), [](const Peak& a, const Peak& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return out;
}

QuadrantSummary quadrant_distribution(const LocalizationMap& map) {
  const GridSpec& g = map.grid;
  QuadrantSummary s;
  s.mass.fill(0.0);
  s.top_decile_fraction.fill(0.0);
  s.max_abs.fill(0.0);

  std::vector<double> magnitudes;
  magnitudes.reserve(map.values.size());
  for (double v : map.values) magnitudes.push_back(std::abs(v));

  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const int q = quadrant_index(g.x(i), g.y(j));
      if (q < 0) continue;
      const double a = std::abs(map.at(i, j));
      s.mass[q] += a;
      s.max_abs[q] = std::max(s.max_abs[q], a);
    }
  }

  // Top decile by |value|: nodes at or above the 90th-percentile magnitude.
  std::vector<double> sorted = magnitudes;
  std::sort(sorted.begin(), sorted.end());
  const size_t cut = static_cast<size_t>(0.9 * sorted.size());
  const double threshold = sorted[std::min(cut, sorted.size() - 1)];
  size_t top_total = 0;
  std::array<size_t, 4> top_in_quadrant{0, 0, 0, 0};
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (std::abs(map.at(i, j)) < threshold) continue;
      ++top_total;
      const int q = quadrant_index(g.x(i), g.y(j));
      if (q >= 0) ++top_in_quadrant[q];
    }
  }
  if (top_total > 0)
    for (int q = 0; q < 4; ++q)
      s.top_decile_fraction[q] =
          static_cast<double>(top_in_quadrant[q]) / static_cast<double>(top_total);
  return s;
}

double peak_ratio(const LocalizationMap& map, Quadrant q_num, Quadrant q_den) {
  const QuadrantSummary s = quadrant_distribution(map);
  const double den = s.max_abs[static_cast<int>(q_den)];
  if (den == 0.0) throw EmptyQuadrant("denominator quadrant has zero max");
  return s.max_abs[static_cast<int>(q_num)] / den;
}

SymmetryMetrics symmetry_metrics(const LocalizationMap& map) {
  const GridSpec& g = map.grid;
  const bool x_sym = g.x_min == -g.x_max;
  const bool y_sym = g.y_min == -g.y_max;
  const bool same_axes = g.nx == g.ny && g.x_min == g.y_min && g.x_max == g.y_max;
  if (!x_sym || !y_sym || !same_axes)
    throw GridNotSymmetric("grid must be symmetric about both axes with equal x/y sampling");

  SymmetryMetrics m{0.0, 0.0};
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      m.swap_error = std::max(m.swap_error, std::abs(map.at(i, j) - map.at(j, i)));
      m.point_error = std::max(
          m.point_error, std::abs(map.at(i, j) - map.at(g.nx - 1 - i, g.ny - 1 - j)));
    }
  }
  return m;
}

}  // namespace vloc
