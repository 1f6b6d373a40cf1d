#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "vloc/analysis.hpp"

using namespace vloc;

namespace {

LocalizationMap synthetic(int n, const std::function<double(double, double)>& f) {
  LocalizationMap map;
  map.grid.nx = n;
  map.grid.ny = n;
  map.values.resize(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      map.values[static_cast<size_t>(j) * n + i] = f(map.grid.x(i), map.grid.y(j));
  return map;
}

double gauss(double x, double y, double cx, double cy) {
  const double s2 = 2.0 * 0.05 * 0.05;
  return std::exp(-((x - cx) * (x - cx) + (y - cy) * (y - cy)) / s2);
}

}  // namespace

TEST_CASE("two synthetic peaks are found at their nodes") {
  const LocalizationMap map = synthetic(41, [](double x, double y) {
    return gauss(x, y, 0.2, 0.2) + gauss(x, y, -0.2, -0.2);
  });
  const PeakSet peaks = find_extrema(map, 0.5);
  REQUIRE(peaks.peaks.size() == 2);
  for (const auto& p : peaks.peaks) {
    CHECK(std::abs(std::abs(p.x) - 0.2) <= 1e-12);
    CHECK(std::abs(std::abs(p.y) - 0.2) <= 1e-12);
    CHECK(p.kind == Peak::Kind::kMax);
  }
}

TEST_CASE("constant field has no strict extrema") {
  const LocalizationMap map = synthetic(11, [](double, double) { return 0.7; });
  CHECK(find_extrema(map, 0.0).peaks.empty());
}

TEST_CASE("peak locations are invariant under sign-preserving offsets") {
  // Offsets move the magnitude surface rigidly as long as the field keeps
  // its sign, so the persistence structure and hence the listing is
  // unchanged; values shift by the offset.
  auto field = [](double x, double y) {
    return 2.0 + std::sin(5.0 * x) * std::cos(4.0 * y) + 0.5 * x - y * y;
  };
  const LocalizationMap base = synthetic(41, field);
  const LocalizationMap shifted = synthetic(41, [&](double x, double y) {
    return field(x, y) + 5.0;
  });
  const PeakSet a = find_extrema(base, 0.0);
  const PeakSet b = find_extrema(shifted, 0.0);
  REQUIRE(a.peaks.size() > 0);
  REQUIRE(a.peaks.size() == b.peaks.size());
  for (size_t k = 0; k < a.peaks.size(); ++k) {
    CHECK(a.peaks[k].i == b.peaks[k].i);
    CHECK(a.peaks[k].j == b.peaks[k].j);
    CHECK(b.peaks[k].value - a.peaks[k].value == doctest::Approx(5.0));
  }
}

TEST_CASE("noise ripples on an elevated background are filtered") {
  // A tall spike over a high plateau with micro-wiggles: only the spike has
  // real prominence even though the wiggles clear any value threshold.
  const LocalizationMap map = synthetic(41, [](double x, double y) {
    const double wiggle = 1e-9 * std::sin(40.0 * x) * std::sin(37.0 * y);
    return 0.5 + wiggle + 2.0 * gauss(x, y, 0.25, 0.25);
  });
  const PeakSet peaks = find_extrema(map, 0.2 * 2.5);
  REQUIRE(peaks.peaks.size() == 1);
  CHECK(peaks.peaks[0].x == doctest::Approx(0.25));
  CHECK(peaks.peaks[0].y == doctest::Approx(0.25));
}

TEST_CASE("exact-tie plateaus contribute one representative node") {
  // Flat-topped ridge: the lexicographically smallest node of the plateau
  // stands for the whole feature.
  const LocalizationMap map = synthetic(21, [](double x, double y) {
    const double r = std::hypot(x, y);
    return r < 0.22 ? 1.0 : -r;
  });
  const PeakSet peaks = find_extrema(map, 0.5);
  REQUIRE(peaks.peaks.size() == 1);
  CHECK(peaks.peaks[0].value == 1.0);
}

TEST_CASE("field supported in quadrant I fills the whole top decile") {
  const LocalizationMap map = synthetic(21, [](double x, double y) {
    return (x > 0 && y > 0) ? 1.0 : 0.0;
  });
  const QuadrantSummary s = quadrant_distribution(map);
  CHECK(s.top_decile_fraction[0] == doctest::Approx(1.0));
  CHECK(s.top_decile_fraction[1] == 0.0);
  CHECK(s.top_decile_fraction[2] == 0.0);
  CHECK(s.top_decile_fraction[3] == 0.0);
}

TEST_CASE("point-symmetric field balances opposite quadrants") {
  const LocalizationMap map = synthetic(21, [](double x, double y) {
    return std::sin(6.0 * x) * std::sin(6.0 * y) + x * y;
  });
  const QuadrantSummary s = quadrant_distribution(map);
  CHECK(std::abs(s.mass[0] - s.mass[2]) <= 1e-10);
  CHECK(std::abs(s.mass[1] - s.mass[3]) <= 1e-10);
}

TEST_CASE("masses relabel under transposition") {
  auto field = [](double x, double y) { return x * x * y + 0.3 * y * y - x; };
  const LocalizationMap map = synthetic(21, field);
  const LocalizationMap swapped = synthetic(21, [&](double x, double y) {
    return field(y, x);
  });
  const QuadrantSummary a = quadrant_distribution(map);
  const QuadrantSummary b = quadrant_distribution(swapped);
  CHECK(a.mass[0] == doctest::Approx(b.mass[0]).epsilon(1e-12));   // I <-> I
  CHECK(a.mass[2] == doctest::Approx(b.mass[2]).epsilon(1e-12));   // III <-> III
  CHECK(a.mass[1] == doctest::Approx(b.mass[3]).epsilon(1e-12));   // II <-> IV
  CHECK(a.mass[3] == doctest::Approx(b.mass[1]).epsilon(1e-12));
}

TEST_CASE("peak ratio of a symmetric map is 1") {
  const LocalizationMap map = synthetic(21, [](double x, double y) {
    return gauss(x, y, 0.2, 0.2) + gauss(x, y, -0.2, -0.2);
  });
  CHECK(peak_ratio(map, Quadrant::III, Quadrant::I) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(peak_ratio(map, Quadrant::I, Quadrant::I) == 1.0);
}

TEST_CASE("empty denominator quadrant throws") {
  const LocalizationMap map = synthetic(11, [](double x, double y) {
    return (x > 0 && y > 0) ? 1.0 : 0.0;
  });
  CHECK_THROWS_AS(peak_ratio(map, Quadrant::I, Quadrant::III), EmptyQuadrant);
}

TEST_CASE("symmetry metrics vanish for a symmetric synthetic field") {
  const LocalizationMap map = synthetic(21, [](double x, double y) {
    return std::cos(4.0 * x) * std::cos(4.0 * y) + x * y;
  });
  const SymmetryMetrics m = symmetry_metrics(map);
  CHECK(m.swap_error <= 1e-15);
  CHECK(m.point_error <= 1e-15);
}

TEST_CASE("asymmetric grids are rejected") {
  LocalizationMap map = synthetic(11, [](double, double) { return 0.0; });
  map.grid.x_min = -0.4;  // breaks x_min == -x_max
  CHECK_THROWS_AS(symmetry_metrics(map), GridNotSymmetric);
}
