#ifndef VLOC_ANALYSIS_HPP
#define VLOC_ANALYSIS_HPP

#include <array>
#include <vector>

#include "vloc/scan.hpp"

namespace vloc {

struct Peak {
  double x, y;
  double value;
  enum class Kind { kMax, kMin } kind;  // sign of the field at the node
  int i, j;       // grid indices
  double prominence;
};

struct PeakSet {
  std::vector<Peak> peaks;
  double threshold;
};

// Quadrants about the cell origin: I = (+,+), II = (-,+), III = (-,-),
// IV = (+,-); axis nodes belong to no quadrant.
enum class Quadrant { I = 0, II = 1, III = 2, IV = 3 };

struct QuadrantSummary {
  std::array<double, 4> mass;                 // sum of |value| strictly inside
  std::array<double, 4> top_decile_fraction;  // share of top-decile-|value| nodes
  std::array<double, 4> max_abs;
};

// Peaks of the absorption magnitude |value|, filtered by topographic
// prominence (persistence): a peak must rise at least `prominence` above the
// highest saddle separating it from stronger structure, which makes the
// listing robust against solver-noise ripples riding on an elevated
// background.  Exact-tie plateaus count once, through their lexicographically
// smallest node in (i, j) order.  Constant fields have no peaks.  Kind
// records the sign of the field at the node (kMax for absorption bumps,
// kMin for dips below zero).  Since prominence never exceeds the peak
// height, every listed peak also satisfies |value| >= prominence.  Results
// are ordered by (i, j) ascending.
PeakSet find_extrema(const LocalizationMap& map, double prominence);

QuadrantSummary quadrant_distribution(const LocalizationMap& map);

// max_abs(q_num) / max_abs(q_den); throws EmptyQuadrant when the denominator
// quadrant has zero max.
double peak_ratio(const LocalizationMap& map, Quadrant q_num, Quadrant q_den);

struct SymmetryMetrics {
  double swap_error;   // max |map(x,y) - map(y,x)|
  double point_error;  // max |map(x,y) - map(-x,-y)|
};

// Requires a grid that is reflection-symmetric about both axes with identical
// x and y sampling; throws GridNotSymmetric otherwise.
SymmetryMetrics symmetry_metrics(const LocalizationMap& map);

}  // namespace vloc

#endif
