#ifndef VLOC_SCAN_HPP
#define VLOC_SCAN_HPP

#include <vector>

#include "vloc/params.hpp"
#include "vloc/standing_wave.hpp"

namespace vloc {

// Sample grid over positions in wavelength units.  Odd counts pin the axes
// onto sample points when the ranges are symmetric.
struct GridSpec {
  double x_min = -0.5, x_max = 0.5;
  double y_min = -0.5, y_max = 0.5;
  int nx = 201, ny = 201;

  void validate() const {
    if (!(x_min < x_max) || !(y_min < y_max))
      throw RangeError("grid ranges must be non-empty");
    if (nx < 3 || ny < 3) throw RangeError("nx and ny must be at least 3");
    if (nx % 2 == 0 || ny % 2 == 0) throw RangeError("nx and ny must be odd");
  }

  // Node coordinates.  Evaluated as (min*(m-i) + max*i)/m so that symmetric
  // ranges give exactly mirrored nodes and an exact zero at the midpoint.
  double x(int i) const {
    const double m = nx - 1;
    return (x_min * (m - i) + x_max * i) / m;
  }
  double y(int j) const {
    const double m = ny - 1;
    return (y_min * (m - j) + y_max * j) / m;
  }
};

// Scaled probe absorption Im[rho13 / omega_p] sampled over the grid,
// y-outer row-major.
struct LocalizationMap {
  GridSpec grid;
  std::vector<double> values;  // values[j * nx + i] at (x(i), y(j))
  SystemParams base;           // omega_c field meaningless here
  StandingWaveSpec wave;

  double at(int i, int j) const { return values[static_cast<size_t>(j) * grid.nx + i]; }
};

// Full steady-state solve at one position; returns Im[rho13 / omega_p]
// (the absorption in units of the susceptibility prefactor).
double susceptibility_at(const SystemParams& base, const StandingWaveSpec& wave,
                         double x, double y);

// Scans the grid; deterministic and independent of evaluation order.
// n_threads <= 1 runs serially; the output is bit-identical either way.
LocalizationMap scan_map(const SystemParams& base, const StandingWaveSpec& wave,
                         const GridSpec& grid, int n_threads = 1);

}  // namespace vloc

#endif
