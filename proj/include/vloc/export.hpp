#ifndef VLOC_EXPORT_HPP
#define VLOC_EXPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "vloc/analysis.hpp"
#include "vloc/perturbation.hpp"
#include "vloc/scan.hpp"

namespace vloc {

// `x,y,im_chi` header, then one row per node in y-outer row-major order.
// Positions in wavelength units; 9 significant digits, C locale.
void export_csv(const LocalizationMap& map, std::ostream& sink);

// Inverse of export_csv up to the printed precision.
LocalizationMap parse_csv(std::istream& source);

// Binary P6 pixmap, one pixel per node, top row = y_max.  Diverging
// blue-white-red ramp, white at zero, scaled by max(|min|, |max|); the signed
// min/max are recorded in a comment line inside the header.
void export_heatmap(const LocalizationMap& map, std::ostream& sink);

// Plain-text table of closed-form vs linear-response first-order rho13 for
// each parameter point, with a max-relative-error summary line.
void export_audit(const std::vector<SystemParams>& points, std::ostream& sink);

// Extrema list plus quadrant statistics, plain text.
void export_peaks(const LocalizationMap& map, const PeakSet& peaks,
                  const QuadrantSummary& quadrants, std::ostream& sink);

}  // namespace vloc

#endif
