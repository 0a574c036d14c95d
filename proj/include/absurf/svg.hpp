#ifndef ABSURF_SVG_HPP
#define ABSURF_SVG_HPP

#include <optional>
#include <string>

#include "absurf/exactmath.hpp"
#include "absurf/okounkov.hpp"

namespace absurf {

/// Deterministic SVG of the extremal regions: region_delta(eps) in red and,
/// when alpha is given, region_delta_alpha(eps, alpha) in blue, with axes and
/// the dashed guides to (2, 1). `scale` is pixels per unit; coordinates are
/// printed with 6 decimals and y is flipped so the plot reads upward.
/// Propagates the region errors.
std::string render_region_svg(const QuadraticValue& eps, const std::optional<QuadraticValue>& alpha,
                              double scale = 100.0);

}  // namespace absurf

#endif  // ABSURF_SVG_HPP
