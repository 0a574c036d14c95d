#ifndef ABSURF_OKOUNKOV_HPP
#define ABSURF_OKOUNKOV_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "absurf/exactmath.hpp"

namespace absurf {

/// Point (t, y) of the plane in which the bounding regions live.
struct Point {
  QuadraticValue t;
  QuadraticValue y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Exact convex polygon with vertices in counterclockwise order, no repeated
/// vertices and no three consecutive collinear vertices. All coordinates live
/// in one quadratic field.
class Polygon {
 public:
  /// Throws InvalidPolygon if the vertices do not form a strictly convex
  /// counterclockwise polygon, IncompatibleRadicands for mixed fields.
  explicit Polygon(std::vector<Point> vertices);

  std::span<const Point> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  /// Shared radicand of all coordinates (0 for rational polygons).
  const Integer& radicand() const noexcept { return radicand_; }

 private:
  std::vector<Point> vertices_;
  Integer radicand_{0};
};

/// Twice the signed area of triangle (a, b, c); positive for a left turn.
QuadraticValue cross(const Point& a, const Point& b, const Point& c);

/// {0 <= t <= xi, 0 <= y <= t}. Throws NonPositiveLength.
Polygon inverted_simplex(const QuadraticValue& xi);

/// Triangle O=(0,0), A=(p/q, p/q), B=(p/(q-1), 0) for a curve with L.F = p and
/// multiplicity q >= 2. Throws MultiplicityTooSmall for q < 2.
Polygon bounding_triangle(std::int64_t pnum, std::int64_t q);

/// Triangle (0,0), (eps/(eps-1), 0), (eps, eps): the slanted edge passes
/// through (2, 1). Needs 1 < eps < 2, else EpsOutOfRange.
Polygon region_delta(const QuadraticValue& eps);

/// Quadrilateral (0,0), ((2eps-alpha)/(eps-1), 0), (alpha, eps), (eps, eps),
/// slanted edge again through (2, 1). Needs 1 < eps < alpha < 2, else
/// ParameterOrderViolation.
Polygon region_delta_alpha(const QuadraticValue& eps, const QuadraticValue& alpha);

/// Shoelace area.
QuadraticValue polygon_area(const Polygon& polygon);

/// Length of {y : (t0, y) in polygon}; 0 when the vertical line misses it.
QuadraticValue slice_length(const Polygon& polygon, const QuadraticValue& t0);

/// Every vertex of inner lies in every closed edge half-plane of outer.
/// Throws IncompatibleRadicands when the two polygons live in different fields.
bool contains(const Polygon& outer, const Polygon& inner);

}  // namespace absurf

#endif  // ABSURF_OKOUNKOV_HPP
