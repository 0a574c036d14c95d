#include "absurf/okounkov.hpp"

#include <optional>

#include "absurf/error.hpp"

namespace absurf {

namespace {

const QuadraticValue kZero{};
const QuadraticValue kOne{1};
const QuadraticValue kTwo{2};

}  // namespace

QuadraticValue cross(const Point& a, const Point& b, const Point& c) {
  return (b.t - a.t) * (c.y - a.y) - (b.y - a.y) * (c.t - a.t);
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorKind::InvalidPolygon, "polygon needs at least 3 vertices");
  for (const Point& p : vertices_) {
    radicand_ = common_radicand(radicand_, p.t.radicand());
    radicand_ = common_radicand(radicand_, p.y.radicand());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices_[i] == vertices_[j]) throw Error(ErrorKind::InvalidPolygon, "repeated vertex");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const Point& c = vertices_[(i + 2) % n];
    if (quad_sign(cross(a, b, c)) <= 0)
      throw Error(ErrorKind::InvalidPolygon, "vertices are not strictly convex counterclockwise");
  }
  // All left turns plus a positive fan around vertex 0 rules out self-winding.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (quad_sign(cross(vertices_[0], vertices_[i], vertices_[i + 1])) <= 0)
      throw Error(ErrorKind::InvalidPolygon, "polygon winds more than once");
  }
}

Polygon inverted_simplex(const QuadraticValue& xi) {
  if (quad_sign(xi) <= 0) throw Error(ErrorKind::NonPositiveLength, "simplex length must be positive");
  return Polygon({{kZero, kZero}, {xi, kZero}, {xi, xi}});
}

Polygon bounding_triangle(std::int64_t pnum, std::int64_t q) {
  if (q < 2) throw Error(ErrorKind::MultiplicityTooSmall, "bounding triangle needs multiplicity q >= 2");
  if (pnum < 1) throw Error(ErrorKind::NonPositiveLength, "bounding triangle needs p >= 1");
  const QuadraticValue apex{Rational(pnum, q)};
  const QuadraticValue base{Rational(pnum, q - 1)};
  return Polygon({{kZero, kZero}, {base, kZero}, {apex, apex}});
}

Polygon region_delta(const QuadraticValue& eps) {
  if (!(eps > kOne && eps < kTwo)) throw Error(ErrorKind::EpsOutOfRange, "region needs 1 < eps < 2");
  const QuadraticValue foot = eps / (eps - kOne);
  return Polygon({{kZero, kZero}, {foot, kZero}, {eps, eps}});
}

Polygon region_delta_alpha(const QuadraticValue& eps, const QuadraticValue& alpha) {
  if (!(kOne < eps && eps < alpha && alpha < kTwo))
    throw Error(ErrorKind::ParameterOrderViolation, "region needs 1 < eps < alpha < 2");
  const QuadraticValue foot = (kTwo * eps - alpha) / (eps - kOne);
  return Polygon({{kZero, kZero}, {foot, kZero}, {alpha, eps}, {eps, eps}});
}

QuadraticValue polygon_area(const Polygon& polygon) {
  auto v = polygon.vertices();
  QuadraticValue twice;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    twice += a.t * b.y - b.t * a.y;
  }
  return twice / kTwo;
}

QuadraticValue slice_length(const Polygon& polygon, const QuadraticValue& t0) {
  auto v = polygon.vertices();
  std::optional<QuadraticValue> low;
  std::optional<QuadraticValue> high;
  auto include = [&](const QuadraticValue& y) {
    if (!low || y < *low) low = y;
    if (!high || y > *high) high = y;
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if (a.t == t0) include(a.y);
    const int sa = quad_sign(a.t - t0);
    const int sb = quad_sign(b.t - t0);
    if (sa * sb < 0) include(a.y + (b.y - a.y) * (t0 - a.t) / (b.t - a.t));
  }
  if (!low) return kZero;
  return *high - *low;
}

bool contains(const Polygon& outer, const Polygon& inner) {
  common_radicand(outer.radicand(), inner.radicand());
  auto edges = outer.vertices();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point& a = edges[i];
    const Point& b = edges[(i + 1) % edges.size()];
    for (const Point& p : inner.vertices()) {
      if (quad_sign(cross(a, b, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace absurf
