#include <doctest.h>

#include <algorithm>

#include "absurf/error.hpp"
#include "absurf/okounkov.hpp"
#include "oracles.hpp"

using absurf::Point;
using absurf::Polygon;
using absurf::QuadraticValue;
using absurf::Rational;

namespace {

QuadraticValue r(std::int64_t n, std::int64_t d = 1) { return QuadraticValue(Rational(n, d)); }

bool same_vertex_set(const Polygon& poly, std::vector<Point> expected) {
  std::vector<Point> got(poly.vertices().begin(), poly.vertices().end());
  if (got.size() != expected.size()) return false;
  return std::all_of(expected.begin(), expected.end(),
                     [&](const Point& p) { return std::find(got.begin(), got.end(), p) != got.end(); });
}

absurf::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const absurf::Error& e) {
    return e.kind();
  }
  FAIL("expected absurf::Error");
  return absurf::ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("polygon construction rejects bad input") {
  CHECK(kind_of([] { Polygon({{r(0), r(0)}, {r(1), r(0)}}); }) == absurf::ErrorKind::InvalidPolygon);
  // clockwise
  CHECK(kind_of([] { Polygon({{r(0), r(0)}, {r(1), r(1)}, {r(1), r(0)}}); }) == absurf::ErrorKind::InvalidPolygon);
  // collinear
  CHECK(kind_of([] { Polygon({{r(0), r(0)}, {r(1), r(0)}, {r(2), r(0)}, {r(1), r(1)}}); }) ==
        absurf::ErrorKind::InvalidPolygon);
  // repeated vertex
  CHECK(kind_of([] { Polygon({{r(0), r(0)}, {r(1), r(0)}, {r(1), r(1)}, {r(1), r(0)}}); }) ==
        absurf::ErrorKind::InvalidPolygon);
  // pentagram: all left turns, winds twice
  const std::vector<Point> star = {{r(0), r(10)}, {r(-6), r(-8)}, {r(10), r(3)}, {r(-10), r(3)}, {r(6), r(-8)}};
  CHECK(kind_of([&] { Polygon{star}; }) == absurf::ErrorKind::InvalidPolygon);
  // mixed fields
  CHECK(kind_of([] { Polygon({{r(0), r(0)}, {QuadraticValue(0, 1, 2), r(0)}, {r(0), QuadraticValue(0, 1, 3)}}); }) ==
        absurf::ErrorKind::IncompatibleRadicands);
}

TEST_CASE("inverted simplex") {
  const Polygon two = absurf::inverted_simplex(2);
  CHECK(same_vertex_set(two, {{r(0), r(0)}, {r(2), r(2)}, {r(2), r(0)}}));
  CHECK(absurf::polygon_area(two) == r(2));
  CHECK(absurf::polygon_area(absurf::inverted_simplex(1)) == r(1, 2));
  CHECK(absurf::polygon_area(absurf::inverted_simplex(QuadraticValue(0, 1, 2))) == r(1));
  CHECK(kind_of([] { absurf::inverted_simplex(0); }) == absurf::ErrorKind::NonPositiveLength);
}

TEST_CASE("bounding triangle") {
  CHECK(same_vertex_set(absurf::bounding_triangle(4, 3), {{r(0), r(0)}, {r(4, 3), r(4, 3)}, {r(2), r(0)}}));
  const Polygon t = absurf::bounding_triangle(2, 2);
  CHECK(same_vertex_set(t, {{r(0), r(0)}, {r(1), r(1)}, {r(2), r(0)}}));
  CHECK(absurf::polygon_area(t) == r(1));
  CHECK(kind_of([] { absurf::bounding_triangle(5, 1); }) == absurf::ErrorKind::MultiplicityTooSmall);
}

TEST_CASE("region delta") {
  const Polygon d = absurf::region_delta(r(6, 5));
  CHECK(same_vertex_set(d, {{r(0), r(0)}, {r(6, 5), r(6, 5)}, {r(6), r(0)}}));
  CHECK(absurf::polygon_area(d) == r(18, 5));
  CHECK(absurf::polygon_area(absurf::region_delta(r(3, 2))) == r(9, 4));
  CHECK(absurf::slice_length(d, 2) == r(1));
  // slanted edge slope -1/4
  CHECK((r(0) - r(6, 5)) / (r(6) - r(6, 5)) == r(-1, 4));
  CHECK(kind_of([] { absurf::region_delta(2); }) == absurf::ErrorKind::EpsOutOfRange);
  CHECK(kind_of([] { absurf::region_delta(r(5, 2)); }) == absurf::ErrorKind::EpsOutOfRange);
}

TEST_CASE("region delta alpha") {
  const Polygon d = absurf::region_delta_alpha(r(6, 5), r(9, 5));
  CHECK(same_vertex_set(d, {{r(0), r(0)}, {r(6, 5), r(6, 5)}, {r(9, 5), r(6, 5)}, {r(3), r(0)}}));
  CHECK(absurf::polygon_area(d) == r(54, 25));
  CHECK(kind_of([] { absurf::region_delta_alpha(r(3, 2), r(3, 2)); }) == absurf::ErrorKind::ParameterOrderViolation);
  CHECK(kind_of([] { absurf::region_delta_alpha(r(3, 2), 2); }) == absurf::ErrorKind::ParameterOrderViolation);
  CHECK(kind_of([] { absurf::region_delta_alpha(1, r(3, 2)); }) == absurf::ErrorKind::ParameterOrderViolation);
}

TEST_CASE("slices") {
  const Polygon s = absurf::inverted_simplex(2);
  CHECK(absurf::slice_length(s, 1) == r(1));
  CHECK(absurf::slice_length(s, 3) == r(0));
  CHECK(absurf::slice_length(s, 2) == r(2));  // vertical edge
  CHECK(absurf::slice_length(s, 0) == r(0));  // touches a vertex
  for (int i = 0; i <= 20; ++i) CHECK(absurf::slice_length(s, r(i, 10)) == r(i, 10));
  const QuadraticValue root2(0, 1, 2);
  const Polygon irrational = absurf::inverted_simplex(root2);
  CHECK(absurf::slice_length(irrational, 1) == r(1));
  CHECK(absurf::slice_length(irrational, root2) == root2);
}

TEST_CASE("containment") {
  CHECK(absurf::contains(absurf::inverted_simplex(2), absurf::inverted_simplex(1)));
  CHECK(absurf::contains(absurf::region_delta(r(6, 5)), absurf::inverted_simplex(r(6, 5))));
  CHECK_FALSE(absurf::contains(absurf::inverted_simplex(1), absurf::inverted_simplex(2)));
  CHECK(kind_of([] {
          absurf::contains(absurf::inverted_simplex(QuadraticValue(0, 1, 2)),
                           absurf::inverted_simplex(QuadraticValue(0, 1, 3)));
        }) == absurf::ErrorKind::IncompatibleRadicands);
}

TEST_CASE("closed-form areas, dominance and slice calibration") {
  oracle::RationalSampler s(21);
  const QuadraticValue one(1), two(2), half(Rational(1, 2));
  for (int i = 0; i < 1000; ++i) {
    QuadraticValue eps = s.inside(1, 2, 97);
    QuadraticValue alpha = s.inside(eps.rational_part(), 2, 97);
    if (i % 10 == 0) {
      // irrational parameters in Q(sqrt 2): eps = sqrt(2), alpha = eps + small rational
      eps = QuadraticValue(0, 1, 2);
      alpha = eps + QuadraticValue(s.inside(0, Rational(1, 2), 97));
    }
    const Polygon delta = absurf::region_delta(eps);
    const Polygon delta_alpha = absurf::region_delta_alpha(eps, alpha);
    const QuadraticValue vol = absurf::polygon_area(delta);
    const QuadraticValue vol_alpha = absurf::polygon_area(delta_alpha);
    CHECK(vol == eps * eps / (two * (eps - one)));
    CHECK(vol_alpha == -half * eps * eps + alpha * eps + (two * eps - alpha * eps) / (two * (eps - one)) * eps);
    CHECK(vol - vol_alpha == eps / (two * (eps - one)) * (two - eps) * (alpha - eps));
    CHECK(vol > vol_alpha);
    CHECK(absurf::slice_length(delta, 2) == one);
    CHECK(absurf::slice_length(delta_alpha, 2) == one);
    CHECK(absurf::contains(delta, absurf::inverted_simplex(eps)));
    CHECK(absurf::contains(delta_alpha, absurf::inverted_simplex(eps)));
  }
}

TEST_CASE("containment is reflexive and transitive") {
  oracle::RationalSampler s(22);
  std::vector<Polygon> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(absurf::inverted_simplex(QuadraticValue(s.inside(0, 3, 13))));
  for (int i = 0; i < 6; ++i) pool.push_back(absurf::region_delta(QuadraticValue(s.inside(1, 2, 13))));
  for (int i = 0; i < 4; ++i) pool.push_back(absurf::bounding_triangle(s.integer(1, 6), s.integer(2, 4)));
  for (const auto& a : pool) {
    CHECK(absurf::contains(a, a));
    for (const auto& b : pool)
      for (const auto& c : pool)
        if (absurf::contains(a, b) && absurf::contains(b, c)) CHECK(absurf::contains(a, c));
  }
}
