#include <doctest.h>

#include "absurf/error.hpp"
#include "absurf/exactmath.hpp"
#include "oracles.hpp"

using absurf::Integer;
using absurf::QuadraticValue;
using absurf::Rational;

namespace {

QuadraticValue q(std::string_view text) { return absurf::parse_scalar(text); }

absurf::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const absurf::Error& e) {
    return e.kind();
  }
  FAIL("expected absurf::Error");
  return absurf::ErrorKind::ParseError;
}

constexpr std::int64_t kRadicands[] = {2, 3, 5, 6, 7, 10, 11};

QuadraticValue sample(oracle::RationalSampler& s, const Integer& d) {
  return QuadraticValue(s.rational(60, 24), s.rational(60, 24), d);
}

}  // namespace

TEST_CASE("quad_sign examples") {
  CHECK(absurf::quad_sign(QuadraticValue(1, -1, 2)) == -1);
  CHECK(absurf::quad_sign(QuadraticValue(3, -2, 2)) == 1);
  CHECK(absurf::quad_sign(QuadraticValue(0, 0, 5)) == 0);
  CHECK(absurf::quad_sign(QuadraticValue(-3, 2, 2)) == -1);
  CHECK(absurf::quad_sign(QuadraticValue(0, -1, 7)) == -1);
}

TEST_CASE("quad_compare examples") {
  CHECK(absurf::quad_compare(Rational(4, 3), QuadraticValue(1, 0, 2)) == std::strong_ordering::greater);
  CHECK(absurf::quad_compare(QuadraticValue(2, 0, 0), QuadraticValue(0, 1, 5)) == std::strong_ordering::less);
  CHECK(kind_of([] { (void)absurf::quad_compare(QuadraticValue(1, 1, 2), QuadraticValue(1, 1, 3)); }) ==
        absurf::ErrorKind::IncompatibleRadicands);
  CHECK(QuadraticValue(1, 1, 2) != QuadraticValue(1, 1, 3));
}

TEST_CASE("canonical form") {
  CHECK(QuadraticValue(1, 3, 4) == QuadraticValue(7));
  CHECK(QuadraticValue(0, 1, 8) == QuadraticValue(0, 2, 2));
  CHECK(QuadraticValue(5, 0, 7).radicand() == 0);
  CHECK(QuadraticValue(5, 2, 0).radical_part() == 0);
  CHECK(kind_of([] { QuadraticValue(0, 1, -2); }) == absurf::ErrorKind::NegativeRadicand);
  CHECK(kind_of([] { (void)(QuadraticValue(1, 1, 2) / QuadraticValue(0)); }) == absurf::ErrorKind::DivisionByZero);
}

TEST_CASE("sqrt_exact examples") {
  CHECK(absurf::sqrt_exact(4) == QuadraticValue(2));
  CHECK(absurf::sqrt_exact(4).radicand() == 0);
  CHECK(absurf::sqrt_exact(8) == QuadraticValue(0, 2, 2));
  CHECK(absurf::sqrt_exact(Rational(2, 9)) == QuadraticValue(0, Rational(1, 3), 2));
  CHECK(absurf::sqrt_exact(Rational(1, 2)) == QuadraticValue(0, Rational(1, 2), 2));
  CHECK(absurf::sqrt_exact(0) == QuadraticValue(0));
  CHECK(kind_of([] { absurf::sqrt_exact(-1); }) == absurf::ErrorKind::NegativeRadicand);
}

TEST_CASE("ceil_div_sqrt examples") {
  CHECK(absurf::ceil_div_sqrt(18, 2, 4) == 5);
  CHECK(absurf::ceil_div_sqrt(6, 1, 4) == 3);
  CHECK(absurf::ceil_div_sqrt(7, 1, 4) == 4);
  CHECK(absurf::ceil_div_sqrt(1, 10, 7) == 1);
}

TEST_CASE("scalar text round trip") {
  for (const char* text : {"0", "-3", "4/3", "sqrt(2)", "-sqrt(2)", "1-sqrt(2)", "3-2*sqrt(2)", "1/3*sqrt(2)",
                           "-1/2+5/7*sqrt(30)", "-189/2+21*sqrt(21)"}) {
    CHECK(absurf::to_string(q(text)) == text);
  }
  CHECK(q("1/2 + 1/2*sqrt(8)") == QuadraticValue(Rational(1, 2), 1, 2));
  CHECK(q("2/4") == QuadraticValue(Rational(1, 2)));
  CHECK(q("sqrt(4)") == QuadraticValue(2));
  CHECK(kind_of([] { q(""); }) == absurf::ErrorKind::ParseError);
  CHECK(kind_of([] { q("1/0"); }) == absurf::ErrorKind::ParseError);
  CHECK(kind_of([] { q("2*sqrt(x)"); }) == absurf::ErrorKind::ParseError);
  CHECK(kind_of([] { q("sqrt(2)+sqrt(3)"); }) == absurf::ErrorKind::IncompatibleRadicands);
  CHECK(kind_of([] { absurf::parse_rational("sqrt(2)"); }) == absurf::ErrorKind::ParseError);
}

TEST_CASE("field laws on a shared radicand") {
  oracle::RationalSampler s(11);
  for (int i = 0; i < 500; ++i) {
    const Integer d = kRadicands[i % 7];
    const QuadraticValue u = sample(s, d), v = sample(s, d), w = sample(s, d);
    CHECK((u + v) + w == u + (v + w));
    CHECK(u * v == v * u);
    CHECK(u * (v + w) == u * v + u * w);
    if (absurf::quad_sign(v) != 0) CHECK((u / v) * v == u);
  }
}

TEST_CASE("sign is multiplicative") {
  oracle::RationalSampler s(12);
  for (int i = 0; i < 2000; ++i) {
    const Integer d = kRadicands[i % 7];
    const QuadraticValue u = sample(s, d), v = sample(s, d);
    CHECK(absurf::quad_sign(u * v) == absurf::quad_sign(u) * absurf::quad_sign(v));
  }
}

TEST_CASE("order agrees with 50-digit evaluation") {
  oracle::RationalSampler s(13);
  int disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    const Integer d = kRadicands[i % 7];
    const QuadraticValue u = sample(s, d);
    // Every third pair compares against a pure rational; some pairs are near-ties.
    QuadraticValue v = i % 3 == 0 ? QuadraticValue(s.rational(60, 24)) : sample(s, d);
    if (i % 11 == 0) v = u + QuadraticValue(Rational(1, 1000000));
    const int exact = [&] {
      auto c = absurf::quad_compare(u, v);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }();
    if (exact != oracle::dec_sign(oracle::to_dec(u) - oracle::to_dec(v))) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("sqrt_exact squares back") {
  oracle::RationalSampler s(14);
  for (int i = 0; i < 1000; ++i) {
    const Rational r = Rational(s.integer(0, 1000000), s.integer(1, 100000));
    const QuadraticValue root = absurf::sqrt_exact(r);
    CHECK(root * root == QuadraticValue(r));
    CHECK(absurf::quad_sign(root) >= 0);
  }
}

TEST_CASE("ceil_div_sqrt agrees with 50-digit ceiling") {
  oracle::RationalSampler s(15);
  for (int i = 0; i < 1000; ++i) {
    Integer num, den, n;
    if (i % 4 == 0) {
      // exact integer quotient: num = m * den * k with n = k^2
      const std::int64_t k = s.integer(1, 30), m = s.integer(1, 50);
      den = s.integer(1, 20);
      n = k * k;
      num = m * den * k;
      CHECK(absurf::ceil_div_sqrt(num, den, n) == m);
      continue;
    }
    num = s.integer(1, 100000);
    den = s.integer(1, 100);
    n = s.integer(1, 5000);
    const oracle::Dec x = oracle::Dec(num.str()) / (oracle::Dec(den.str()) * sqrt(oracle::Dec(n.str())));
    const oracle::Dec expected = ceil(x);
    if (absurf::is_perfect_square(n)) {
      // rational quotient: exact ceiling
      const Rational r(num, den * absurf::isqrt(n));
      const Integer c = (boost::multiprecision::numerator(r) + boost::multiprecision::denominator(r) - 1) /
                        boost::multiprecision::denominator(r);
      CHECK(absurf::ceil_div_sqrt(num, den, n) == c);
    } else {
      CHECK(oracle::Dec(absurf::ceil_div_sqrt(num, den, n).str()) == expected);
    }
  }
}

TEST_CASE("split_square_factor") {
  CHECK(absurf::split_square_factor(72) == std::pair<Integer, Integer>{6, 2});
  CHECK(absurf::split_square_factor(1) == std::pair<Integer, Integer>{1, 1});
  const Integer big = Integer(1) << 70;
  CHECK(absurf::split_square_factor(big * 3) == std::pair<Integer, Integer>{Integer(1) << 35, 3});
}
