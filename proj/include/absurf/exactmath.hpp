#ifndef ABSURF_EXACTMATH_HPP
#define ABSURF_EXACTMATH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace absurf {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Element a + b*sqrt(D) of a real quadratic field.
///
/// Canonical form: D is squarefree and D == 0 exactly when b == 0, so pure
/// rationals always carry radicand 0. Perfect-square radicands collapse into
/// the rational part on construction.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(Rational rational_part);  // NOLINT(google-explicit-constructor)
  QuadraticValue(std::int64_t value) : QuadraticValue(Rational(value)) {}  // NOLINT
  /// Throws NegativeRadicand for radicand < 0.
  QuadraticValue(Rational rational_part, Rational radical_part, Integer radicand);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  const Integer& radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return d_ == 0; }
  bool is_integer() const;

  /// a - b*sqrt(D)
  QuadraticValue conjugate() const;
  /// Field norm a^2 - b^2*D.
  Rational norm() const;

  QuadraticValue operator-() const;
  QuadraticValue& operator+=(const QuadraticValue& rhs);
  QuadraticValue& operator-=(const QuadraticValue& rhs);
  QuadraticValue& operator*=(const QuadraticValue& rhs);
  /// Throws DivisionByZero.
  QuadraticValue& operator/=(const QuadraticValue& rhs);

  friend QuadraticValue operator+(QuadraticValue lhs, const QuadraticValue& rhs) { return lhs += rhs; }
  friend QuadraticValue operator-(QuadraticValue lhs, const QuadraticValue& rhs) { return lhs -= rhs; }
  friend QuadraticValue operator*(QuadraticValue lhs, const QuadraticValue& rhs) { return lhs *= rhs; }
  friend QuadraticValue operator/(QuadraticValue lhs, const QuadraticValue& rhs) { return lhs /= rhs; }

  /// Component-wise equality of canonical forms; never throws.
  friend bool operator==(const QuadraticValue& lhs, const QuadraticValue& rhs) {
    return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  /// Real-number order. Throws IncompatibleRadicands on distinct nonzero radicands.
  friend std::strong_ordering operator<=>(const QuadraticValue& lhs, const QuadraticValue& rhs);

  /// Display-only approximation.
  double to_double() const;

 private:
  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

/// Shared radicand of two values; 0 if both are rational.
/// Throws IncompatibleRadicands when both have distinct nonzero radicands.
Integer common_radicand(const QuadraticValue& u, const QuadraticValue& v);
Integer common_radicand(const Integer& d1, const Integer& d2);

/// Exact sign of a + b*sqrt(D).
int quad_sign(const QuadraticValue& v);

std::strong_ordering quad_compare(const QuadraticValue& u, const QuadraticValue& v);

/// r*sqrt(D) with (r*sqrt(D))^2 == q. Throws NegativeRadicand for q < 0.
QuadraticValue sqrt_exact(const Rational& q);

/// ceil(num / (den * sqrt(n))) for positive arguments, by exact integer comparison.
Integer ceil_div_sqrt(const Integer& num, const Integer& den, const Integer& n);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Decomposes n > 0 as square^2 * core with core squarefree.
std::pair<Integer, Integer> split_square_factor(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

// Textual scalar syntax: "a", "a/b", "a/b+c/d*sqrt(D)", "-sqrt(D)", ...
// Rendering is canonical and whitespace-free.
Rational parse_rational(std::string_view text);
QuadraticValue parse_scalar(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const QuadraticValue& v);

}  // namespace absurf

#endif  // ABSURF_EXACTMATH_HPP
