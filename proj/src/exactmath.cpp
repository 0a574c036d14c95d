#include "absurf/exactmath.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "absurf/error.hpp"

namespace absurf {

namespace mp = boost::multiprecision;

namespace {

int sign_of(const Rational& q) { return q.sign(); }

// n = s^2 * core, trial division with a shrinking bound.
std::pair<std::uint64_t, std::uint64_t> split_square_u64(std::uint64_t n) {
  std::uint64_t square = 1;
  std::uint64_t core = 1;
  auto strip = [&](std::uint64_t prime) {
    int exponent = 0;
    while (n % prime == 0) {
      n /= prime;
      ++exponent;
    }
    for (int i = 0; i < exponent / 2; ++i) square *= prime;
    if (exponent % 2 == 1) core *= prime;
  };
  strip(2);
  for (std::uint64_t prime = 3; prime <= n / prime; prime += 2) strip(prime);
  if (n > 1) core *= n;
  return {square, core};
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(mp::abs(a), mp::abs(b)); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::NegativeRadicand, "isqrt of negative integer");
  return mp::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer root = isqrt(n);
  return root * root == n;
}

std::pair<Integer, Integer> split_square_factor(const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::NegativeRadicand, "square factor split needs n > 0");
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    auto [square, core] = split_square_u64(n.convert_to<std::uint64_t>());
    return {Integer(square), Integer(core)};
  }
  Integer rest = n;
  Integer square = 1;
  Integer core = 1;
  for (Integer prime = 2; prime * prime <= rest; prime += (prime == 2 ? 1 : 2)) {
    int exponent = 0;
    while (rest % prime == 0) {
      rest /= prime;
      ++exponent;
    }
    for (int i = 0; i < exponent / 2; ++i) square *= prime;
    if (exponent % 2 == 1) core *= prime;
  }
  core *= rest;
  return {square, core};
}

// ---------------------------------------------------------------------------
// QuadraticValue

QuadraticValue::QuadraticValue(Rational rational_part) : a_(std::move(rational_part)) {}

QuadraticValue::QuadraticValue(Rational rational_part, Rational radical_part, Integer radicand)
    : a_(std::move(rational_part)), b_(std::move(radical_part)), d_(std::move(radicand)) {
  if (d_ < 0) throw Error(ErrorKind::NegativeRadicand, "negative radicand " + d_.str());
  if (d_ == 0 || b_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [square, core] = split_square_factor(d_);
  b_ *= square;
  if (core == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else {
    d_ = core;
  }
}

bool QuadraticValue::is_integer() const {
  return is_rational() && mp::denominator(a_) == 1;
}

QuadraticValue QuadraticValue::conjugate() const {
  QuadraticValue out = *this;
  out.b_ = -out.b_;
  return out;
}

Rational QuadraticValue::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadraticValue QuadraticValue::operator-() const {
  QuadraticValue out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Integer common_radicand(const Integer& d1, const Integer& d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw Error(ErrorKind::IncompatibleRadicands, "radicands " + d1.str() + " and " + d2.str() + " differ");
}

Integer common_radicand(const QuadraticValue& u, const QuadraticValue& v) {
  return common_radicand(u.radicand(), v.radicand());
}

QuadraticValue& QuadraticValue::operator+=(const QuadraticValue& rhs) {
  Integer d = common_radicand(*this, rhs);
  *this = QuadraticValue(a_ + rhs.a_, b_ + rhs.b_, d);
  return *this;
}

QuadraticValue& QuadraticValue::operator-=(const QuadraticValue& rhs) { return *this += -rhs; }

QuadraticValue& QuadraticValue::operator*=(const QuadraticValue& rhs) {
  Integer d = common_radicand(*this, rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  *this = QuadraticValue(std::move(a), std::move(b), d);
  return *this;
}

QuadraticValue& QuadraticValue::operator/=(const QuadraticValue& rhs) {
  common_radicand(*this, rhs);
  // d squarefree and != 1, so the norm vanishes only at zero.
  Rational n = rhs.norm();
  if (n == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const QuadraticValue& lhs, const QuadraticValue& rhs) {
  return quad_compare(lhs, rhs);
}

double QuadraticValue::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

int quad_sign(const QuadraticValue& v) {
  int sa = sign_of(v.rational_part());
  int sb = sign_of(v.radical_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins.
  Rational lhs = v.rational_part() * v.rational_part();
  Rational rhs = v.radical_part() * v.radical_part() * Rational(v.radicand());
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

std::strong_ordering quad_compare(const QuadraticValue& u, const QuadraticValue& v) {
  int s = quad_sign(u - v);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadraticValue sqrt_exact(const Rational& q) {
  if (q < 0) throw Error(ErrorKind::NegativeRadicand, "square root of negative rational " + to_string(q));
  if (q == 0) return {};
  // sqrt(n/m) = (s/(t*e)) * sqrt(c*e) with n = s^2 c, m = t^2 e and c, e coprime squarefree.
  auto [s, c] = split_square_factor(mp::numerator(q));
  auto [t, e] = split_square_factor(mp::denominator(q));
  return QuadraticValue(0, Rational(s, t * e), c * e);
}

Integer ceil_div_sqrt(const Integer& num, const Integer& den, const Integer& n) {
  if (num <= 0 || den <= 0 || n <= 0)
    throw Error(ErrorKind::InvalidSpec, "ceil_div_sqrt needs positive arguments");
  // Smallest m >= 1 with num <= m*den*sqrt(n), i.e. num^2 <= m^2 * den^2 * n.
  const Integer target = num * num;
  const Integer scale = den * den * n;
  Integer m = isqrt(target / scale);
  if (m < 1) m = 1;
  while (m > 1 && (m - 1) * (m - 1) * scale >= target) --m;
  while (m * m * scale < target) ++m;
  return m;
}

// ---------------------------------------------------------------------------
// Text

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  QuadraticValue parse() {
    skip_space();
    if (at_end()) fail("empty scalar");
    QuadraticValue sum = term(true);
    while (true) {
      skip_space();
      if (at_end()) break;
      sum += term(false);
    }
    return sum;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "cannot parse scalar '" + std::string(text_) + "': " + why);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Integer digits() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits at offset " + std::to_string(start));
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer radicand() {
    skip_space();
    if (!consume("sqrt(")) fail("expected sqrt(");
    Integer d = digits();
    skip_space();
    if (!consume(")")) fail("expected )");
    return d;
  }

  QuadraticValue term(bool first) {
    skip_space();
    int sign = 1;
    if (consume("+")) {
    } else if (consume("-")) {
      sign = -1;
    } else if (!first) {
      fail("expected + or - at offset " + std::to_string(pos_));
    }
    skip_space();
    if (peek() == 's') return QuadraticValue(0, Rational(sign), radicand());
    Integer num = digits();
    Integer den = 1;
    skip_space();
    if (consume("/")) den = digits();
    if (den == 0) fail("zero denominator");
    Rational coeff(sign * num, den);
    skip_space();
    if (consume("*")) return QuadraticValue(0, coeff, radicand());
    return QuadraticValue(coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  QuadraticValue v = parse_scalar(text);
  if (!v.is_rational()) throw Error(ErrorKind::ParseError, "expected a rational, got '" + std::string(text) + "'");
  return v.rational_part();
}

QuadraticValue parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string to_string(const QuadraticValue& v) {
  const Rational& a = v.rational_part();
  const Rational& b = v.radical_part();
  if (b == 0) return to_string(a);
  std::string out;
  if (a != 0) out = to_string(a);
  if (b < 0) {
    out += '-';
  } else if (a != 0) {
    out += '+';
  }
  Rational magnitude = mp::abs(b);
  if (magnitude != 1) out += to_string(magnitude) + "*";
  out += "sqrt(" + v.radicand().str() + ")";
  return out;
}

}  // namespace absurf
