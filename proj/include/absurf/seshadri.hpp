#ifndef ABSURF_SESHADRI_HPP
#define ABSURF_SESHADRI_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "absurf/exactmath.hpp"

namespace absurf {

/// Abelian surface of type (1, d) with Picard number one.
struct PicardOne {
  std::int64_t d;
};

/// Very general abelian surface of type (d1, d2), d1 <= d2.
struct VeryGeneral {
  std::int64_t d1;
  std::int64_t d2;
};

/// L = b1*F1 + b2*F2 + b3*Diag on E x E, E without complex multiplication.
struct EllipticSquare {
  std::int64_t b1;
  std::int64_t b2;
  std::int64_t b3;
};

/// Caller-supplied (L^2, eps), taken at face value apart from 0 < eps, eps^2 <= L^2.
struct Explicit {
  std::int64_t l2;
  QuadraticValue eps;
};

using SurfaceSpec = std::variant<PicardOne, VeryGeneral, EllipticSquare, Explicit>;

/// Throws InvalidSpec (or NotAmple for E x E) when the spec is malformed.
void validate(const SurfaceSpec& spec);

/// (L^2) from the polarization type or the E x E intersection form
/// (F1, F2, Diag pairwise meet in one point, self-intersections 0).
Integer self_intersection(const SurfaceSpec& spec);

struct SeshadriInterval {
  QuadraticValue lower;
  QuadraticValue upper;
};

/// (a1, a2, a3) sorted descending, with the winning closed-form candidate.
struct EllipticWitness {
  std::array<Integer, 3> sorted;
  int candidate = 1;  // 1: a2+a3, 2: gcd term, 3: (c, d) minimum
  std::optional<std::pair<Integer, Integer>> cd;
};

struct SeshadriResult {
  std::variant<QuadraticValue, SeshadriInterval> bound;
  std::string witness;
  std::optional<EllipticWitness> elliptic;

  bool is_exact() const { return std::holds_alternative<QuadraticValue>(bound); }
  const QuadraticValue& value() const { return std::get<QuadraticValue>(bound); }
  const SeshadriInterval& interval() const { return std::get<SeshadriInterval>(bound); }
};

SeshadriResult seshadri_picard_one(std::int64_t d);

/// L ample on E x E: L^2 > 0 and L.(F1+F2+Diag) = 2(b1+b2+b3) > 0.
bool ample_check_elliptic_square(std::int64_t b1, std::int64_t b2, std::int64_t b3);

std::array<Integer, 3> sorted_descending(std::int64_t b1, std::int64_t b2, std::int64_t b3);

struct EllipticCandidates {
  Integer sum_tail;   // a2 + a3
  Integer gcd_term;   // (a2 a1^2 + a1 a2^2 + a3 (a1+a2)^2) / gcd(a1,a2)^2
  std::optional<Integer> pair_min;  // absent when no admissible (c, d)
  std::optional<std::pair<Integer, Integer>> pair_argmin;
};

/// The three candidate values, with (c, d) >= 1 coprime and 2(c+d)^2 < (a1+a2)^2.
EllipticCandidates elliptic_square_candidates(const std::array<Integer, 3>& sorted);

/// Minimum of the candidates. Throws NotAmple.
SeshadriResult seshadri_elliptic_square(std::int64_t b1, std::int64_t b2, std::int64_t b3);

/// [sqrt(d1 d2)/2, sqrt(2 d1 d2)].
SeshadriResult seshadri_interval_very_general(std::int64_t d1, std::int64_t d2);

/// sqrt(l2/2): lower bound for eps whenever eps is not an integer.
QuadraticValue seshadri_lower_bound_nonintegral(std::int64_t l2);

/// Dispatch on the spec variant.
SeshadriResult seshadri(const SurfaceSpec& spec);

}  // namespace absurf

#endif  // ABSURF_SESHADRI_HPP
