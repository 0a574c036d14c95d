#ifndef ABSURF_PELL_HPP
#define ABSURF_PELL_HPP

#include <vector>

#include "absurf/exactmath.hpp"

namespace absurf {

/// sqrt(n) = [integer_part; (period)] with period repeating forever.
struct ContinuedFraction {
  Integer integer_part;
  std::vector<Integer> period;
};

/// Minimal positive solution of x^2 - n*y^2 = 1.
struct PellSolution {
  Integer n;
  Integer x;
  Integer y;
};

/// Numerator/denominator of a continued-fraction convergent.
struct Convergent {
  Integer numerator;
  Integer denominator;
};

/// Periodic expansion of sqrt(n) via the (m, d, a) recurrence.
/// Throws PerfectSquare if n is a square, InvalidSpec if n < 1.
ContinuedFraction continued_fraction_sqrt(const Integer& n);

/// The first `count` convergents p_k/q_k of the expansion (k = 0..count-1).
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count);

/// Fundamental solution of x^2 - n*y^2 = 1, taken from the convergent that
/// closes the first period (second period when the period length is odd).
PellSolution pell_fundamental(const Integer& n);

}  // namespace absurf

#endif  // ABSURF_PELL_HPP
