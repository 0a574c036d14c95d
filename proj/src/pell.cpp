#include "absurf/pell.hpp"

#include <stdexcept>
#include <utility>

#include "absurf/error.hpp"

namespace absurf {

ContinuedFraction continued_fraction_sqrt(const Integer& n) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "continued fraction needs n >= 1, got " + n.str());
  const Integer a0 = isqrt(n);
  if (a0 * a0 == n) throw Error(ErrorKind::PerfectSquare, n.str() + " is a perfect square");

  ContinuedFraction cf{a0, {}};
  Integer m = 0;
  Integer d = 1;
  Integer a = a0;
  do {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    cf.period.push_back(a);
  } while (a != 2 * a0);
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
  std::vector<Convergent> out;
  out.reserve(count);
  // p_{-1}/q_{-1} = 1/0, p_{-2}/q_{-2} = 0/1
  Integer p_prev = 1, q_prev = 0;
  Integer p_prev2 = 0, q_prev2 = 1;
  for (std::size_t k = 0; k < count; ++k) {
    const Integer& a = k == 0 ? cf.integer_part : cf.period[(k - 1) % cf.period.size()];
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, p);
    q_prev2 = std::exchange(q_prev, q);
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

PellSolution pell_fundamental(const Integer& n) {
  ContinuedFraction cf = continued_fraction_sqrt(n);
  const std::size_t r = cf.period.size();
  const std::size_t index = r % 2 == 0 ? r - 1 : 2 * r - 1;
  std::vector<Convergent> cs = convergents(cf, index + 1);
  PellSolution sol{n, cs[index].numerator, cs[index].denominator};
  if (sol.x * sol.x - n * sol.y * sol.y != 1)
    throw std::logic_error("Pell convergent check failed for n = " + n.str());
  return sol;
}

}  // namespace absurf
