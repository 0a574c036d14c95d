#include "absurf/seshadri.hpp"

#include <algorithm>
#include <functional>

#include "absurf/error.hpp"
#include "absurf/pell.hpp"

namespace absurf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Integer elliptic_l2(std::int64_t b1, std::int64_t b2, std::int64_t b3) {
  Integer x = b1, y = b2, z = b3;
  return 2 * (x * y + y * z + z * x);
}

}  // namespace

void validate(const SurfaceSpec& spec) {
  std::visit(overloaded{
                 [](const PicardOne& s) {
                   if (s.d < 1) throw Error(ErrorKind::InvalidSpec, "picard1 needs d >= 1");
                 },
                 [](const VeryGeneral& s) {
                   if (s.d1 < 1 || s.d2 < 1) throw Error(ErrorKind::InvalidSpec, "vg needs d1, d2 >= 1");
                   if (s.d1 > s.d2) throw Error(ErrorKind::InvalidSpec, "vg needs d1 <= d2");
                 },
                 [](const EllipticSquare& s) {
                   if (!ample_check_elliptic_square(s.b1, s.b2, s.b3))
                     throw Error(ErrorKind::NotAmple, "exe class is not ample");
                 },
                 [](const Explicit& s) {
                   if (s.l2 < 2 || s.l2 % 2 != 0)
                     throw Error(ErrorKind::InvalidSpec, "explicit needs a positive even l2");
                   if (quad_sign(s.eps) <= 0) throw Error(ErrorKind::InvalidSpec, "explicit needs eps > 0");
                   if (s.eps * s.eps > QuadraticValue(s.l2))
                     throw Error(ErrorKind::InvalidSpec, "explicit needs eps^2 <= l2");
                 },
             },
             spec);
}

Integer self_intersection(const SurfaceSpec& spec) {
  return std::visit(overloaded{
                        [](const PicardOne& s) { return Integer(2) * s.d; },
                        [](const VeryGeneral& s) { return Integer(2) * s.d1 * s.d2; },
                        [](const EllipticSquare& s) { return elliptic_l2(s.b1, s.b2, s.b3); },
                        [](const Explicit& s) { return Integer(s.l2); },
                    },
                    spec);
}

SeshadriResult seshadri_picard_one(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidSpec, "picard1 needs d >= 1");
  const Integer n = Integer(2) * d;
  if (is_perfect_square(n)) {
    return {QuadraticValue(Rational(isqrt(n))), "picard1: 2d = " + n.str() + " is a square, eps = sqrt(2d)", {}};
  }
  // l0^2 - 2d k0^2 = 1 with l0 = x, k0 = y.
  PellSolution pell = pell_fundamental(n);
  return {QuadraticValue(Rational(n * pell.y, pell.x)),
          "picard1: Pell l^2-" + n.str() + "k^2=1 primitive (l0,k0)=(" + pell.x.str() + "," + pell.y.str() +
              "), eps = 2d*k0/l0",
          {}};
}

bool ample_check_elliptic_square(std::int64_t b1, std::int64_t b2, std::int64_t b3) {
  return elliptic_l2(b1, b2, b3) > 0 && Integer(b1) + b2 + b3 > 0;
}

std::array<Integer, 3> sorted_descending(std::int64_t b1, std::int64_t b2, std::int64_t b3) {
  std::array<Integer, 3> a{b1, b2, b3};
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

EllipticCandidates elliptic_square_candidates(const std::array<Integer, 3>& sorted) {
  const Integer& a1 = sorted[0];
  const Integer& a2 = sorted[1];
  const Integer& a3 = sorted[2];
  EllipticCandidates out;
  out.sum_tail = a2 + a3;
  const Integer g = gcd(a1, a2);
  const Integer s = a1 + a2;
  // Always integral: g^2 | a1*a2 and g | a1 + a2.
  out.gcd_term = (a2 * a1 * a1 + a1 * a2 * a2 + a3 * s * s) / (g * g);

  const Integer bound = s * s;
  for (Integer total = 2; 2 * total * total < bound; ++total) {
    for (Integer c = 1; c < total; ++c) {
      const Integer d = total - c;
      if (gcd(c, d) != 1) continue;
      Integer value = a1 * d * d + a2 * c * c + a3 * total * total;
      if (!out.pair_min || value < *out.pair_min) {
        out.pair_min = value;
        out.pair_argmin = std::make_pair(c, d);
      }
    }
  }
  return out;
}

SeshadriResult seshadri_elliptic_square(std::int64_t b1, std::int64_t b2, std::int64_t b3) {
  if (!ample_check_elliptic_square(b1, b2, b3))
    throw Error(ErrorKind::NotAmple, "exe class (" + std::to_string(b1) + "," + std::to_string(b2) + "," +
                                         std::to_string(b3) + ") is not ample");
  EllipticWitness witness{sorted_descending(b1, b2, b3), 1, {}};
  EllipticCandidates cand = elliptic_square_candidates(witness.sorted);

  Integer best = cand.sum_tail;
  std::string text = "exe: candidate (i) a2+a3";
  if (cand.gcd_term < best) {
    best = cand.gcd_term;
    witness.candidate = 2;
    text = "exe: candidate (ii) (a2a1^2+a1a2^2+a3(a1+a2)^2)/gcd(a1,a2)^2";
  }
  if (cand.pair_min && *cand.pair_min < best) {
    best = *cand.pair_min;
    witness.candidate = 3;
    witness.cd = cand.pair_argmin;
    text = "exe: candidate (iii) a1d^2+a2c^2+a3(c+d)^2 at (c,d)=(" + cand.pair_argmin->first.str() + "," +
           cand.pair_argmin->second.str() + ")";
  }
  return {QuadraticValue(Rational(best)), std::move(text), std::move(witness)};
}

SeshadriResult seshadri_interval_very_general(std::int64_t d1, std::int64_t d2) {
  if (d1 < 1 || d2 < 1) throw Error(ErrorKind::InvalidSpec, "vg needs d1, d2 >= 1");
  const Integer product = Integer(d1) * d2;
  SeshadriInterval interval{QuadraticValue(Rational(1, 2)) * sqrt_exact(Rational(product)),
                            sqrt_exact(Rational(2 * product))};
  return {std::move(interval), "vg: lower sqrt(d1d2)/2, upper sqrt(L^2)", {}};
}

QuadraticValue seshadri_lower_bound_nonintegral(std::int64_t l2) {
  if (l2 < 2) throw Error(ErrorKind::InvalidSpec, "nonintegral lower bound needs l2 >= 2");
  return sqrt_exact(Rational(l2, 2));
}

SeshadriResult seshadri(const SurfaceSpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const PicardOne& s) { return seshadri_picard_one(s.d); },
                        [](const VeryGeneral& s) { return seshadri_interval_very_general(s.d1, s.d2); },
                        [](const EllipticSquare& s) { return seshadri_elliptic_square(s.b1, s.b2, s.b3); },
                        [](const Explicit& s) { return SeshadriResult{s.eps, "explicit: caller-supplied", {}}; },
                    },
                    spec);
}

}  // namespace absurf
