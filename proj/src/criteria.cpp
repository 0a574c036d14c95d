#include "absurf/criteria.hpp"

#include <algorithm>
#include <stdexcept>

#include "absurf/error.hpp"

namespace absurf {

namespace {

const char* const kCiteR1 = "L^2(eps-p-2)-(p+2)eps^2 > 0 implies N_p";
const char* const kCiteR2 = "eps >= 2(p+2) implies N_p";
const char* const kCiteR3 = "type (1,d) with Picard number one and d >= 2(p+2)^2 implies N_p";
const char* const kCiteR4 = "very general with L^2 > 81/8 (p+2)^2 implies N_p";
const char* const kCiteR5 = "eps not an integer and L^2 > 9/2 (p+2)^2 implies N_p";
const char* const kCiteR6 = "E x E class meeting the self-product hypotheses satisfies N_p";
const char* const kCiteLR = "for L^2 > (p+2)(p+3)^2: N_p iff L^2(eps-p-2)-(p+2)eps^2 > 0";
const char* const kCiteV1 = "L^2(eps-k-1)-(k+1)eps^2 > 0 implies k-very ample";
const char* const kCiteVL = "for L^2 > (k+1)(k+2)^2: k-very ample iff L^2(eps-k-1)-(k+1)eps^2 > 0";
const char* const kCiteK1 = "L^2(eps-3)-3eps^2 > 0 implies Koszul";
const char* const kCiteK2 = "eps >= 6 implies Koszul";
const char* const kCiteK3 = "very general with L^2 > 729/8 implies Koszul";

// Seshadri data the rules read: exact value or interval, plus integrality.
struct Resolved {
  Integer l2;
  SeshadriResult seshadri;
  bool nonintegral = false;

  bool exact() const { return seshadri.is_exact(); }
};

Resolved resolve(const SurfaceSpec& spec, NpOptions options) {
  validate(spec);
  Resolved r{self_intersection(spec), seshadri(spec), false};
  if (std::holds_alternative<VeryGeneral>(spec)) {
    r.nonintegral = options.eps_nonintegral;
    return r;
  }
  const QuadraticValue& eps = r.seshadri.value();
  if (std::holds_alternative<Explicit>(spec)) {
    if (options.eps_nonintegral) {
      // A non-integral eps is bounded below by sqrt(L^2/2).
      if (eps.is_integer())
        throw Error(ErrorKind::InvalidSpec, "eps asserted non-integral but is " + to_string(eps));
      if (eps * eps * QuadraticValue(2) < QuadraticValue(Rational(r.l2)))
        throw Error(ErrorKind::InvalidSpec, "eps asserted non-integral but eps^2 < l2/2");
    }
    r.nonintegral = options.eps_nonintegral;
    return r;
  }
  if (options.eps_nonintegral && eps.is_integer())
    throw Error(ErrorKind::InvalidSpec, "eps asserted non-integral but equals " + to_string(eps));
  r.nonintegral = !eps.is_integer();
  return r;
}

void record_eps(Verdict& v, const Resolved& r, const CriterionPolynomial& alpha) {
  v.diagnostics["l2"] = r.l2;
  v.diagnostics["shift"] = alpha.shift;
  if (r.exact()) {
    v.diagnostics["eps"] = r.seshadri.value();
    v.diagnostics["alpha"] = alpha(r.seshadri.value());
  } else {
    const SeshadriInterval& iv = r.seshadri.interval();
    v.diagnostics["eps_lo"] = iv.lower;
    v.diagnostics["eps_hi"] = iv.upper;
    v.diagnostics["alpha_lo"] = alpha(iv.lower);
    v.diagnostics["alpha_hi"] = alpha(iv.upper);
  }
}

// alpha > 0 on the whole Seshadri range; endpoints suffice by concavity.
bool alpha_positive(const Resolved& r, const CriterionPolynomial& alpha) {
  if (r.exact()) return quad_sign(alpha(r.seshadri.value())) > 0;
  const SeshadriInterval& iv = r.seshadri.interval();
  return quad_sign(alpha(iv.lower)) > 0 && quad_sign(alpha(iv.upper)) > 0;
}

// eps >= bound on the whole range.
bool eps_at_least(const Resolved& r, const Integer& bound) {
  const QuadraticValue b{Rational(bound)};
  if (r.exact()) return r.seshadri.value() >= b;
  return r.seshadri.interval().lower >= b;
}

void require_nonnegative(int index, const char* name) {
  if (index < 0) throw Error(ErrorKind::InvalidSpec, std::string(name) + " must be >= 0");
}

}  // namespace

bool Verdict::fired(std::string_view id) const {
  return std::any_of(rules.begin(), rules.end(), [&](const FiredRule& r) { return r.id == id; });
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(const Property& property) {
  switch (property.kind) {
    case PropertyKind::SyzygyNp: return "N_" + std::to_string(property.index);
    case PropertyKind::KVeryAmple: return std::to_string(property.index) + "-very-ample";
    case PropertyKind::Koszul: return "koszul";
  }
  return "unknown";
}

QuadraticValue CriterionPolynomial::operator()(const QuadraticValue& t) const {
  const QuadraticValue l{Rational(l2)};
  const QuadraticValue s{Rational(shift)};
  return l * (t - s) - s * t * t;
}

QuadraticValue alpha_value(const Integer& l2, const QuadraticValue& eps, const Integer& shift) {
  return CriterionPolynomial{l2, shift}(eps);
}

int self_product_branch(std::int64_t b1, std::int64_t b2, std::int64_t b3, int p) {
  if (!ample_check_elliptic_square(b1, b2, b3)) throw Error(ErrorKind::NotAmple, "exe class is not ample");
  const auto [a1, a2, a3] = sorted_descending(b1, b2, b3);
  const Integer s = p + 2;
  const Integer tail = a2 + a3;
  const Integer form = a1 * a2 + a2 * a3 + a3 * a1;
  if (tail <= s) return 0;
  // form > s*tail^2 / (2(tail - s)), denominator positive here.
  if (!(2 * form * (tail - s) > s * tail * tail)) return 0;
  if (a3 >= 0) return 1;

  // a3 >= -sqrt(6)(p+2) with a3 < 0.
  if (a3 * a3 > 6 * s * s) return 0;
  if (a1 + 3 * a3 < 0) return 0;
  const Integer g = gcd(a1, a2);
  const Integer g2 = g * g;
  const Integer den = 2 * (a1 + a2) * g2 - (a1 + a2) * (a1 + a2) * s;
  if (den <= 0) return 0;
  if (!(form * den > 2 * s * g2 * g2)) return 0;
  return 2;
}

Verdict np_verdict(const SurfaceSpec& spec, int p, NpOptions options) {
  require_nonnegative(p, "p");
  const Resolved r = resolve(spec, options);
  const Integer s = p + 2;
  const CriterionPolynomial alpha{r.l2, s};

  Verdict v;
  v.property = {PropertyKind::SyzygyNp, p};
  record_eps(v, r, alpha);

  if (alpha_positive(r, alpha)) v.rules.push_back({"R1", kCiteR1});
  if (eps_at_least(r, 2 * s)) v.rules.push_back({"R2", kCiteR2});
  if (const auto* pic = std::get_if<PicardOne>(&spec); pic && Integer(pic->d) >= 2 * s * s)
    v.rules.push_back({"R3", kCiteR3});
  if (std::holds_alternative<VeryGeneral>(spec) && 8 * r.l2 > 81 * s * s) v.rules.push_back({"R4", kCiteR4});
  if (r.nonintegral && 2 * r.l2 > 9 * s * s) v.rules.push_back({"R5", kCiteR5});
  if (const auto* exe = std::get_if<EllipticSquare>(&spec)) {
    int branch = self_product_branch(exe->b1, exe->b2, exe->b3, p);
    if (branch != 0) {
      v.rules.push_back({"R6", kCiteR6});
      v.diagnostics["self_product_branch"] = Integer(branch);
    }
  }

  const Integer large = s * (s + 1) * (s + 1);
  const bool fails = r.l2 > large && r.exact() && quad_sign(alpha(r.seshadri.value())) <= 0;
  if (fails) {
    if (!v.rules.empty())
      throw std::logic_error("sufficient rule " + v.rules.front().id + " contradicts the large-regime equivalence");
    v.status = Status::Fails;
    v.rules.push_back({"LR", kCiteLR});
    v.diagnostics["large_regime_threshold"] = large;
    v.diagnostics["large_regime"] = std::string("l2 > (p+2)(p+3)^2");
    return v;
  }
  v.status = v.rules.empty() ? Status::Unknown : Status::Holds;
  return v;
}

NpMaxResult np_max(const SurfaceSpec& spec, NpOptions options) {
  NpMaxResult out;
  // Every rule needs p + 2 <= sqrt(L^2), so this cap is never reached first.
  const Integer cap = isqrt(self_intersection(spec)) + 1;
  for (int p = 0; p <= cap; ++p) {
    Verdict v = np_verdict(spec, p, options);
    const bool holds = v.status == Status::Holds;
    out.trace.push_back(std::move(v));
    if (!holds) break;
    out.max_p = p;
  }
  return out;
}

Verdict self_product_np(std::int64_t b1, std::int64_t b2, std::int64_t b3, int p) {
  return np_verdict(EllipticSquare{b1, b2, b3}, p);
}

Verdict kvery_verdict(const SurfaceSpec& spec, int k) {
  require_nonnegative(k, "k");
  const Resolved r = resolve(spec, {});
  const Integer s = k + 1;
  const CriterionPolynomial alpha{r.l2, s};

  Verdict v;
  v.property = {PropertyKind::KVeryAmple, k};
  record_eps(v, r, alpha);
  if (alpha_positive(r, alpha)) {
    v.rules.push_back({"V1", kCiteV1});
    v.status = Status::Holds;
    return v;
  }
  const Integer large = s * (s + 1) * (s + 1);
  if (r.l2 > large && r.exact()) {
    v.status = Status::Fails;
    v.rules.push_back({"VL", kCiteVL});
    v.diagnostics["large_regime_threshold"] = large;
    v.diagnostics["large_regime"] = std::string("l2 > (k+1)(k+2)^2");
  }
  return v;
}

Verdict koszul_verdict(const SurfaceSpec& spec) {
  const Resolved r = resolve(spec, {});
  const CriterionPolynomial alpha{r.l2, 3};

  Verdict v;
  v.property = {PropertyKind::Koszul, 0};
  record_eps(v, r, alpha);
  if (alpha_positive(r, alpha)) v.rules.push_back({"K1", kCiteK1});
  if (eps_at_least(r, 6)) v.rules.push_back({"K2", kCiteK2});
  if (std::holds_alternative<VeryGeneral>(spec) && 8 * r.l2 > 729) v.rules.push_back({"K3", kCiteK3});
  v.status = v.rules.empty() ? Status::Unknown : Status::Holds;
  return v;
}

Integer multiple_for_np(const SurfaceSpec& spec, int p, NpOptions options) {
  require_nonnegative(p, "p");
  const Integer s = p + 2;
  if (std::holds_alternative<VeryGeneral>(spec)) {
    validate(spec);
    return ceil_div_sqrt(9 * s, 2, 2 * self_intersection(spec));
  }
  if (std::holds_alternative<Explicit>(spec) && options.eps_nonintegral) {
    const Resolved r = resolve(spec, options);
    return ceil_div_sqrt(3 * s, 1, 2 * r.l2);
  }
  throw Error(ErrorKind::UnsupportedSpec,
              "multiple needs a vg spec or an explicit spec with asserted non-integral eps");
}

}  // namespace absurf
