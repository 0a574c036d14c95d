#ifndef ABSURF_CRITERIA_HPP
#define ABSURF_CRITERIA_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absurf/exactmath.hpp"
#include "absurf/seshadri.hpp"

namespace absurf {

enum class PropertyKind { SyzygyNp, KVeryAmple, Koszul };

struct Property {
  PropertyKind kind;
  int index = 0;  // p for N_p, k for k-very ampleness, unused for Koszul
};

enum class Status { Holds, Fails, Unknown };

struct FiredRule {
  std::string id;
  std::string cite;
};

using DiagnosticValue = std::variant<Integer, QuadraticValue, std::string>;

/// Three-valued decision with the rules that produced it.
///
/// Holds always carries at least one fired rule. Fails is only produced by
/// the large-L^2 equivalences and then carries rule "LR" (N_p) or "VL"
/// (k-very ampleness) together with the threshold in the diagnostics.
struct Verdict {
  Property property;
  Status status = Status::Unknown;
  std::vector<FiredRule> rules;
  std::map<std::string, DiagnosticValue> diagnostics;

  bool fired(std::string_view id) const;
};

std::string to_string(Status status);
std::string to_string(const Property& property);

/// alpha(t) = l2*(t - s) - s*t^2, concave with its vertex at t = l2/(2s).
/// s = p+2 for N_p, k+1 for k-very ampleness, 3 for Koszul.
struct CriterionPolynomial {
  Integer l2;
  Integer shift;

  QuadraticValue operator()(const QuadraticValue& t) const;
  Rational vertex() const { return Rational(l2, 2 * shift); }
};

QuadraticValue alpha_value(const Integer& l2, const QuadraticValue& eps, const Integer& shift);

struct NpOptions {
  /// Caller asserts eps is not an integer (enables R5 for specs whose eps
  /// is not computed exactly).
  bool eps_nonintegral = false;
};

/// Property N_p. Rules: R1 alpha > 0, R2 eps >= 2(p+2), R3 Picard-one
/// d >= 2(p+2)^2, R4 very general L^2 > 81/8 (p+2)^2, R5 non-integral eps with
/// L^2 > 9/2 (p+2)^2, R6 E x E self-product hypotheses. Throws InvalidSpec,
/// NotAmple.
Verdict np_verdict(const SurfaceSpec& spec, int p, NpOptions options = {});

struct NpMaxResult {
  std::optional<int> max_p;
  std::vector<Verdict> trace;
};

/// Largest p with N_p Holds, scanning upward from 0; trace ends at the first
/// p that is not Holds.
NpMaxResult np_max(const SurfaceSpec& spec, NpOptions options = {});

/// Which hypothesis set of the E x E criterion is satisfied: 1, 2, or 0 for neither.
int self_product_branch(std::int64_t b1, std::int64_t b2, std::int64_t b3, int p);

/// N_p for an E x E class: R6 when a hypothesis set holds, else the direct
/// route through the exact Seshadri constant. Throws NotAmple.
Verdict self_product_np(std::int64_t b1, std::int64_t b2, std::int64_t b3, int p);

Verdict kvery_verdict(const SurfaceSpec& spec, int k);

/// Never Fails.
Verdict koszul_verdict(const SurfaceSpec& spec);

/// Smallest guaranteed multiple m with L^m satisfying N_p: very general specs,
/// or explicit specs with options.eps_nonintegral. Throws UnsupportedSpec.
Integer multiple_for_np(const SurfaceSpec& spec, int p, NpOptions options = {});

}  // namespace absurf

#endif  // ABSURF_CRITERIA_HPP
