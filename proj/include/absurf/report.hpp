#ifndef ABSURF_REPORT_HPP
#define ABSURF_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "absurf/criteria.hpp"
#include "absurf/pell.hpp"
#include "absurf/seshadri.hpp"

namespace absurf {

using Json = nlohmann::ordered_json;

/// Spec strings: picard1:d=<int> | vg:d1=<int>,d2=<int> |
/// exe:b=<int>,<int>,<int> | explicit:l2=<int>,eps=<scalar>.
/// Throws ParseError; well-formedness is checked separately by validate().
SurfaceSpec parse_surface_spec(std::string_view text);
std::string to_string(const SurfaceSpec& spec);

std::int64_t parse_int(std::string_view text);

/// Canonical scalar text, or "[lo,hi]" for an interval.
std::string eps_text(const SeshadriResult& result);
/// Canonical alpha text from a verdict's diagnostics, "[lo,hi]" in interval mode.
std::string alpha_text(const Verdict& verdict);
/// Rule ids joined by ';'.
std::string rules_text(const Verdict& verdict);

Json to_json(const PellSolution& pell, const ContinuedFraction& cf);
Json to_json(const SeshadriResult& result, const Integer& l2);
Json to_json(const Verdict& verdict);

}  // namespace absurf

#endif  // ABSURF_REPORT_HPP
