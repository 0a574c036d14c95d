#include "absurf/report.hpp"

#include <charconv>
#include <limits>
#include <type_traits>
#include <vector>

#include "absurf/error.hpp"

namespace absurf {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "cannot parse spec '" + std::string(text) + "': " + why);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// "key=value" -> value, checking the key.
std::string_view field(std::string_view whole, std::string_view part, std::string_view key) {
  const std::size_t eq = part.find('=');
  if (eq == std::string_view::npos || part.substr(0, eq) != key)
    parse_fail(whole, "expected " + std::string(key) + "=<value>");
  return part.substr(eq + 1);
}

Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

std::string diag_text(const DiagnosticValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return to_string(v);
        }
      },
      value);
}

}  // namespace

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  return value;
}

SurfaceSpec parse_surface_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) parse_fail(text, "missing ':'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  try {
    if (kind == "picard1") {
      return PicardOne{parse_int(field(text, body, "d"))};
    }
    if (kind == "vg") {
      auto parts = split(body, ',');
      if (parts.size() != 2) parse_fail(text, "expected d1=<int>,d2=<int>");
      return VeryGeneral{parse_int(field(text, parts[0], "d1")), parse_int(field(text, parts[1], "d2"))};
    }
    if (kind == "exe") {
      auto parts = split(field(text, body, "b"), ',');
      if (parts.size() != 3) parse_fail(text, "expected b=<int>,<int>,<int>");
      return EllipticSquare{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
    }
    if (kind == "explicit") {
      const std::size_t comma = body.find(',');
      if (comma == std::string_view::npos) parse_fail(text, "expected l2=<int>,eps=<scalar>");
      return Explicit{parse_int(field(text, body.substr(0, comma), "l2")),
                      parse_scalar(field(text, body.substr(comma + 1), "eps"))};
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    if (std::string_view(e.what()).starts_with("cannot parse spec")) throw;
    parse_fail(text, e.what());
  }
  parse_fail(text, "unknown surface kind '" + std::string(kind) + "'");
}

std::string to_string(const SurfaceSpec& spec) {
  struct {
    std::string operator()(const PicardOne& s) const { return "picard1:d=" + std::to_string(s.d); }
    std::string operator()(const VeryGeneral& s) const {
      return "vg:d1=" + std::to_string(s.d1) + ",d2=" + std::to_string(s.d2);
    }
    std::string operator()(const EllipticSquare& s) const {
      return "exe:b=" + std::to_string(s.b1) + "," + std::to_string(s.b2) + "," + std::to_string(s.b3);
    }
    std::string operator()(const Explicit& s) const {
      return "explicit:l2=" + std::to_string(s.l2) + ",eps=" + to_string(s.eps);
    }
  } visitor;
  return std::visit(visitor, spec);
}

std::string eps_text(const SeshadriResult& result) {
  if (result.is_exact()) return to_string(result.value());
  return "[" + to_string(result.interval().lower) + "," + to_string(result.interval().upper) + "]";
}

std::string alpha_text(const Verdict& verdict) {
  const auto& d = verdict.diagnostics;
  if (auto it = d.find("alpha"); it != d.end()) return diag_text(it->second);
  auto lo = d.find("alpha_lo");
  auto hi = d.find("alpha_hi");
  if (lo == d.end() || hi == d.end()) return "";
  return "[" + diag_text(lo->second) + "," + diag_text(hi->second) + "]";
}

std::string rules_text(const Verdict& verdict) {
  std::string out;
  for (const FiredRule& rule : verdict.rules) {
    if (!out.empty()) out += ';';
    out += rule.id;
  }
  return out;
}

Json to_json(const PellSolution& pell, const ContinuedFraction& cf) {
  Json period = Json::array();
  for (const Integer& a : cf.period) period.push_back(integer_json(a));
  return Json{{"n", integer_json(pell.n)},
              {"x", pell.x.str()},
              {"y", pell.y.str()},
              {"cf", Json{{"a0", integer_json(cf.integer_part)}, {"period", std::move(period)}}}};
}

Json to_json(const SeshadriResult& result, const Integer& l2) {
  Json out;
  if (result.is_exact()) {
    out["value"] = to_string(result.value());
  } else {
    out["interval"] = Json::array({to_string(result.interval().lower), to_string(result.interval().upper)});
  }
  out["witness"] = result.witness;
  if (result.elliptic) {
    Json e;
    e["sorted"] = Json::array();
    for (const Integer& a : result.elliptic->sorted) e["sorted"].push_back(integer_json(a));
    e["candidate"] = result.elliptic->candidate;
    if (result.elliptic->cd)
      e["cd"] = Json::array({integer_json(result.elliptic->cd->first), integer_json(result.elliptic->cd->second)});
    out["elliptic"] = std::move(e);
  }
  out["l2"] = integer_json(l2);
  return out;
}

Json to_json(const Verdict& verdict) {
  Json rules = Json::array();
  for (const FiredRule& rule : verdict.rules) rules.push_back(Json{{"id", rule.id}, {"cite", rule.cite}});
  Json diagnostics = Json::object();
  for (const auto& [key, value] : verdict.diagnostics) {
    if (const auto* i = std::get_if<Integer>(&value)) {
      diagnostics[key] = integer_json(*i);
    } else {
      diagnostics[key] = diag_text(value);
    }
  }
  return Json{{"property", to_string(verdict.property)},
              {"status", to_string(verdict.status)},
              {"rules", std::move(rules)},
              {"diagnostics", std::move(diagnostics)}};
}

}  // namespace absurf
