#ifndef ABSURF_SWEEP_HPP
#define ABSURF_SWEEP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absurf/criteria.hpp"

namespace absurf {

enum class OutputFormat { Csv, Json };

/// N_p over a one-parameter family: the template holds one "{}" placeholder
/// that is replaced by each integer of [from, to] in steps of `step`.
struct SweepPlan {
  std::string spec_template;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t step = 1;
  int p_from = 0;
  int p_to = 0;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  // empty: caller prints
  NpOptions options;
};

struct SweepRow {
  std::string spec;
  std::string l2;
  std::string eps;
  int p = 0;
  std::string status;
  std::string rules;
  std::string alpha;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Throws ParseError for an empty range, step < 1, a bad p range, a template
/// without placeholder, or any instantiation that does not parse.
void validate(const SweepPlan& plan);

std::string instantiate(const std::string& spec_template, std::int64_t value);

/// Rows ordered range-major, then by p. `threads` == 0 means sweep_threads().
std::vector<SweepRow> run_sweep(const SweepPlan& plan, unsigned threads = 0);

/// ABSURF_THREADS if set to a positive integer, else hardware concurrency.
unsigned sweep_threads();

std::string render_csv(const std::vector<SweepRow>& rows);
std::string render_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::string_view text);

/// Renders in plan.format and writes plan.output_path. Throws IoError.
void write_sweep(const SweepPlan& plan, const std::vector<SweepRow>& rows);

}  // namespace absurf

#endif  // ABSURF_SWEEP_HPP
