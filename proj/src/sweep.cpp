#include "absurf/sweep.hpp"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <thread>

#include "absurf/error.hpp"
#include "absurf/report.hpp"

namespace absurf {

namespace {

constexpr std::string_view kPlaceholder = "{}";
constexpr std::string_view kCsvHeader = "spec,l2,eps,p,status,rules,alpha";

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> parse_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quote in CSV line");
  fields.push_back(std::move(current));
  return fields;
}

SweepRow evaluate_row(const std::string& spec_text, int p, NpOptions options) {
  const SurfaceSpec spec = parse_surface_spec(spec_text);
  const Verdict verdict = np_verdict(spec, p, options);
  return {to_string(spec),
          self_intersection(spec).str(),
          eps_text(seshadri(spec)),
          p,
          to_string(verdict.status),
          rules_text(verdict),
          alpha_text(verdict)};
}

}  // namespace

std::string instantiate(const std::string& spec_template, std::int64_t value) {
  std::string out = spec_template;
  const std::string replacement = std::to_string(value);
  for (std::size_t pos = out.find(kPlaceholder); pos != std::string::npos;
       pos = out.find(kPlaceholder, pos + replacement.size())) {
    out.replace(pos, kPlaceholder.size(), replacement);
  }
  return out;
}

void validate(const SweepPlan& plan) {
  if (plan.step < 1) throw Error(ErrorKind::ParseError, "sweep step must be >= 1");
  if (plan.from > plan.to) throw Error(ErrorKind::ParseError, "sweep range is empty");
  if (plan.p_from < 0 || plan.p_from > plan.p_to) throw Error(ErrorKind::ParseError, "sweep p range is empty");
  if (plan.spec_template.find(kPlaceholder) == std::string::npos)
    throw Error(ErrorKind::ParseError, "sweep template has no {} placeholder");
  for (std::int64_t v = plan.from; v <= plan.to; v += plan.step) {
    const std::string text = instantiate(plan.spec_template, v);
    try {
      parse_surface_spec(text);
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "sweep instantiation '" + text + "' does not parse: " + e.what());
    }
  }
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("ABSURF_THREADS")) {
    try {
      const std::int64_t n = parse_int(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const Error&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const SweepPlan& plan, unsigned threads) {
  validate(plan);
  struct Job {
    std::string spec;
    int p;
  };
  std::vector<Job> jobs;
  for (std::int64_t v = plan.from; v <= plan.to; v += plan.step) {
    const std::string text = instantiate(plan.spec_template, v);
    for (int p = plan.p_from; p <= plan.p_to; ++p) jobs.push_back({text, p});
  }

  std::vector<SweepRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  if (threads == 0) threads = sweep_threads();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));

  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < jobs.size(); i += threads) {
      try {
        rows[i] = evaluate_row(jobs[i].spec, jobs[i].p, plan.options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

std::string render_csv(const std::vector<SweepRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRow& r : rows) {
    out += csv_field(r.spec) + ',' + csv_field(r.l2) + ',' + csv_field(r.eps) + ',' + std::to_string(r.p) + ',' +
           csv_field(r.status) + ',' + csv_field(r.rules) + ',' + csv_field(r.alpha) + '\n';
  }
  return out;
}

std::string render_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const SweepRow& r : rows) {
    out.push_back(Json{{"spec", r.spec},
                       {"l2", r.l2},
                       {"eps", r.eps},
                       {"p", r.p},
                       {"status", r.status},
                       {"rules", r.rules},
                       {"alpha", r.alpha}});
  }
  return out.dump(2) + "\n";
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw Error(ErrorKind::ParseError, "unexpected CSV header");
      header = false;
      continue;
    }
    auto f = parse_csv_line(line);
    if (f.size() != 7) throw Error(ErrorKind::ParseError, "CSV row needs 7 fields");
    rows.push_back({f[0], f[1], f[2], static_cast<int>(parse_int(f[3])), f[4], f[5], f[6]});
  }
  return rows;
}

void write_sweep(const SweepPlan& plan, const std::vector<SweepRow>& rows) {
  std::ofstream file(plan.output_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot open '" + plan.output_path + "' for writing");
  file << (plan.format == OutputFormat::Csv ? render_csv(rows) : render_json(rows));
  if (!file) throw Error(ErrorKind::IoError, "failed writing '" + plan.output_path + "'");
}

}  // namespace absurf
