// absurf: syzygy, very-ampleness and Koszulness criteria for polarized
// abelian surfaces, with exact Seshadri constants and region plots.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "absurf/criteria.hpp"
#include "absurf/error.hpp"
#include "absurf/okounkov.hpp"
#include "absurf/pell.hpp"
#include "absurf/report.hpp"
#include "absurf/seshadri.hpp"
#include "absurf/svg.hpp"
#include "absurf/sweep.hpp"

namespace {

using absurf::Json;

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int report_error(std::string_view kind, const std::string& message, int code) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
  return code;
}

Json polygon_json(const absurf::Polygon& poly) {
  Json vertices = Json::array();
  for (const absurf::Point& p : poly.vertices())
    vertices.push_back(Json::array({absurf::to_string(p.t), absurf::to_string(p.y)}));
  return Json{{"vertices", std::move(vertices)},
              {"area", absurf::to_string(absurf::polygon_area(poly))},
              {"slice_at_2", absurf::to_string(absurf::slice_length(poly, 2))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "absurf: exact criteria for property N_p, k-very ampleness and Koszulness of polarized abelian surfaces.\n"
      "Spec strings: picard1:d=<int> | vg:d1=<int>,d2=<int> | exe:b=<int>,<int>,<int> | "
      "explicit:l2=<int>,eps=<scalar>.\n"
      "Explicit specs are taken at face value: only 0 < eps and eps^2 <= l2 are checked."};
  app.require_subcommand(1);

  // pell
  std::string pell_n;
  auto* pell = app.add_subcommand("pell", "Fundamental solution of x^2 - n y^2 = 1");
  pell->add_option("n", pell_n, "Positive nonsquare integer")->required();

  // seshadri
  auto* sesh = app.add_subcommand("seshadri", "Seshadri constant of a surface class");
  sesh->require_subcommand(1);
  std::int64_t sesh_d = 0, sesh_d1 = 0, sesh_d2 = 0;
  std::string sesh_b;
  auto* sesh_pic = sesh->add_subcommand("picard1", "Type (1,d), Picard number one");
  sesh_pic->add_option("--d", sesh_d)->required();
  auto* sesh_exe = sesh->add_subcommand("exe", "E x E class b1 F1 + b2 F2 + b3 Diag");
  sesh_exe->add_option("--b", sesh_b, "b1,b2,b3")->required();
  auto* sesh_vg = sesh->add_subcommand("vg", "Very general of type (d1,d2): interval");
  sesh_vg->add_option("--d1", sesh_d1)->required();
  sesh_vg->add_option("--d2", sesh_d2)->required();

  // np
  std::string np_spec;
  int np_p = 0;
  bool np_nonintegral = false;
  auto* np = app.add_subcommand("np", "Property N_p");
  np->add_option("--spec", np_spec)->required();
  auto* np_p_opt = np->add_option("--p", np_p, "Syzygy index p >= 0");
  auto* np_max_flag = np->add_flag("--max-p", "Largest p for which N_p is decided to hold");
  np_p_opt->excludes(np_max_flag);
  np->add_flag("--assert-eps-nonintegral", np_nonintegral, "Caller asserts eps is not an integer");

  // kva
  std::string kva_spec;
  int kva_k = 0;
  auto* kva = app.add_subcommand("kva", "k-very ampleness");
  kva->add_option("--spec", kva_spec)->required();
  kva->add_option("--k", kva_k)->required();

  // koszul
  std::string koszul_spec;
  auto* koszul = app.add_subcommand("koszul", "Koszulness of the section ring");
  koszul->add_option("--spec", koszul_spec)->required();

  // multiple
  std::string mult_spec;
  int mult_p = 0;
  bool mult_nonintegral = false;
  auto* mult = app.add_subcommand("multiple", "Multiple m with L^m satisfying N_p");
  mult->add_option("--spec", mult_spec)->required();
  mult->add_option("--p", mult_p)->required();
  mult->add_flag("--assert-eps-nonintegral", mult_nonintegral);

  // sweep
  absurf::SweepPlan plan;
  std::string sweep_format = "csv";
  unsigned sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "N_p over a one-parameter family of specs");
  sweep->add_option("--template", plan.spec_template, "Spec string with one {} placeholder")->required();
  sweep->add_option("--from", plan.from)->required();
  sweep->add_option("--to", plan.to)->required();
  sweep->add_option("--step", plan.step)->capture_default_str();
  sweep->add_option("--p-from", plan.p_from)->capture_default_str();
  sweep->add_option("--p-to", plan.p_to)->capture_default_str();
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sweep->add_option("--out", plan.output_path, "Output file (default: stdout)");
  sweep->add_option("--threads", sweep_threads, "Worker threads (default: ABSURF_THREADS or all cores)");
  sweep->add_flag("--assert-eps-nonintegral", plan.options.eps_nonintegral);

  // region
  std::string region_eps, region_alpha, region_svg;
  double region_scale = 100.0;
  auto* region = app.add_subcommand("region", "Exact extremal regions and their SVG plot");
  region->add_option("--eps", region_eps, "1 < eps < 2")->required();
  region->add_option("--alpha", region_alpha, "eps < alpha < 2");
  region->add_option("--svg", region_svg, "SVG output path")->required();
  region->add_option("--scale", region_scale, "Pixels per unit")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("ParseError", e.what(), kExitValidation);
  }

  try {
    if (*pell) {
      const absurf::Integer n(absurf::parse_int(pell_n));
      emit(absurf::to_json(absurf::pell_fundamental(n), absurf::continued_fraction_sqrt(n)));
    } else if (*sesh) {
      absurf::SurfaceSpec spec;
      if (*sesh_pic) {
        spec = absurf::PicardOne{sesh_d};
      } else if (*sesh_exe) {
        spec = absurf::parse_surface_spec("exe:b=" + sesh_b);
      } else {
        spec = absurf::VeryGeneral{sesh_d1, sesh_d2};
      }
      emit(absurf::to_json(absurf::seshadri(spec), absurf::self_intersection(spec)));
    } else if (*np) {
      const auto spec = absurf::parse_surface_spec(np_spec);
      const absurf::NpOptions options{np_nonintegral};
      if (*np_max_flag) {
        const auto result = absurf::np_max(spec, options);
        Json trace = Json::array();
        for (const auto& v : result.trace) trace.push_back(absurf::to_json(v));
        emit(Json{{"spec", absurf::to_string(spec)},
                  {"max_p", result.max_p ? Json(*result.max_p) : Json(nullptr)},
                  {"trace", std::move(trace)}});
      } else {
        if (!*np_p_opt) return report_error("ParseError", "np needs --p or --max-p", kExitValidation);
        emit(absurf::to_json(absurf::np_verdict(spec, np_p, options)));
      }
    } else if (*kva) {
      emit(absurf::to_json(absurf::kvery_verdict(absurf::parse_surface_spec(kva_spec), kva_k)));
    } else if (*koszul) {
      emit(absurf::to_json(absurf::koszul_verdict(absurf::parse_surface_spec(koszul_spec))));
    } else if (*mult) {
      const auto spec = absurf::parse_surface_spec(mult_spec);
      const auto m = absurf::multiple_for_np(spec, mult_p, {mult_nonintegral});
      emit(Json{{"spec", absurf::to_string(spec)}, {"p", mult_p}, {"multiple", m.convert_to<std::int64_t>()}});
    } else if (*sweep) {
      plan.format = sweep_format == "json" ? absurf::OutputFormat::Json : absurf::OutputFormat::Csv;
      const auto rows = absurf::run_sweep(plan, sweep_threads);
      if (plan.output_path.empty()) {
        std::cout << (plan.format == absurf::OutputFormat::Csv ? absurf::render_csv(rows)
                                                                : absurf::render_json(rows));
      } else {
        absurf::write_sweep(plan, rows);
      }
    } else if (*region) {
      const absurf::QuadraticValue eps = absurf::parse_scalar(region_eps);
      std::optional<absurf::QuadraticValue> alpha;
      if (!region_alpha.empty()) alpha = absurf::parse_scalar(region_alpha);
      const std::string svg = absurf::render_region_svg(eps, alpha, region_scale);
      std::ofstream file(region_svg, std::ios::binary);
      if (!file) throw absurf::Error(absurf::ErrorKind::IoError, "cannot open '" + region_svg + "'");
      file << svg;
      if (!file) throw absurf::Error(absurf::ErrorKind::IoError, "failed writing '" + region_svg + "'");
      Json out{{"delta", polygon_json(absurf::region_delta(eps))}};
      if (alpha) out["delta_alpha"] = polygon_json(absurf::region_delta_alpha(eps, *alpha));
      out["svg"] = region_svg;
      emit(out);
    }
  } catch (const absurf::Error& e) {
    return report_error(absurf::to_string(e.kind()), e.what(),
                        absurf::is_validation_error(e.kind()) ? kExitValidation : kExitComputation);
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what(), kExitComputation);
  }
  return 0;
}
