// gfe: command-line front end for the x^2 + y^3 = z^15 verification.

#include "gfe/case_pipeline.hpp"
#include "gfe/catalogue.hpp"
#include "gfe/harness.hpp"
#include "gfe/hypercurve.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace gfe;

namespace {

void print_report(std::ostream& os, const CaseReport& r) {
  os << summary_line(r) << "\n";
  for (const auto& c : r.checks)
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": ")
       << c.detail << "\n";
  for (const auto& s : r.sieves)
    os << "  sieve " << s.label << ": " << s.survivors.size() << " survivors mod " << s.modulus << "\n";
  for (const auto& s : r.solutions) os << "  solution (s, t, u) = (" << s.s << ", " << s.t << ", " << s.u << ")\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  for (const auto& d : r.discrepancies) os << "  DISCREPANCY " << d << "\n";
}

int emit(const CaseReport& r, bool json) {
  if (json) std::cout << to_json(r).dump() << "\n";
  else print_report(std::cout, r);
  return r.ok() ? 0 : 1;
}

struct ConfigFlags {
  std::string config_path;
  std::optional<std::string> y_bound, z_bound, st_bound, height;
  std::optional<std::vector<std::string>> primes;
  std::optional<unsigned> workers;
  std::optional<std::string> output;

  void add_to(CLI::App* app, bool with_output) {
    app->add_option("--config", config_path, "JSON config file (flags override it)")->check(CLI::ExistingFile);
    app->add_option("--y-bound", y_bound, "end-to-end window |y| <= Y");
    app->add_option("--z-bound", z_bound, "end-to-end window |z| <= Z");
    app->add_option("--st-bound", st_bound, "case searches |s|, |t| <= B");
    app->add_option("--height", height, "point search height bound");
    app->add_option("--primes", primes, "descent sieve primes");
    app->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    if (with_output) app->add_option("--output", output, "report file (default: standard output)");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);
    if (y_bound) cfg.y_bound = Int(*y_bound);
    if (z_bound) cfg.z_bound = Int(*z_bound);
    if (st_bound) cfg.st_bound = Int(*st_bound);
    if (height) cfg.height_bound = Int(*height);
    if (primes) {
      cfg.sieve_primes.clear();
      for (const auto& p : *primes) cfg.sieve_primes.push_back(Int(p));
    }
    if (workers) cfg.workers = *workers;
    if (output) cfg.output_path = *output;
    cfg.validate();
    return cfg;
  }
};

Int parse_int(const std::string& text, const std::string& what) {
  Int n;
  if (n.set_str(text, 10) != 0) throw std::invalid_argument(what + " is not an integer: " + text);
  return n;
}

int write_report(const VerificationReport& rep) {
  const auto records = report_records(rep);
  const std::string summary = report_summary(rep);
  if (rep.config.output_path.empty()) {
    for (const auto& r : records) std::cout << r.dump() << "\n";
    std::cerr << summary;
  } else {
    std::ofstream out(rep.config.output_path);
    if (!out) throw std::invalid_argument("cannot write " + rep.config.output_path);
    for (const auto& r : records) out << r.dump() << "\n";
    std::cout << summary;
  }
  return exit_status(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact re-verification of the primitive solutions of x^2 + y^3 = z^15"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print JSON records instead of text");

  ConfigFlags run_flags;
  auto* run = app.add_subcommand("run", "full pipeline, line-delimited JSON report")->alias("report");
  run_flags.add_to(run, true);

  ConfigFlags e2e_flags;
  auto* e2e = app.add_subcommand("end-to-end", "bounded search of x^2 + y^3 = z^15 only");
  e2e_flags.add_to(e2e, true);

  app.add_subcommand("verify-identities", "formal identities and structural curve facts");

  int case_index = 0;
  std::string case_bound = "1000";
  unsigned case_workers = 1;
  auto* search = app.add_subcommand("search-case", "u^5 = f_i(s, t) search (i = 4: congruence elimination)");
  search->add_option("i", case_index, "case index")->required()->check(CLI::IsMember({1, 2, 3, 4, 5, 6}));
  search->add_option("--bound", case_bound, "|s|, |t| <= bound");
  search->add_option("--workers", case_workers)->check(CLI::PositiveNumber);

  int special_j = 0;
  auto* special = app.add_subcommand("case6", "case 6 argument for j = 1, 2 or -2");
  special->add_option("j", special_j)->required()->check(CLI::IsMember({1, 2, -2}));

  std::string curve_id, height = "1000";
  unsigned point_workers = 1;
  auto* points = app.add_subcommand("curve-points", "rational points up to a height bound");
  points->add_option("id", curve_id, "curve id, e.g. C3.0 or cover:C3.1:d=-1")->required();
  points->add_option("--height", height);
  points->add_option("--workers", point_workers)->check(CLI::PositiveNumber);

  std::string loc_id, loc_p, loc_domain = "all";
  std::optional<unsigned> loc_precision;
  auto* loc = app.add_subcommand("locsolv", "p-adic solubility of a curve");
  loc->add_option("id", loc_id)->required();
  loc->add_option("p", loc_p)->required();
  loc->add_option("--precision", loc_precision, "disc refinement depth");
  loc->add_option("--domain", loc_domain, "all | units | outside (ord_p(X) <= 0)")
      ->check(CLI::IsMember({"all", "units", "outside"}));

  std::string cover_base;
  std::vector<std::string> cover_primes{"2", "3", "5", "7", "11", "13"};
  auto* covers = app.add_subcommand("covers", "partial two-descent on a catalogued curve");
  covers->add_option("id", cover_base)->required();
  covers->add_option("--primes", cover_primes);

  app.add_subcommand("list", "catalogued curve ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return write_report(run_all(run_flags.resolve()));
    if (e2e->parsed()) return write_report(end_to_end_search(e2e_flags.resolve()));
    if (app.got_subcommand("verify-identities")) return emit(verify_identities(), json);
    if (search->parsed()) {
      if (case_index == 4) return emit(eliminate_f4(true), json);
      return emit(solve_case(case_index, parse_int(case_bound, "bound"), SolveOptions{case_workers, true}),
                  json);
    }
    if (special->parsed()) {
      if (special_j == 1) return emit(case6_j1_argument(), json);
      if (special_j == 2) return emit(case6_j2_argument(), json);
      return emit(case6_jm2_argument(), json);
    }
    if (points->parsed()) {
      const CurveInventory inv = curve_inventory(curve_id, parse_int(height, "height"), point_workers);
      if (json) {
        std::cout << to_json(inv).dump() << "\n";
      } else {
        std::cout << catalogue_entry(curve_id).model.to_string() << "\n";
        for (const auto& p : inv.points) std::cout << "  " << p.to_string() << "\n";
        if (inv.expected)
          std::cout << (inv.consistent() ? "matches the published list\n" : "DIFFERS from the published list\n");
      }
      return inv.consistent() ? 0 : 1;
    }
    if (loc->parsed()) {
      const CatalogueEntry e = catalogue_entry(loc_id);
      const Int p = parse_int(loc_p, "p");
      const XDomain domain = loc_domain == "units"     ? XDomain::p_adic_units
                             : loc_domain == "outside" ? XDomain::outside_pZp
                                                       : XDomain::projective_line;
      const LocalVerdict v = locally_solvable(e.model, p, loc_precision, domain);
      if (json)
        std::cout << nlohmann::json{{"curve", loc_id}, {"p", p.get_str()}, {"domain", loc_domain},
                                    {"verdict", to_string(v)}}
                         .dump()
                  << "\n";
      else
        std::cout << e.model.to_string() << " over Q_" << p << " (" << loc_domain << "): " << to_string(v)
                  << "\n";
      return 0;
    }
    if (covers->parsed()) {
      std::vector<Int> primes;
      for (const auto& p : cover_primes) primes.push_back(parse_int(p, "prime"));
      return emit(covers_report(cover_base, primes), json);
    }
    if (app.got_subcommand("list")) {
      for (const auto& id : catalogue_ids())
        std::cout << id << "  " << catalogue_entry(id).model.to_string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
