// Command-line front end: analyze, sweep, chart, verify-paper.
#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "pretzel/classify.hpp"
#include "pretzel/error.hpp"
#include "pretzel/fixtures.hpp"
#include "pretzel/report_json.hpp"

using namespace pretzel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitMismatch = 3;

struct CommonOptions {
  unsigned radius = 3;
  int subst_max = 2;
  std::size_t candidate_cap = 1'000'000;
  std::size_t support_cap = Budget{}.support_cap;
  int jobs = 0;
  bool no_timing = false;

  void attach(CLI::App* app) {
    app->add_option("--nielsen-radius", radius, "Nielsen ball radius for obstructions")
        ->check(CLI::Range(0u, 6u));
    app->add_option("--subst-max", subst_max, "largest exponent in ambient substitutions")->check(CLI::Range(0, 6));
    app->add_option("--candidate-cap", candidate_cap, "drop-set candidates tried per search")
        ->check(CLI::PositiveNumber);
    app->add_option("--support-cap", support_cap, "largest support handed to the primitivity test")
        ->check(CLI::Range(std::size_t{1}, kMaxWhiteheadRank));
    app->add_option("--jobs", jobs, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    app->add_flag("--no-timing", no_timing, "omit timing from JSON output");
  }

  AnalysisOptions analysis() const {
    if (jobs > 0) omp_set_num_threads(jobs);
    AnalysisOptions o;
    o.budget.nielsen_radius = radius;
    o.budget.substitution_max = subst_max;
    o.budget.candidate_cap = candidate_cap;
    o.budget.support_cap = support_cap;
    o.budget.execution = jobs == 1 ? Execution::Serial : Execution::Parallel;
    return o;
  }
};

void print_text(const KnotReport& r) {
  std::cout << r.knot.name() << '\n';
  if (!r.analyzed) {
    std::cout << "  not analyzed: " << r.note << '\n';
    return;
  }
  std::cout << "  N = " << r.n.get_str() << ", Alexander polynomial " << to_string(r.alexander) << '\n';
  if (r.index) std::cout << "  index " << *r.index << '\n';
  for (const auto* side : {&r.h, &r.k}) {
    if (!*side) continue;
    const SideReport& s = **side;
    std::cout << "  " << s.side << ": " << to_string(s.verdict.outcome);
    if (!s.removed.empty()) {
      std::cout << ", drop";
      for (const auto& name : s.removed) std::cout << ' ' << name;
    }
    if (s.verdict.negative) std::cout << ", " << to_string(s.verdict.negative->kind);
    if (s.obstruction) std::cout << ' ' << *s.obstruction;
    if (s.substitution) std::cout << " (after " << *s.substitution << ')';
    std::cout << '\n';
    for (std::size_t i = 0; i < s.rewritten.size(); ++i)
      std::cout << "    " << s.ambient_words[i] << " = " << s.rewritten[i] << '\n';
  }
  std::cout << "  ffp " << to_string(r.ffp) << " (" << r.ffp_reason << ")\n"
            << "  rtfn " << to_string(r.rtfn) << " (" << r.rtfn_reason << ")\n"
            << "  biorder " << to_string(r.biorder) << " (" << r.biorder_reason << ")\n"
            << "  sigma2_lo " << to_string(r.sigma2_lo) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free factor property and orderability verdicts for pretzel knots"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one knot");
  std::string spec;
  std::vector<long> family;
  std::string analyze_format = "json";
  analyze_cmd->add_option("knot", spec, "P(a,b,c) or P(3,-3,...,2r+1)");
  analyze_cmd->add_option("--family", family, "k r for P(3,-3,...,3,-3,2r+1)")->expected(2);
  analyze_cmd->add_option("--format", analyze_format)->check(CLI::IsMember({"json", "text"}));
  common.attach(analyze_cmd);

  long sweep_p = -2, qmax = 5, rmax = 10;
  std::string sweep_format = "csv";
  auto add_ranges = [&](CLI::App* cmd) {
    cmd->add_option("--p", sweep_p, "half-parameter p (first strand 2p+1)")->required();
    cmd->add_option("--qmax", qmax)->required()->check(CLI::Range(1L, 200L));
    cmd->add_option("--rmax", rmax)->required()->check(CLI::Range(1L, 200L));
  };
  auto* sweep_cmd = app.add_subcommand("sweep", "one row per (q, r) cell");
  add_ranges(sweep_cmd);
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json", "text"}));
  common.attach(sweep_cmd);

  std::string chart_format = "markdown";
  auto* chart_cmd = app.add_subcommand("chart", "grid of N and free factor class");
  add_ranges(chart_cmd);
  chart_cmd->add_option("--format", chart_format)->check(CLI::IsMember({"csv", "markdown"}));
  common.attach(chart_cmd);

  std::string fixtures_path = PRETZEL_DEFAULT_FIXTURES;
  std::vector<std::string> only;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify-paper", "check bundled expected verdicts");
  verify_cmd->add_option("--fixtures", fixtures_path, "fixture JSON file");
  verify_cmd->add_option("--only", only, "restrict to these sources")->delimiter(',');
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  common.attach(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const AnalysisOptions options = common.analysis();
    if (*analyze_cmd) {
      PretzelKnot knot;
      if (!family.empty()) {
        if (!spec.empty()) throw DomainError("give either a knot or --family, not both");
        knot = alternating_family(static_cast<int>(family[0]), family[1]);
      } else if (spec.empty()) {
        throw DomainError("analyze needs a knot or --family k r");
      } else {
        knot = parse_knot(spec);
      }
      const KnotReport r = analyze(knot, options);
      if (analyze_format == "json")
        std::cout << to_json(r, !common.no_timing).dump(2) << '\n';
      else
        print_text(r);
      return kExitOk;
    }
    if (*sweep_cmd || *chart_cmd) {
      const auto reports = analyze_all(sweep_knots(sweep_p, qmax, rmax), options);
      if (*chart_cmd) {
        std::cout << (chart_format == "csv" ? chart_csv(reports) : chart_markdown(reports));
      } else if (sweep_format == "json") {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const auto& r : reports) all.push_back(to_json(r, !common.no_timing));
        std::cout << all.dump(2) << '\n';
      } else if (sweep_format == "text") {
        for (const auto& r : reports) print_text(r);
      } else {
        std::cout << sweep_csv(reports);
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      const auto cases = load_fixtures(fixtures_path);
      const auto results = run_fixtures(cases, options, only);
      std::size_t failed = 0;
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& r : results) {
        if (!r.passed()) ++failed;
        if (verify_format == "json") {
          all.push_back({{"knot", r.fixture->label},
                         {"source", r.fixture->source},
                         {"passed", r.passed()},
                         {"mismatches", r.mismatches}});
          continue;
        }
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.fixture->label << " [" << r.fixture->source << "]\n";
        for (const auto& m : r.mismatches) std::cout << "    " << m << '\n';
      }
      if (verify_format == "json")
        std::cout << all.dump(2) << '\n';
      else
        std::cout << results.size() - failed << '/' << results.size() << " fixtures match\n";
      if (results.empty()) {
        std::cerr << "no fixtures selected\n";
        return kExitUsage;
      }
      return failed == 0 ? kExitOk : kExitMismatch;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
