// Command-line front end: parse terms, reduce, simplify, measure, export
// reduction graphs, and run the property suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "deglab/error.hpp"
#include "deglab/graph.hpp"
#include "deglab/measure.hpp"
#include "deglab/parse.hpp"
#include "deglab/project.hpp"
#include "deglab/props.hpp"
#include "deglab/reduction.hpp"
#include "deglab/simplify.hpp"

using namespace deglab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long long env_budget(long long fallback) {
  const char* v = std::getenv("DEGREE_LAB_BUDGET");
  if (!v) return fallback;
  return std::atoll(v);
}

struct TermInput {
  std::string path = "-";
  std::string ctx;

  TermPtr load() const { return parse_term(read_input(path), parse_ctx(ctx)); }

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "term file, or - for stdin");
    cmd->add_option("--ctx", ctx, "types of free variables, e.g. \"y:0->0->0, f:0->0\"");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-calculus lab: wrapper-counting and nested-multiset termination measures"};
  app.require_subcommand(1);

  TermInput in;
  long long budget = env_budget(1000000);

  // check
  auto* check = app.add_subcommand("check", "typecheck a term and print its type");
  TermInput check_in;
  check_in.attach(check);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reduce to normal form");
  TermInput reduce_in;
  reduce_in.attach(reduce);
  std::string strategy = "lo";
  bool reduce_trace = false;
  reduce->add_option("--strategy", strategy, "lo (leftmost-outermost) or rhd (rightmost highest degree)")
      ->check(CLI::IsMember({"lo", "rhd"}));
  reduce->add_flag("--trace", reduce_trace, "print every step");

  // steps
  auto* steps = app.add_subcommand("steps", "list redexes with their degrees");
  TermInput steps_in;
  steps_in.attach(steps);
  int steps_degree = -1;
  steps->add_option("--degree", steps_degree, "only redexes of this degree");

  // simp
  auto* simp = app.add_subcommand("simp", "simplification at one degree");
  TermInput simp_in;
  simp_in.attach(simp);
  int simp_degree = 1;
  bool simp_trace = false;
  simp->add_option("--degree", simp_degree, "degree to contract")->required();
  simp->add_flag("--trace", simp_trace, "print the witnessing reduction");

  // simpfull
  auto* sf = app.add_subcommand("simpfull", "full simplification (the normal form)");
  TermInput sf_in;
  sf_in.attach(sf);
  bool sf_trace = false;
  sf->add_flag("--trace", sf_trace, "print the witnessing reduction");

  // w-measure
  auto* wm = app.add_subcommand("w-measure", "wrapper count of the full simplification");
  TermInput wm_in;
  wm_in.attach(wm);

  // t-measure
  auto* tm = app.add_subcommand("t-measure", "nested multiset measure");
  TermInput tm_in;
  tm_in.attach(tm);
  bool tm_json = false;
  int tm_maxdeg = 4;
  tm->add_flag("--json", tm_json, "machine-readable output");
  tm->add_option("--max-degree", tm_maxdeg, "refuse terms above this degree");

  // graph
  auto* graph = app.add_subcommand("graph", "export the reduction graph");
  TermInput graph_in;
  graph_in.attach(graph);
  int graph_degree = -1;
  bool graph_dot = false, graph_json = false;
  graph->add_option("--degree", graph_degree, "restrict to steps of this degree");
  graph->add_flag("--dot", graph_dot, "DOT output (default)");
  graph->add_flag("--json", graph_json, "JSON output");

  // verify-decrease
  auto* vd = app.add_subcommand("verify-decrease",
                                "check that every beta step from the input decreases the measure");
  TermInput vd_in;
  vd_in.attach(vd);
  std::string vd_measure = "w";
  vd->add_option("--measure", vd_measure, "w or t")->check(CLI::IsMember({"w", "t"}));

  // props
  auto* props = app.add_subcommand("props", "run property suites");
  std::string suite;
  uint64_t seed = 1;
  int count = 100, max_size = 10, max_degree = 2;
  bool verbose = false;
  props->add_option("--suite", suite, "one suite (default: all)");
  props->add_option("--seed", seed, "generator seed");
  props->add_option("--count", count, "generated terms per suite");
  props->add_option("--max-size", max_size, "size bound for generated terms");
  props->add_option("--max-degree", max_degree, "degree bound for generated terms");
  props->add_flag("--verbose", verbose, "list failures in full");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      TermPtr t = check_in.load();
      std::cout << print_type(type_of(t)) << "\n";
      return kExitOk;
    }
    if (*reduce) {
      TermPtr t = reduce_in.load();
      type_of(t);
      long long fuel = budget;
      TermPtr cur = t;
      for (;;) {
        std::vector<Step> rs = enumerate_redexes(cur);
        if (rs.empty()) break;
        if (--fuel < 0) fail(Errc::BudgetExceeded, "reduction exceeded the step budget");
        Step chosen = rs.front();
        if (strategy == "rhd") {
          int top = 0;
          for (const Step& s : rs) top = std::max(top, s.degree);
          for (size_t i = rs.size(); i-- > 0;)
            if (rs[i].degree == top) {
              chosen = rs[i];
              break;
            }
        }
        if (reduce_trace)
          std::cout << print_term(cur) << "\n  ->" << chosen.degree << " at " << chosen.pos.str()
                    << "\n";
        cur = apply_step(chosen);
      }
      std::cout << print_term(cur) << "\n";
      return kExitOk;
    }
    if (*steps) {
      TermPtr t = steps_in.load();
      std::vector<Step> rs = steps_degree >= 0 ? enumerate_steps_of_degree(t, steps_degree)
                                               : enumerate_redexes(t);
      for (const Step& s : rs) std::cout << s.pos.str() << "  degree " << s.degree << "\n";
      std::cerr << rs.size() << " redex(es)\n";
      return kExitOk;
    }
    if (*simp) {
      TermPtr t = simp_in.load();
      if (simp_trace) {
        ReductionSeq wit = simp_d_witness(t, simp_degree);
        TermPtr cur = t;
        for (const Step& s : wit.steps()) {
          std::cout << print_term(cur) << "\n  ->" << s.degree << " at " << s.pos.str() << "\n";
          cur = apply_step(s);
        }
      }
      std::cout << print_term(simp_d(t, simp_degree)) << "\n";
      return kExitOk;
    }
    if (*sf) {
      TermPtr t = sf_in.load();
      if (sf_trace) {
        ReductionSeq wit = simpfull_witness(t);
        TermPtr cur = t;
        for (const Step& s : wit.steps()) {
          std::cout << print_term(cur) << "\n  ->" << s.degree << " at " << s.pos.str() << "\n";
          cur = apply_step(s);
        }
      }
      std::cout << print_term(simpfull(t)) << "\n";
      return kExitOk;
    }
    if (*wm) {
      std::cout << w_measure(wm_in.load()) << "\n";
      return kExitOk;
    }
    if (*tm) {
      MeasureBudget mb;
      mb.max_degree = tm_maxdeg;
      mb.max_sequences = budget;
      MeasureEngine engine(mb);
      AValue v = engine.t_measure(tm_in.load());
      std::cout << (tm_json ? measure_to_json(v) : pretty(v)) << "\n";
      return kExitOk;
    }
    if (*graph) {
      TermPtr t = graph_in.load();
      std::optional<int> deg;
      if (graph_degree >= 0) deg = graph_degree;
      ReductionGraph g = reduction_graph(t, deg, budget);
      std::cout << (graph_json && !graph_dot ? graph_to_json(g) : graph_to_dot(g));
      return kExitOk;
    }
    if (*vd) {
      TermPtr t = vd_in.load();
      MeasureEngine engine(MeasureBudget{4, budget, 200000});
      bool all_ok = true;
      for (const Step& beta : enumerate_beta_redexes(t)) {
        TermPtr n = apply_step(beta);
        bool ok;
        std::string detail;
        if (vd_measure == "w") {
          long long a = w_measure(t), b = w_measure(n);
          ok = a > b;
          detail = std::to_string(a) + " > " + std::to_string(b);
        } else {
          PartialOrdering cmp = compare(engine.t_measure(t), engine.t_measure(n));
          ok = cmp == PartialOrdering::Greater;
          detail = to_string(cmp);
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok   " : "FAIL ") << beta.pos.str() << "  " << detail << "\n";
      }
      return all_ok ? kExitOk : kExitPropertyFailure;
    }
    if (*props) {
      GenConfig cfg{seed, max_size, max_degree, count};
      MeasureBudget mb{4, budget, 200000};
      std::vector<PropertyReport> reports;
      if (suite.empty()) {
        reports = run_all_suites(cfg, mb);
      } else {
        reports.push_back(run_suite(suite, cfg, mb));
      }
      bool all_ok = true;
      for (const PropertyReport& r : reports) {
        std::cout << format_report(r, verbose) << "\n";
        all_ok = all_ok && r.ok();
      }
      return all_ok ? kExitOk : kExitPropertyFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::BudgetExceeded ? kExitBudget : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
