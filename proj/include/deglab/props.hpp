#pragma once

#include <string>
#include <vector>

#include "deglab/generate.hpp"
#include "deglab/measure.hpp"
#include "deglab/term.hpp"

namespace deglab {

struct PropFailure {
  int case_index = 0;
  std::string what;
};

struct PropertyReport {
  std::string suite;
  int cases = 0;
  std::vector<PropFailure> failures;
  int budget_skips = 0;

  bool ok() const { return failures.empty(); }
};

struct CorpusEntry {
  std::string name;
  std::string text;
  std::string ctx;
  TermPtr term;
};

// The fixed example corpus; also shipped as data/corpus.json.
const std::vector<CorpusEntry>& builtin_corpus();

std::vector<std::string> suite_names();

// Runs one suite over the fixed corpus plus generated terms. Deterministic
// given (cfg, budget). Unknown names are an error.
PropertyReport run_suite(const std::string& name, const GenConfig& cfg,
                         const MeasureBudget& budget = {});

std::vector<PropertyReport> run_all_suites(const GenConfig& cfg, const MeasureBudget& budget = {});

std::string format_report(const PropertyReport& r, bool verbose = false);

}  // namespace deglab
