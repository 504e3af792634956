#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deglab/props.hpp"

using namespace deglab;

namespace {

GenConfig small_cfg() {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.max_size = 9;
  cfg.max_degree = 2;
  cfg.count = 25;
  return cfg;
}

void run_clean(const std::string& name) {
  PropertyReport r = run_suite(name, small_cfg());
  INFO(format_report(r, true));
  CHECK(r.ok());
  CHECK(r.cases > 0);
}

}  // namespace

TEST_CASE("suite registry is complete") {
  CHECK(suite_names().size() == 19);
  CHECK_THROWS(run_suite("no-such-suite", small_cfg()));
}

TEST_CASE("corpus parses and is typable") {
  CHECK(builtin_corpus().size() >= 10);
  for (const CorpusEntry& e : builtin_corpus()) {
    INFO(e.name);
    CHECK(e.term != nullptr);
  }
}

TEST_CASE("roundtrip") { run_clean("roundtrip"); }
TEST_CASE("subject-reduction") { run_clean("subject-reduction"); }
TEST_CASE("weight-increase") { run_clean("weight-increase"); }
TEST_CASE("creation-bound") { run_clean("creation-bound"); }
TEST_CASE("normalization") { run_clean("normalization"); }
TEST_CASE("simp-develop-agree") { run_clean("simp-develop-agree"); }
TEST_CASE("simp-invariance") { run_clean("simp-invariance"); }
TEST_CASE("forget-commute") { run_clean("forget-commute"); }
TEST_CASE("reduce-forget") { run_clean("reduce-forget"); }
TEST_CASE("w-decrease") { run_clean("w-decrease"); }
TEST_CASE("t-decrease") { run_clean("t-decrease"); }
TEST_CASE("turing-strategy") { run_clean("turing-strategy"); }
TEST_CASE("turing-counterexample") { run_clean("turing-counterexample"); }
TEST_CASE("commutation") { run_clean("commutation"); }
TEST_CASE("lifting") { run_clean("lifting"); }
TEST_CASE("postponement") { run_clean("postponement"); }
TEST_CASE("measure-lemmas") { run_clean("measure-lemmas"); }
TEST_CASE("multiset-props") { run_clean("multiset-props"); }
TEST_CASE("generator") { run_clean("generator"); }

TEST_CASE("reports are deterministic in the seed") {
  PropertyReport a = run_suite("w-decrease", small_cfg());
  PropertyReport b = run_suite("w-decrease", small_cfg());
  CHECK(a.cases == b.cases);
  CHECK(a.failures.size() == b.failures.size());
}
