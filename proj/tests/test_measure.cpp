#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deglab/error.hpp"
#include "deglab/measure.hpp"
#include "deglab/parse.hpp"
#include "deglab/reduction.hpp"

using namespace deglab;

namespace {

TermPtr P(const std::string& s, const std::string& ctx = "") {
  return parse_term(s, parse_ctx(ctx));
}

// the diamond: t0 -> t1 -> {t2, t3} -> t4
const char* kT0 = "(\\x:0->0. x (x z)) (\\y:0. w)";
const char* kT1 = "((\\y:0. w) ((\\y:0. w) z))[\\y:0. w]";
const char* kT2 = "w[(\\y:0. w) z][\\y:0. w]";
const char* kT3 = "((\\y:0. w) (w[z]))[\\y:0. w]";
const char* kT4 = "w[w[z]][\\y:0. w]";

AValue pair_of(int d, const BValue& b) {
  AValue out;
  out.items.add(AItem{d, b});
  return out;
}

}  // namespace

TEST_CASE("measure values of the diamond") {
  MeasureEngine eng;
  TermPtr t0 = P(kT0), t1 = P(kT1), t2 = P(kT2), t3 = P(kT3), t4 = P(kT4);

  // everything of degree zero is empty, and t4 is measure-free
  CHECK(eng.ame(0, t0).items.empty());
  for (const TermPtr& t : {t1, t2, t3, t4}) CHECK(eng.ame(0, t).items.empty());
  CHECK(eng.ame(1, t4).items.empty());
  CHECK(eng.ame(2, t4).items.empty());

  // ame(2, t0) = [(2, bme(2, t0))], bme(2, t0) = [ame(1,t0), ame(1,t1)]
  BValue b2t0 = eng.bme(2, t0);
  CHECK(eng.ame(2, t0) == pair_of(2, b2t0));
  {
    BValue expect;
    expect.items.add(eng.ame(1, t0));
    expect.items.add(eng.ame(1, t1));
    CHECK(b2t0 == expect);
  }
  CHECK(eng.ame(1, t0).items.empty());  // only a degree-2 redex in t0

  // ame(2,t1) = ame(1,t1) = [(1, bme(1,t1)), (1, bme(1,t1))]
  BValue b1t1 = eng.bme(1, t1);
  {
    AValue expect;
    expect.items.add(AItem{1, b1t1});
    expect.items.add(AItem{1, b1t1});
    CHECK(eng.ame(2, t1) == expect);
    CHECK(eng.ame(1, t1) == expect);
  }
  // five degree-1 sequences from t1: empty, two one-step, two two-step
  // (each element is an empty A-value)
  CHECK(b1t1.items.size() == 5);
  for (const AValue& a : b1t1.items.elems()) CHECK(a.items.empty());

  // bme(1, t2) = [ame(0,t2), ame(0,t4)]: two sequences
  CHECK(eng.bme(1, t2).items.size() == 2);
  CHECK(eng.bme(1, t3).items.size() == 2);
  CHECK(eng.ame(2, t2) == pair_of(1, eng.bme(1, t2)));
  CHECK(eng.ame(2, t3) == pair_of(1, eng.bme(1, t3)));

  // bme at a normal term has only the empty sequence
  {
    BValue expect;
    expect.items.add(eng.ame(0, t4));
    CHECK(eng.bme(1, t4) == expect);
  }

  // the comparison chains
  auto G = PartialOrdering::Greater;
  CHECK(compare(eng.ame(2, t0), eng.ame(2, t1)) == G);
  CHECK(compare(eng.ame(2, t1), eng.ame(2, t2)) == G);
  CHECK(compare(eng.ame(2, t2), eng.ame(2, t4)) == G);
  CHECK(compare(eng.ame(2, t1), eng.ame(2, t3)) == G);
  CHECK(compare(eng.ame(2, t3), eng.ame(2, t4)) == G);
}

TEST_CASE("eme structural clauses") {
  MeasureEngine eng;
  TermPtr t1 = P(kT1);

  CHECK(eng.eme(0, t1, t1).items.empty());

  // two degree-1 redexes, both contributing the same pair
  AValue e1 = eng.eme(1, t1, t1);
  REQUIRE(e1.items.size() == 2);
  BValue b = eng.bme(1, t1);
  for (const AItem& it : e1.items.elems()) {
    CHECK(it.degree == 1);
    CHECK(it.b == b);
  }

  // wrapper clause: measure of a wrap is the sum of body and memory
  TermPtr wrapped = Term::wrap(P("(\\y:0. w) z"), P("(\\y:0. w) z"));
  AValue sum;
  sum.items = eng.eme(1, t1, P("(\\y:0. w) z")).items + eng.eme(1, t1, P("(\\y:0. w) z")).items;
  CHECK(eng.eme(1, t1, wrapped) == sum);
}

TEST_CASE("t-measure") {
  MeasureEngine eng;
  CHECK(eng.t_measure(P("\\x:0. x")).items.empty());
  CHECK(eng.t_measure(P("y")).items.empty());

  // shape for the diamond root: [(2, [ [], ame(1,t1) ])]
  AValue tm = eng.t_measure(P(kT0));
  REQUIRE(tm.items.size() == 1);
  CHECK(tm.items.elems()[0].degree == 2);
  const BValue& b = tm.items.elems()[0].b;
  REQUIRE(b.items.size() == 2);
  CHECK(b.items.elems()[0].items.empty());           // ame(1, t0)
  CHECK(b.items.elems()[1] == eng.ame(1, P(kT1)));   // ame(1, t1)

  CHECK_THROWS_AS(eng.t_measure(P("x[y]")), Error);

  // JSON and pretty renderings exist and stay canonical
  CHECK(measure_to_json(tm).front() == '[');
  CHECK(pretty(tm).substr(0, 3) == "[(2");
}

TEST_CASE("budget refusals name the problem") {
  MeasureBudget tiny;
  tiny.max_sequences = 2;
  MeasureEngine eng(tiny);
  try {
    eng.t_measure(P(kT0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
    CHECK(std::string(e.what()).find("bme(") != std::string::npos);
  }

  MeasureBudget shallow;
  shallow.max_degree = 1;
  MeasureEngine eng2(shallow);
  CHECK_THROWS_AS(eng2.t_measure(P(kT0)), Error);
}

TEST_CASE("turing measures") {
  TypeEnv ctx = parse_ctx("y:0->0->0");
  TermPtr m = P("(\\x:0. y x x) ((\\z:0. z) w)", "y:0->0->0");
  TermPtr n = P("y ((\\z:0. z) w) ((\\z:0. z) w)", "y:0->0->0");

  CHECK(turing_measure(m) == Multiset<int>(std::vector<int>{1, 1}));
  CHECK(turing_measure(m) == turing_measure(n));
  CHECK(turing_measure_stratified(1, m) == turing_measure_stratified(1, n));
  CHECK(pretty(turing_measure_stratified(1, m)) == "[(1, []), (1, [])]");

  CHECK(turing_measure(P("\\x:0. x")).empty());
  CHECK(turing_measure(P("(\\x:0->0. x (x y)) (\\z:0. w)")) ==
        Multiset<int>(std::vector<int>{2}));

  CHECK(turing_measure_prime(m) == std::pair<int, int>{1, 2});
  CHECK(turing_measure_prime(P("(\\x:0->0. x (x y)) (\\z:0. w)")) == std::pair<int, int>{2, 1});
  CHECK(turing_measure_prime(P("x")) == std::pair<int, int>{0, 0});

  CHECK_THROWS_AS(turing_measure(P("x[y]")), Error);
}

TEST_CASE("rightmost-highest strategy") {
  // two degree-1 redexes; the inner one is textually to the right
  TermPtr n = P("(\\z:0. w) ((\\z:0. w) y)");
  Step s = rightmost_highest_strategy(n);
  CHECK(s.pos == Position::parse("app.arg"));

  // a single redex is simply chosen
  TermPtr single = P("(\\x:0. x) a");
  CHECK(rightmost_highest_strategy(single).pos == Position{});

  // the highest degree wins over rightmost-ness
  TermPtr mixed = P("(\\x:0->0. x (x z)) (\\y:0. (\\u:0. u) y)");
  CHECK(rightmost_highest_strategy(mixed).degree == 2);

  CHECK_THROWS_AS(rightmost_highest_strategy(P("x")), Error);
}
