#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deglab/error.hpp"
#include "deglab/graph.hpp"
#include "deglab/parse.hpp"
#include "deglab/reduction.hpp"

using namespace deglab;

namespace {

TermPtr P(const std::string& s, const std::string& ctx = "") {
  return parse_term(s, parse_ctx(ctx));
}

// The unique step from cur whose target is alpha-equal to next.
Step step_to(const TermPtr& cur, const TermPtr& next) {
  for (const Step& s : enumerate_redexes(cur))
    if (alpha_equal(apply_step(s), next)) return s;
  FAIL("no connecting step");
  return Step{};
}

}  // namespace

TEST_CASE("the four-step reduction of the memory example") {
  TermPtr t = P("(\\x:0->0. \\y:0. y[x (x z)]) (\\x:0. x) w");
  CHECK(maxdeg(t) == 2);

  const char* stages[] = {
      "(\\y:0. y[(\\x:0. x) ((\\x:0. x) z)])[\\x:0. x] w",
      "w[(\\x:0. x) ((\\x:0. x) z)][w][\\x:0. x]",
      "w[(\\x:0. x) (z[z])][w][\\x:0. x]",
      "w[z[z][z[z]]][w][\\x:0. x]",
  };
  int expected_degrees[] = {2, 1, 1, 1};

  TermPtr cur = t;
  for (int i = 0; i < 4; i++) {
    Step s = step_to(cur, P(stages[i]));
    CHECK(s.degree == expected_degrees[i]);
    cur = apply_step(s);
  }
  CHECK(cur->weight() == 6);
  CHECK(is_g_normal(cur));
}

TEST_CASE("single steps") {
  // duplication keeps a memory copy
  TermPtr t = P("(\\x:0->0. x (x y)) (\\x:0. x)");
  Step s = make_step(t, Position{}, StepKind::G);
  CHECK(alpha_equal(apply_step(s), P("((\\x:0. x) ((\\x:0. x) y))[\\x:0. x]")));

  // erasing beta step on a pure term
  TermPtr e = P("(\\x:0. y) z");
  CHECK(alpha_equal(apply_step(make_step(e, Position{}, StepKind::Beta)), P("y")));

  // the memory stays outside the fresh wrapper
  TermPtr m = P("(\\x:0. y)[u] z");
  CHECK(alpha_equal(apply_step(make_step(m, Position{}, StepKind::G)), P("y[z][u]")));

  CHECK_THROWS_AS(make_step(P("x y", "x:0->0"), Position{}, StepKind::G), Error);
}

TEST_CASE("redex enumeration") {
  TermPtr t = P("(\\x:0->0. \\y:0. y[x (x z)]) (\\x:0. x) w");
  std::vector<Step> rs = enumerate_redexes(t);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].degree == 2);

  CHECK(enumerate_redexes(P("y[y]")).empty());

  TermPtr t1 = P("((\\y:0. w) ((\\y:0. w) z))[\\y:0. w]");
  std::vector<Step> rs1 = enumerate_redexes(t1);
  REQUIRE(rs1.size() == 2);
  CHECK(rs1[0].degree == 1);
  CHECK(rs1[1].degree == 1);
  CHECK(rs1[0].pos < rs1[1].pos);  // leftmost-outermost order
}

TEST_CASE("degree-filtered steps") {
  TermPtr t0 = P("(\\x:0->0. x (x z)) (\\y:0. w)");
  CHECK(enumerate_steps_of_degree(t0, 2).size() == 1);
  CHECK(enumerate_steps_of_degree(t0, 1).empty());
  CHECK(alpha_equal(apply_step(enumerate_steps_of_degree(t0, 2)[0]),
                    P("((\\y:0. w) ((\\y:0. w) z))[\\y:0. w]")));
  CHECK(enumerate_steps_of_degree(P("y[y]"), 1).empty());
}

TEST_CASE("forgetful steps") {
  TermPtr t = P("x[x[y]][y[z]]");
  std::vector<ForgetStep> fs = enumerate_forget_steps(t);
  REQUIRE(fs.size() == 4);
  bool found = false;
  for (const ForgetStep& f : fs)
    if (alpha_equal(apply_forget(f), P("x[y[z]]"))) found = true;
  CHECK(found);

  CHECK(enumerate_forget_steps(P("\\x:0. x y z")).empty());

  // a three-step chain down to the identity
  TermPtr u = P("(\\x:0. x[y[y]])[z[z]]");
  REQUIRE(enumerate_forget_steps(u).size() == 4);
  TermPtr a = apply_forget(make_forget(u, Position::parse("wrap.mem")));  // z[z] -> z
  CHECK(alpha_equal(a, P("(\\x:0. x[y[y]])[z]")));
  TermPtr b = apply_forget(make_forget(a, Position::parse("wrap.body/abs.body")));
  CHECK(alpha_equal(b, P("(\\x:0. x)[z]")));
  TermPtr c = apply_forget(make_forget(b, Position{}));
  CHECK(alpha_equal(c, P("\\x:0. x")));
}

TEST_CASE("corresponding steps forget to the beta target") {
  struct Case {
    const char* term;
    const char* beta_target;
  } cases[] = {
      {"(\\x:0->0. x y) (\\q:0. q)", "(\\q:0. q) y"},
      {"(\\x:0. x) z", "z"},
      {"(\\x:0. y) z", "y"},
  };
  for (const Case& c : cases) {
    TermPtr t = P(c.term);
    Step beta = enumerate_beta_redexes(t).at(0);
    Step g = corresponding_step(beta);
    TermPtr tg = apply_step(g);
    CHECK(alpha_equal(apply_step(beta), P(c.beta_target)));
    CHECK(alpha_equal(apply_forget(make_forget(tg, beta.pos)), P(c.beta_target)));
  }
  CHECK(alpha_equal(apply_step(corresponding_step(
                        enumerate_beta_redexes(P("(\\x:0->0. x (x y)) (\\q:0. q)")).at(0))),
                    P("((\\q:0. q) ((\\q:0. q) y))[\\q:0. q]")));

  CHECK_THROWS_AS(enumerate_beta_redexes(P("x[y]")), Error);
}

TEST_CASE("sequences compose and validate") {
  TermPtr t = P("(\\x:0. x) ((\\x:0. x) a)");
  ReductionSeq seq(t);
  std::vector<Step> rs = enumerate_redexes(t);
  REQUIRE(rs.size() == 2);
  seq.push(rs[1]);                          // inner first
  CHECK_THROWS_AS(seq.push(rs[0]), Error);  // stale source
  seq.push(enumerate_redexes(seq.target())[0]);
  CHECK(seq.size() == 2);
  CHECK(seq.uniform_degree().has_value());
}

TEST_CASE("reduction graph of the diamond example") {
  TermPtr t0 = P("(\\x:0->0. x (x z)) (\\y:0. w)");
  ReductionGraph g = reduction_graph(t0);
  CHECK(g.vertices().size() == 5);
  CHECK(g.edges().size() == 5);
  CHECK(graph_is_acyclic(g));

  int v0 = g.find(t0);
  int v1 = g.find(P("((\\y:0. w) ((\\y:0. w) z))[\\y:0. w]"));
  int v2 = g.find(P("w[(\\y:0. w) z][\\y:0. w]"));
  int v3 = g.find(P("((\\y:0. w) (w[z]))[\\y:0. w]"));
  int v4 = g.find(P("w[w[z]][\\y:0. w]"));
  CHECK(v0 == 0);
  CHECK(v1 >= 0);
  CHECK(v2 >= 0);
  CHECK(v3 >= 0);
  CHECK(v4 >= 0);

  // two degree-1 paths from t1 to t4
  ReductionGraph g1 = reduction_graph(P("((\\y:0. w) ((\\y:0. w) z))[\\y:0. w]"), 1);
  CHECK(count_paths(g1, 0, g1.find(P("w[w[z]][\\y:0. w]"))) == 2);

  // degree filter: only the outer degree-2 step leaves t0
  ReductionGraph g2 = reduction_graph(t0, 2);
  CHECK(g2.vertices().size() == 2);
  CHECK(g2.edges().size() == 1);

  ReductionGraph gn = reduction_graph(P("w[w[z]][\\y:0. w]"));
  CHECK(gn.vertices().size() == 1);
  CHECK(gn.edges().empty());

  CHECK(graph_to_dot(g).find("digraph") == 0);
  CHECK(graph_to_json(g).find("\"vertices\"") != std::string::npos);

  CHECK_THROWS_AS(reduction_graph(t0, std::nullopt, 2), Error);
}

TEST_CASE("step identity") {
  TermPtr t = P("(\\x:0. x) ((\\x:0. x) a)");
  std::vector<Step> rs = enumerate_redexes(t);
  CHECK(step_equal(rs[0], rs[0]));
  CHECK(!step_equal(rs[0], rs[1]));
  // alpha-variant sources give equal steps
  TermPtr t2 = P("(\\u:0. u) ((\\v:0. v) a)");
  CHECK(step_equal(rs[0], enumerate_redexes(t2)[0]));
}
