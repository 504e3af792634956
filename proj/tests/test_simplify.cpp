#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deglab/error.hpp"
#include "deglab/graph.hpp"
#include "deglab/parse.hpp"
#include "deglab/simplify.hpp"

using namespace deglab;

namespace {
TermPtr P(const std::string& s, const std::string& ctx = "") {
  return parse_term(s, parse_ctx(ctx));
}
}  // namespace

TEST_CASE("simplification of the duplication example") {
  TermPtr m = P("(\\x:0->0. x (x y)) (\\z:0. w)");
  CHECK(alpha_equal(simp_d(m, 2), P("((\\z:0. w) ((\\z:0. w) y))[\\z:0. w]")));
  CHECK(alpha_equal(simpfull(m), P("w[w[y]][\\z:0. w]")));
  CHECK(simpfull(m)->weight() == 3);

  TermPtr n = P("(\\z:0. w) ((\\z:0. w) y)");
  CHECK(alpha_equal(simpfull(n), simp_d(n, 1)));
  CHECK(alpha_equal(simpfull(n), P("w[w[y]]")));
  CHECK(simpfull(n)->weight() == 2);

  CHECK(alpha_equal(simp_d(P("x"), 3), P("x")));
  CHECK_THROWS_AS(simp_d(m, 0), Error);
}

TEST_CASE("simpfull fixes normal forms and is g-normal") {
  for (const char* text : {"x", "\\x:0. x", "y[y]", "w[w[y]][\\z:0. w]"}) {
    TermPtr t = P(text);
    CHECK(alpha_equal(simpfull(t), t));
  }
  TermPtr t = P("(\\x:0->0. \\y:0. y[x (x z)]) (\\x:0. x) w");
  TermPtr nf = simpfull(t);
  CHECK(is_g_normal(nf));
  // confluence pins the normal form: exhaustive search must agree
  ReductionGraph g = reduction_graph(t);
  std::vector<int> sinks = sink_vertices(g);
  REQUIRE(sinks.size() == 1);
  CHECK(alpha_equal(g.vertices()[sinks[0]], nf));
}

TEST_CASE("witness sequences reach the simplification") {
  TermPtr t = P("(\\x:0->0. x (x z)) (\\y:0. w)");
  ReductionSeq w2 = simp_d_witness(t, 2);
  CHECK(alpha_equal(w2.source(), t));
  CHECK(alpha_equal(w2.target(), simp_d(t, 2)));
  auto d = w2.uniform_degree();
  CHECK((d && *d == 2));

  ReductionSeq wf = simpfull_witness(t);
  CHECK(alpha_equal(wf.source(), t));
  CHECK(alpha_equal(wf.target(), simpfull(t)));
}

TEST_CASE("w-measure golden values") {
  TermPtr m = P("(\\x:0->0. x (x y)) (\\z:0. w)");
  TermPtr n = P("(\\z:0. w) ((\\z:0. w) y)");
  CHECK(w_measure(m) == 3);
  CHECK(w_measure(n) == 2);

  std::string ctx = "y:0->0->0, f:0->0";
  TermPtr m2 = P("(\\x:0. y x x) ((\\x:0->0. x z) f)", ctx);
  TermPtr n2 = P("(\\x:0. y x x) (f z)", ctx);
  CHECK(w_measure(m2) == 4);
  CHECK(w_measure(n2) == 1);
  CHECK(alpha_equal(simpfull(m2), P("(y ((f z)[f]) ((f z)[f]))[(f z)[f]]", ctx)));
  CHECK(alpha_equal(simpfull(n2), P("(y (f z) (f z))[f z]", ctx)));

  CHECK(w_measure(P("\\x:0. x")) == 0);
  CHECK(w_measure(P("y")) == 0);

  CHECK_THROWS_AS(w_measure(P("x[y]")), Error);
}

TEST_CASE("degree collapse") {
  TermPtr t = P("(\\x:0->0. \\y:0. y[x (x z)]) (\\x:0. x) w");
  int d = maxdeg(t);
  REQUIRE(d == 2);
  CHECK(maxdeg(simp_d(t, 2)) < 2);
  CHECK(maxdeg(simpfull(t)) == 0);
}
