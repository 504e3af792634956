#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deglab/error.hpp"
#include "deglab/graph.hpp"
#include "deglab/parse.hpp"
#include "deglab/project.hpp"
#include "deglab/residual.hpp"

using namespace deglab;

namespace {
TermPtr P(const std::string& s, const std::string& ctx = "") {
  return parse_term(s, parse_ctx(ctx));
}
}  // namespace

TEST_CASE("develop contracts exactly the marked redexes") {
  // no marks: the empty development
  TermPtr plain = P("(\\x:0. x) a");
  CHECK(develop(plain).empty());

  // both degree-1 redexes of the diamond's middle term
  TermPtr t1 = P("((\\y:0. w) ((\\y:0. w) z))[\\y:0. w]");
  TermPtr labeled = t1;
  for (const Step& s : enumerate_steps_of_degree(t1, 1))
    labeled = mark_redex_abs(labeled, s.pos, 1);
  ReductionSeq dev = develop(labeled);
  CHECK(dev.size() == 2);
  CHECK(alpha_equal(dev.target(), P("w[w[z]][\\y:0. w]")));

  // the single outer redex
  TermPtr t0 = P("(\\x:0->0. x (x z)) (\\y:0. w)");
  ReductionSeq one = develop(mark_redex_abs(t0, Position{}, 1));
  CHECK(one.size() == 1);
  CHECK(alpha_equal(one.target(), t1));
}

TEST_CASE("marks must head redexes") {
  // (\q:0. q) is an argument, not an applied abstraction
  TermPtr t = P("(\\x:0->0. a) (\\q:0. q)");
  TermPtr bad = replace_at(t, Position::parse("app.arg"),
                           Term::abs("q", parse_type("0"), Term::bound_var(0), 3));
  CHECK_THROWS_AS(develop(bad), Error);
  try {
    develop(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MarkNotRedex);
  }
}

TEST_CASE("residuals of a duplicated redex") {
  // contracting the outer redex copies the inner one twice (plus the memory copy)
  TermPtr t = P("(\\x:0. y x x) ((\\z:0. z) w)", "y:0->0->0");
  std::vector<Step> rs = enumerate_redexes(t);
  REQUIRE(rs.size() == 2);
  const Step& outer = rs[0].pos == Position{} ? rs[0] : rs[1];
  const Step& inner = rs[0].pos == Position{} ? rs[1] : rs[0];
  auto buckets = residuals_after_step(outer, {inner.pos});
  REQUIRE(buckets.size() == 1);
  CHECK(buckets[0].size() == 3);

  // the contracted redex itself has no residuals
  auto self = residuals_after_step(outer, {outer.pos});
  CHECK(self[0].empty());
}

TEST_CASE("multi-step projection closes the diamond") {
  TermPtr t1 = P("((\\y:0. w) ((\\y:0. w) z))[\\y:0. w]");
  std::vector<Step> rs = enumerate_steps_of_degree(t1, 1);
  REQUIRE(rs.size() == 2);

  ReductionSeq rho(t1), sigma(t1);
  rho.push(rs[0]);
  sigma.push(rs[1]);
  auto [rho_p, sigma_p] = project_seq(rho, sigma);
  CHECK(rho_p.size() == 1);
  CHECK(sigma_p.size() == 1);
  CHECK(alpha_equal(rho_p.target(), P("w[w[z]][\\y:0. w]")));
  CHECK(alpha_equal(sigma_p.target(), P("w[w[z]][\\y:0. w]")));

  // projecting over the empty reduction is the identity
  ReductionSeq eps(t1);
  auto [r2, s2] = project_seq(rho, eps);
  CHECK(seq_equal(r2, rho));
  CHECK(s2.empty());
  auto [r3, s3] = project_seq(eps, sigma);
  CHECK(r3.empty());
  CHECK(seq_equal(s3, sigma));

  CHECK_THROWS_AS(project_seq(rho, ReductionSeq(P("x"))), Error);
}

TEST_CASE("projection duplicates lower steps under higher ones") {
  // rho contracts the inner degree-1 redex; sigma the outer degree-2 one,
  // which copies the argument twice plus the memory copy.
  TermPtr t = P("(\\x:0. y x x) ((\\z:0. z) w)", "y:0->0->0");
  std::vector<Step> rs = enumerate_redexes(t);
  const Step& outer = rs[0].pos == Position{} ? rs[0] : rs[1];
  const Step& inner = rs[0].pos == Position{} ? rs[1] : rs[0];

  ReductionSeq rho(t), sigma(t);
  rho.push(inner);
  sigma.push(outer);
  auto [rho_p, sigma_p] = project_seq(rho, sigma);
  CHECK(rho_p.size() == 3);  // one per residual
  CHECK(sigma_p.size() == 1);
  CHECK(alpha_equal(rho_p.target(), sigma_p.target()));
}

TEST_CASE("postponement of forgetting") {
  // critical pair: the forgotten wrapper sits in the redex's memory
  TermPtr t = P("(\\x:0->0. x a)[s] (\\q:0. q)");
  ForgetSeq rho(t);
  rho.push(make_forget(t, Position::parse("app.fun")));
  CHECK(alpha_equal(rho.target(), P("(\\x:0->0. x a) (\\q:0. q)")));

  ReductionSeq sigma(rho.target());
  sigma.push(make_step(rho.target(), Position{}, StepKind::G));
  CHECK(alpha_equal(sigma.target(), P("((\\q:0. q) a)[\\q:0. q]")));

  auto [retr, prot] = postpone_forget(rho, sigma);
  CHECK(retr.size() == 1);
  CHECK(alpha_equal(retr.target(), P("((\\q:0. q) a)[\\q:0. q][s]")));
  CHECK(prot.size() == 1);
  CHECK(alpha_equal(prot.target(), sigma.target()));

  // empty forgetful prefix: nothing to do
  auto [r2, p2] = postpone_forget(ForgetSeq(rho.target()), sigma);
  CHECK(r2.size() == sigma.size());
  CHECK(p2.empty());
}

TEST_CASE("postponement duplicates the wrapper with the argument") {
  // the wrapper sits inside the argument, which the step copies
  TermPtr t = P("(\\x:0. y x x) (w[s])", "y:0->0->0");
  ForgetSeq rho(t);
  rho.push(make_forget(t, Position::parse("app.arg")));
  ReductionSeq sigma(rho.target());
  sigma.push(make_step(rho.target(), Position{}, StepKind::G));

  auto [retr, prot] = postpone_forget(rho, sigma);
  CHECK(retr.size() == 1);
  // three copies of w[s] appear: two substituted, one memorized
  CHECK(prot.size() == 3);
  CHECK(alpha_equal(prot.target(), sigma.target()));
}

TEST_CASE("lifting a lower step over a higher reduction") {
  // degree-1 redex inside the argument of a degree-2 redex
  TermPtr t = P("(\\x:0->0. x (x z)) (\\y:0. (\\u:0. u) y)");
  std::vector<Step> all = enumerate_redexes(t);
  REQUIRE(all.size() == 2);
  int lo = std::min(all[0].degree, all[1].degree);
  int hi = std::max(all[0].degree, all[1].degree);
  REQUIRE(lo == 1);
  REQUIRE(hi == 2);
  const Step& low = all[0].degree == lo ? all[0] : all[1];

  ReductionSeq sigma(apply_step(low));
  for (const Step& s : enumerate_steps_of_degree(sigma.target(), hi)) {
    sigma.push(s);
    break;
  }
  REQUIRE(sigma.size() == 1);

  LiftWitness w = lift_lower_step(low, sigma, hi);
  CHECK(alpha_equal(w.to_simp.source(), t));
  // the degree-2 step copies the argument twice and memorizes it once
  CHECK(w.lower.size() == 3);
  CHECK(alpha_equal(w.lower.source(), w.to_simp.target()));
  CHECK(alpha_equal(w.upper.source(), sigma.target()));
  CHECK(alpha_equal(w.lower.target(), w.upper.target()));

  CHECK_THROWS_AS(lift_lower_step(low, sigma, lo), Error);
}
