#include "deglab/project.hpp"

#include "deglab/error.hpp"

namespace deglab {

namespace {

void spend(long long n, long long& used, long long budget) {
  used += n;
  if (used > budget)
    fail(Errc::BudgetExceeded, "projection exceeded " + std::to_string(budget) + " steps");
}

// Folds rho over the multi-step s: returns (rho/s, s/rho).
std::pair<ReductionSeq, MultiStep> seq_vs_mstep(const ReductionSeq& rho, MultiStep s,
                                                long long budget, long long& used) {
  ReductionSeq out(mstep_target(s));
  for (const Step& r : rho.steps()) {
    MultiStep r_after_s = step_after_mstep(r, s);
    s = mstep_after_step(s, r);
    ReductionSeq dev = mstep_to_seq(r_after_s, budget);
    spend(static_cast<long long>(dev.size()), used, budget);
    out = ReductionSeq::concat(out, dev);
  }
  return {out, s};
}

}  // namespace

std::pair<ReductionSeq, ReductionSeq> project_seq(const ReductionSeq& rho,
                                                  const ReductionSeq& sigma, long long budget) {
  if (!alpha_equal(rho.source(), sigma.source()))
    fail(Errc::SourceMismatch, "projected reductions must share their source");
  if (!rho.uniform_degree() || !sigma.uniform_degree())
    fail(Errc::MixedDegrees, "projection takes degree-homogeneous reductions");

  long long used = 0;
  ReductionSeq cur_rho = rho;
  ReductionSeq sigma_over_rho(rho.target());
  for (const Step& s0 : sigma.steps()) {
    MultiStep s{s0.source, {s0.pos}, s0.degree};
    auto [rho_next, s_over_rho] = seq_vs_mstep(cur_rho, s, budget, used);
    ReductionSeq dev = mstep_to_seq(s_over_rho, budget);
    spend(static_cast<long long>(dev.size()), used, budget);
    sigma_over_rho = ReductionSeq::concat(sigma_over_rho, dev);
    cur_rho = rho_next;
  }
  if (!alpha_equal(cur_rho.target(), sigma_over_rho.target()))
    fail(Errc::SourceMismatch, "internal: projection legs do not meet");
  return {cur_rho, sigma_over_rho};
}

namespace {

// Maps a position of the forget target back to the source, where the wrapper
// at q is still present.
Position preimage(const Position& p, const Position& q) {
  if (!q.is_prefix_of(p)) return p;
  Position out = q + Sel::WrapBody;
  out.path.insert(out.path.end(), p.path.begin() + q.path.size(), p.path.end());
  return out;
}

// Local postponement: r : t |> s forgets one wrapper, s2 : s ->d s'.
// Contracts the same redex in t and then erases every copy of the wrapper.
std::pair<Step, ForgetSeq> retract_local(const ForgetStep& r, const Step& s2) {
  TermPtr labeled = mark_wrap_node(erase_marks(r.source), r.pos, 1);
  Step lifted = make_step(labeled, preimage(s2.pos, r.pos), StepKind::G);
  if (lifted.degree != s2.degree)
    fail(Errc::SourceMismatch, "internal: retracted step changed degree");
  ForgetSeq erased(apply_step(lifted));
  for (;;) {
    std::vector<Position> wraps = marked_wraps(erased.target(), 1);
    if (wraps.empty()) break;
    erased.push(ForgetStep{erased.target(), wraps.front()});
  }
  if (!alpha_equal(erased.target(), apply_step(s2)))
    fail(Errc::SourceMismatch, "internal: postponement square does not close");
  return {Step{r.source, lifted.pos, StepKind::G, lifted.degree}, erased};
}

// A single step over a whole forgetful sequence.
std::pair<Step, ForgetSeq> retract_step(const ForgetSeq& rho, const Step& s) {
  if (rho.empty()) return {s, ForgetSeq(apply_step(s))};
  auto [s1, fs1] = retract_step(rho.tail(), s);
  auto [s2, fs2] = retract_local(rho.steps().front(), s1);
  return {s2, ForgetSeq::concat(fs2, fs1)};
}

}  // namespace

std::pair<ReductionSeq, ForgetSeq> postpone_forget(const ForgetSeq& rho,
                                                   const ReductionSeq& sigma) {
  if (!alpha_equal(rho.target(), sigma.source()))
    fail(Errc::SourceMismatch, "forgetful reduction must end at the reduction's source");
  ReductionSeq retracted(rho.source());
  ForgetSeq cur = rho;
  for (const Step& s : sigma.steps()) {
    auto [s1, fs1] = retract_step(cur, s);
    retracted.push(s1);
    cur = fs1;
  }
  if (!alpha_equal(cur.target(), sigma.target()))
    fail(Errc::SourceMismatch, "internal: postponement legs do not meet");
  return {retracted, cur};
}

LiftWitness lift_lower_step(const Step& r, const ReductionSeq& sigma, int upper_degree,
                            long long budget) {
  if (r.degree >= upper_degree)
    fail(Errc::MixedDegrees, "lifting needs a step of strictly lower degree");
  auto sd = sigma.uniform_degree();
  if (!sd || (*sd != 0 && *sd != upper_degree))
    fail(Errc::MixedDegrees, "upper reduction must be degree-homogeneous at the upper degree");
  if (!alpha_equal(apply_step(r), sigma.source()))
    fail(Errc::SourceMismatch, "upper reduction must start at the step's target");

  long long used = 0;
  MultiStep all = all_redexes_of_degree(r.source, upper_degree);
  ReductionSeq to_simp = mstep_to_seq(all, budget);

  ReductionSeq rho(r.source);
  rho.push(r);
  auto [lower, all_after_r] = seq_vs_mstep(rho, all, budget, used);
  ReductionSeq upper_from_s = mstep_to_seq(all_after_r, budget);

  auto [upper, dead] = project_seq(upper_from_s, sigma, budget);
  if (!dead.empty())
    fail(Errc::SourceMismatch, "internal: lifted target was not normal for the upper degree");
  if (lower.empty())
    fail(Errc::SourceMismatch, "internal: lifted lower leg is empty");
  if (!alpha_equal(upper.target(), lower.target()))
    fail(Errc::SourceMismatch, "internal: lifting legs do not meet");
  return {to_simp, lower, upper};
}

}  // namespace deglab
