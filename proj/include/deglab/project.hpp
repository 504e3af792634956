#pragma once

#include "deglab/residual.hpp"

namespace deglab {

// Projects two degree-homogeneous reductions from a common source over each
// other. Returns (rho/sigma, sigma/rho), composable to a common target:
// rho/sigma starts at tgt(sigma), sigma/rho starts at tgt(rho).
// When the degrees differ, |rho/sigma| >= |rho| and the projection is
// injective in rho.
std::pair<ReductionSeq, ReductionSeq> project_seq(const ReductionSeq& rho,
                                                  const ReductionSeq& sigma,
                                                  long long budget = kDevelopBudget);

// Pushes forgetful steps past a degree-homogeneous reduction:
// given rho : t |>* t' and sigma : t' ->d* s', returns
// (sigma\rho : t ->d* s, rho\sigma : s |>* s'), with |sigma\rho| = |sigma|.
std::pair<ReductionSeq, ForgetSeq> postpone_forget(const ForgetSeq& rho,
                                                   const ReductionSeq& sigma);

// Lifts a lower-degree step over higher-degree reduction: for r : t ->d s
// and sigma : s ->D* s' with d < D, closes the diagram through the complete
// degree-D development of t. The lower leg has at least one step and its
// target equals the target of the upper leg.
struct LiftWitness {
  ReductionSeq to_simp;  // t ->D* simp_D(t)
  ReductionSeq lower;    // simp_D(t) ->d+ u
  ReductionSeq upper;    // s' ->D* u
};

LiftWitness lift_lower_step(const Step& r, const ReductionSeq& sigma, int upper_degree,
                            long long budget = kDevelopBudget);

}  // namespace deglab
