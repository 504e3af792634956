#pragma once

#include <vector>

#include "deglab/reduction.hpp"

namespace deglab {

inline constexpr long long kDevelopBudget = 200000;

// Residual tracking works by marking abstraction nodes: to follow a set of
// redexes through reduction, mark the abstraction heading each one, reduce,
// and look up which target redexes still carry the mark. Marks are copied
// together with the subterms they sit in, so they are stable under
// substitution.

// Marks the abstraction heading the redex at redex_pos (an App node).
TermPtr mark_redex_abs(const TermPtr& t, const Position& redex_pos, int mark);
// Marks the Wrap node at wrap_pos.
TermPtr mark_wrap_node(const TermPtr& t, const Position& wrap_pos, int mark);
// Mark carried by the abstraction heading the redex at redex_pos.
int redex_abs_mark(const TermPtr& t, const Position& redex_pos);

// Redex positions whose head abstraction carries `mark`
// (mark == 0 selects any nonzero mark). Leftmost-outermost order.
std::vector<Position> marked_redexes(const TermPtr& t, int mark = 0);
std::vector<Position> marked_wraps(const TermPtr& t, int mark = 0);

// MarkNotRedex unless every marked abstraction heads a redex.
void check_marks_head_redexes(const TermPtr& t);

// Complete development of the marked redexes: repeatedly contracts the
// leftmost-outermost redex whose abstraction carries `mark` (0 = any mark),
// until none remains. Terminates by finite developments; the budget turns a
// malfunction into an error instead of a hang.
ReductionSeq develop(const TermPtr& labeled, int mark = 0, long long budget = kDevelopBudget);

// Residuals of the `tracked` redexes after contracting `contracted`:
// one bucket of target redex positions per tracked position.
std::vector<std::vector<Position>> residuals_after_step(const Step& contracted,
                                                        const std::vector<Position>& tracked);

// A multi-step: a set of redexes of one degree contracted simultaneously
// (by complete development).
struct MultiStep {
  TermPtr source;
  std::vector<Position> redexes;  // sorted, distinct
  int degree = 0;
};

MultiStep all_redexes_of_degree(const TermPtr& t, int d);
TermPtr mstep_target(const MultiStep& s);
ReductionSeq mstep_to_seq(const MultiStep& s, long long budget = kDevelopBudget);

// Residual projections between a step and a multi-step with the same source.
MultiStep mstep_after_step(const MultiStep& s, const Step& r);  // s after r
MultiStep step_after_mstep(const Step& r, const MultiStep& s);  // r after s

}  // namespace deglab
