#include "deglab/residual.hpp"

#include <algorithm>
#include <functional>

#include "deglab/error.hpp"

namespace deglab {

namespace {

// Position of the Abs node heading the m-abstraction applied at redex_pos.
Position abs_position(const TermPtr& t, const Position& redex_pos) {
  TermPtr red = subterm_at(t, redex_pos);
  if (red->kind() != TermKind::App) fail(Errc::InvalidPosition, "not a redex position");
  Position p = redex_pos + Sel::AppFun;
  TermPtr cur = red->fun();
  while (cur->kind() == TermKind::Wrap) {
    p = p + Sel::WrapBody;
    cur = cur->wrap_body();
  }
  if (cur->kind() != TermKind::Abs) fail(Errc::InvalidPosition, "not a redex position");
  return p;
}

bool mark_matches(int have, int want) { return want == 0 ? have != 0 : have == want; }

}  // namespace

TermPtr mark_redex_abs(const TermPtr& t, const Position& redex_pos, int mark) {
  Position ap = abs_position(t, redex_pos);
  TermPtr a = subterm_at(t, ap);
  return replace_at(t, ap, Term::abs(a->binder_hint(), a->binder_type(), a->body(), mark));
}

TermPtr mark_wrap_node(const TermPtr& t, const Position& wrap_pos, int mark) {
  TermPtr w = subterm_at(t, wrap_pos);
  if (w->kind() != TermKind::Wrap) fail(Errc::InvalidPosition, "not a wrapper position");
  return replace_at(t, wrap_pos, Term::wrap(w->wrap_body(), w->mem(), mark));
}

int redex_abs_mark(const TermPtr& t, const Position& redex_pos) {
  return subterm_at(t, abs_position(t, redex_pos))->mark();
}

std::vector<Position> marked_redexes(const TermPtr& t, int mark) {
  std::vector<Position> out;
  for (const Step& s : enumerate_redexes(t))
    if (mark_matches(redex_abs_mark(t, s.pos), mark)) out.push_back(s.pos);
  return out;
}

std::vector<Position> marked_wraps(const TermPtr& t, int mark) {
  std::vector<Position> out;
  for (const ForgetStep& s : enumerate_forget_steps(t))
    if (mark_matches(subterm_at(t, s.pos)->mark(), mark)) out.push_back(s.pos);
  return out;
}

void check_marks_head_redexes(const TermPtr& t) {
  // Abs positions heading redexes.
  std::vector<Position> heads;
  for (const Step& s : enumerate_redexes(t)) heads.push_back(abs_position(t, s.pos));

  Position cur;
  std::function<void(const TermPtr&)> go = [&](const TermPtr& u) {
    switch (u->kind()) {
      case TermKind::FreeVar:
      case TermKind::BoundVar:
        return;
      case TermKind::Abs:
        if (u->mark() != 0 && std::find(heads.begin(), heads.end(), cur) == heads.end())
          fail(Errc::MarkNotRedex, "marked abstraction at " + cur.str() + " heads no redex");
        cur.path.push_back(Sel::AbsBody);
        go(u->body());
        cur.path.pop_back();
        return;
      case TermKind::App:
        cur.path.push_back(Sel::AppFun);
        go(u->fun());
        cur.path.pop_back();
        cur.path.push_back(Sel::AppArg);
        go(u->arg());
        cur.path.pop_back();
        return;
      case TermKind::Wrap:
        cur.path.push_back(Sel::WrapBody);
        go(u->wrap_body());
        cur.path.pop_back();
        cur.path.push_back(Sel::WrapMem);
        go(u->mem());
        cur.path.pop_back();
        return;
    }
  };
  go(t);
}

ReductionSeq develop(const TermPtr& labeled, int mark, long long budget) {
  check_marks_head_redexes(labeled);
  ReductionSeq seq(labeled);
  TermPtr cur = labeled;
  for (;;) {
    std::vector<Position> todo = marked_redexes(cur, mark);
    if (todo.empty()) break;
    if (static_cast<long long>(seq.size()) >= budget)
      fail(Errc::BudgetExceeded, "development exceeded " + std::to_string(budget) + " steps");
    Step s = make_step(cur, todo.front(), StepKind::G);
    seq.push(s);
    cur = seq.target();
  }
  return seq;
}

std::vector<std::vector<Position>> residuals_after_step(const Step& contracted,
                                                        const std::vector<Position>& tracked) {
  TermPtr labeled = erase_marks(contracted.source);
  for (size_t i = 0; i < tracked.size(); i++)
    labeled = mark_redex_abs(labeled, tracked[i], static_cast<int>(i) + 1);
  TermPtr tgt = apply_step(Step{labeled, contracted.pos, contracted.kind, contracted.degree});
  std::vector<std::vector<Position>> buckets(tracked.size());
  for (const Step& s : enumerate_redexes(tgt)) {
    int m = redex_abs_mark(tgt, s.pos);
    if (m >= 1 && m <= static_cast<int>(tracked.size())) buckets[m - 1].push_back(s.pos);
  }
  return buckets;
}

MultiStep all_redexes_of_degree(const TermPtr& t, int d) {
  MultiStep out{t, {}, d};
  for (const Step& s : enumerate_steps_of_degree(t, d)) out.redexes.push_back(s.pos);
  return out;
}

namespace {

TermPtr mark_mstep(const MultiStep& s, int mark) {
  TermPtr labeled = erase_marks(s.source);
  for (const Position& p : s.redexes) labeled = mark_redex_abs(labeled, p, mark);
  return labeled;
}

}  // namespace

TermPtr mstep_target(const MultiStep& s) {
  if (s.redexes.empty()) return s.source;
  return develop(mark_mstep(s, 1), 1).target();
}

ReductionSeq mstep_to_seq(const MultiStep& s, long long budget) {
  if (s.redexes.empty()) return ReductionSeq(s.source);
  return develop(mark_mstep(s, 1), 1, budget);
}

MultiStep mstep_after_step(const MultiStep& s, const Step& r) {
  if (!alpha_equal(s.source, r.source))
    fail(Errc::SourceMismatch, "multi-step and step have different sources");
  TermPtr labeled = mark_mstep(s, 1);
  TermPtr tgt = apply_step(Step{labeled, r.pos, r.kind, r.degree});
  MultiStep out{tgt, {}, s.degree};
  for (const Position& p : marked_redexes(tgt, 1)) out.redexes.push_back(p);
  return out;
}

MultiStep step_after_mstep(const Step& r, const MultiStep& s) {
  if (!alpha_equal(s.source, r.source))
    fail(Errc::SourceMismatch, "step and multi-step have different sources");
  if (std::find(s.redexes.begin(), s.redexes.end(), r.pos) != s.redexes.end()) {
    // A redex has no residuals after a development that contracts it.
    return MultiStep{mstep_target(s), {}, r.degree};
  }
  TermPtr labeled = mark_mstep(s, 1);
  labeled = mark_redex_abs(labeled, r.pos, 2);
  ReductionSeq dev = develop(labeled, 1);
  MultiStep out{dev.target(), {}, r.degree};
  for (const Position& p : marked_redexes(dev.target(), 2)) out.redexes.push_back(p);
  return out;
}

}  // namespace deglab
