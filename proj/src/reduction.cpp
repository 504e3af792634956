#include "deglab/reduction.hpp"

#include <algorithm>
#include <functional>

#include "deglab/error.hpp"

namespace deglab {

bool step_equal(const Step& a, const Step& b) {
  return a.kind == b.kind && a.pos == b.pos && alpha_equal(a.source, b.source);
}

bool forget_equal(const ForgetStep& a, const ForgetStep& b) {
  return a.pos == b.pos && alpha_equal(a.source, b.source);
}

namespace {

// Collects all redexes with their degrees in one typing pass.
TypePtr collect(const TermPtr& t, Position& cur, std::vector<TypePtr>& binders,
                std::vector<Step>& out, const TermPtr& root, StepKind kind) {
  switch (t->kind()) {
    case TermKind::FreeVar:
      return t->var_type();
    case TermKind::BoundVar: {
      int k = t->index();
      if (k >= static_cast<int>(binders.size()))
        fail(Errc::Untypable, "dangling index " + std::to_string(k));
      return binders[binders.size() - 1 - k];
    }
    case TermKind::Abs: {
      binders.push_back(t->binder_type());
      cur.path.push_back(Sel::AbsBody);
      TypePtr body = collect(t->body(), cur, binders, out, root, kind);
      cur.path.pop_back();
      binders.pop_back();
      return Type::arrow(t->binder_type(), body);
    }
    case TermKind::App: {
      cur.path.push_back(Sel::AppFun);
      TypePtr f = collect(t->fun(), cur, binders, out, root, kind);
      cur.path.pop_back();
      cur.path.push_back(Sel::AppArg);
      TypePtr a = collect(t->arg(), cur, binders, out, root, kind);
      cur.path.pop_back();
      if (!f->is_arrow()) fail(Errc::ArityMismatch, "applying a term of base type");
      if (!type_equal(f->dom(), a)) fail(Errc::DomainMismatch, "argument type mismatch");
      if (split_m_abstraction(t->fun()))
        out.push_back(Step{root, cur, kind, f->height()});
      return f->cod();
    }
    case TermKind::Wrap: {
      cur.path.push_back(Sel::WrapMem);
      collect(t->mem(), cur, binders, out, root, kind);
      cur.path.pop_back();
      cur.path.push_back(Sel::WrapBody);
      TypePtr b = collect(t->wrap_body(), cur, binders, out, root, kind);
      cur.path.pop_back();
      return b;
    }
  }
  fail(Errc::Untypable, "unreachable");
}

std::vector<Step> enumerate(const TermPtr& t, StepKind kind) {
  std::vector<Step> out;
  Position cur;
  std::vector<TypePtr> binders;
  collect(t, cur, binders, out, t, kind);
  std::sort(out.begin(), out.end(), [](const Step& a, const Step& b) { return a.pos < b.pos; });
  return out;
}

}  // namespace

std::vector<Step> enumerate_redexes(const TermPtr& t) { return enumerate(t, StepKind::G); }

std::vector<Step> enumerate_steps_of_degree(const TermPtr& t, int d) {
  std::vector<Step> all = enumerate_redexes(t);
  std::erase_if(all, [&](const Step& s) { return s.degree != d; });
  return all;
}

std::vector<Step> enumerate_beta_redexes(const TermPtr& t) {
  if (!t->is_pure()) fail(Errc::NotPure, "beta reduction is defined on pure terms");
  return enumerate(t, StepKind::Beta);
}

std::vector<ForgetStep> enumerate_forget_steps(const TermPtr& t) {
  std::vector<ForgetStep> out;
  Position cur;
  std::function<void(const TermPtr&)> go = [&](const TermPtr& u) {
    switch (u->kind()) {
      case TermKind::FreeVar:
      case TermKind::BoundVar:
        return;
      case TermKind::Abs:
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
        out.push_back(ForgetStep{t, cur});
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
  std::sort(out.begin(), out.end(),
            [](const ForgetStep& a, const ForgetStep& b) { return a.pos < b.pos; });
  return out;
}

int maxdeg(const TermPtr& t) {
  int d = 0;
  for (const Step& s : enumerate_redexes(t)) d = std::max(d, s.degree);
  return d;
}

bool is_g_normal(const TermPtr& t) { return enumerate_redexes(t).empty(); }

Step make_step(const TermPtr& source, const Position& pos, StepKind kind) {
  for (const Step& s : kind == StepKind::Beta ? enumerate_beta_redexes(source)
                                              : enumerate_redexes(source)) {
    if (s.pos == pos) return s;
  }
  fail(Errc::InvalidPosition, "no redex at " + pos.str());
}

ForgetStep make_forget(const TermPtr& source, const Position& pos) {
  TermPtr sub = subterm_at(source, pos);
  if (sub->kind() != TermKind::Wrap) fail(Errc::InvalidPosition, "no wrapper at " + pos.str());
  return ForgetStep{source, pos};
}

TermPtr apply_step(const Step& s) {
  TermPtr red = subterm_at(s.source, s.pos);
  if (red->kind() != TermKind::App) fail(Errc::InvalidPosition, "step position is not an application");
  auto ma = split_m_abstraction(red->fun());
  if (!ma) fail(Errc::InvalidPosition, "step position is not a redex");
  TermPtr contracted = open_binder(ma->abs->body(), red->arg());
  if (s.kind == StepKind::G) {
    contracted = Term::wrap(contracted, red->arg());
    contracted = append_memory(contracted, ma->memory, &ma->memory_marks);
  } else if (!ma->memory.empty()) {
    fail(Errc::InvalidPosition, "beta step on an m-abstraction with memory");
  }
  return replace_at(s.source, s.pos, contracted);
}

TermPtr apply_forget(const ForgetStep& s) {
  TermPtr sub = subterm_at(s.source, s.pos);
  if (sub->kind() != TermKind::Wrap) fail(Errc::InvalidPosition, "no wrapper at " + s.pos.str());
  return replace_at(s.source, s.pos, sub->wrap_body());
}

Step corresponding_step(const Step& beta) {
  if (beta.kind != StepKind::Beta || !beta.source->is_pure())
    fail(Errc::NotPure, "corresponding step is defined for beta steps on pure terms");
  return Step{beta.source, beta.pos, StepKind::G, beta.degree};
}

void ReductionSeq::push(const Step& s) {
  if (!alpha_equal(s.source, target_))
    fail(Errc::SourceMismatch, "step does not compose with the sequence");
  steps_.push_back(s);
  target_ = apply_step(s);
}

ReductionSeq ReductionSeq::tail() const {
  if (steps_.empty()) fail(Errc::SourceMismatch, "tail of an empty sequence");
  ReductionSeq out(apply_step(steps_.front()));
  for (size_t i = 1; i < steps_.size(); i++) out.push(steps_[i]);
  return out;
}

std::optional<int> ReductionSeq::uniform_degree() const {
  if (steps_.empty()) return 0;
  int d = steps_.front().degree;
  for (const Step& s : steps_)
    if (s.degree != d) return std::nullopt;
  return d;
}

ReductionSeq ReductionSeq::concat(const ReductionSeq& a, const ReductionSeq& b) {
  if (!alpha_equal(a.target(), b.source()))
    fail(Errc::SourceMismatch, "sequences do not compose");
  ReductionSeq out = a;
  for (const Step& s : b.steps()) out.push(s);
  return out;
}

void ForgetSeq::push(const ForgetStep& s) {
  if (!alpha_equal(s.source, target_))
    fail(Errc::SourceMismatch, "forgetful step does not compose with the sequence");
  steps_.push_back(s);
  target_ = apply_forget(s);
}

ForgetSeq ForgetSeq::tail() const {
  if (steps_.empty()) fail(Errc::SourceMismatch, "tail of an empty sequence");
  ForgetSeq out(apply_forget(steps_.front()));
  for (size_t i = 1; i < steps_.size(); i++) out.push(steps_[i]);
  return out;
}

ForgetSeq ForgetSeq::concat(const ForgetSeq& a, const ForgetSeq& b) {
  if (!alpha_equal(a.target(), b.source()))
    fail(Errc::SourceMismatch, "forgetful sequences do not compose");
  ForgetSeq out = a;
  for (const ForgetStep& s : b.steps()) out.push(s);
  return out;
}

bool seq_equal(const ReductionSeq& a, const ReductionSeq& b) {
  if (a.size() != b.size()) return false;
  if (!alpha_equal(a.source(), b.source())) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (!step_equal(a.steps()[i], b.steps()[i])) return false;
  return true;
}

}  // namespace deglab
