#include "deglab/simplify.hpp"

#include "deglab/error.hpp"
#include "deglab/residual.hpp"

namespace deglab {

namespace {

TermPtr simp_rec(const TermPtr& t, int d, std::vector<TypePtr>& binders) {
  switch (t->kind()) {
    case TermKind::FreeVar:
    case TermKind::BoundVar:
      return t;
    case TermKind::Abs: {
      binders.push_back(t->binder_type());
      TermPtr body = simp_rec(t->body(), d, binders);
      binders.pop_back();
      return Term::abs(t->binder_hint(), t->binder_type(), body);
    }
    case TermKind::App: {
      if (auto ma = split_m_abstraction(t->fun())) {
        TypePtr ft = type_of_under(t->fun(), binders);
        if (ft->height() == d) {
          binders.push_back(ma->abs->binder_type());
          TermPtr body = simp_rec(ma->abs->body(), d, binders);
          binders.pop_back();
          TermPtr arg = simp_rec(t->arg(), d, binders);
          std::vector<TermPtr> memory;
          memory.reserve(ma->memory.size());
          for (const TermPtr& m : ma->memory) memory.push_back(simp_rec(m, d, binders));
          TermPtr out = Term::wrap(open_binder(body, arg), arg);
          return append_memory(out, memory);
        }
      }
      return Term::app(simp_rec(t->fun(), d, binders), simp_rec(t->arg(), d, binders));
    }
    case TermKind::Wrap:
      return Term::wrap(simp_rec(t->wrap_body(), d, binders),
                        simp_rec(t->mem(), d, binders));
  }
  fail(Errc::Untypable, "unreachable");
}

}  // namespace

TermPtr simp_d(const TermPtr& t, int d) {
  if (d < 1) fail(Errc::DegreeZero, "simplification degree must be >= 1");
  type_of(t);  // reject untypable input up front
  std::vector<TypePtr> binders;
  return simp_rec(t, d, binders);
}

TermPtr simpfull(const TermPtr& t) {
  TermPtr cur = t;
  for (int d = maxdeg(t); d >= 1; d--) cur = simp_d(cur, d);
  return cur;
}

ReductionSeq simp_d_witness(const TermPtr& t, int d) {
  if (d < 1) fail(Errc::DegreeZero, "simplification degree must be >= 1");
  MultiStep all = all_redexes_of_degree(t, d);
  ReductionSeq seq = mstep_to_seq(all);
  return seq;
}

ReductionSeq simpfull_witness(const TermPtr& t) {
  ReductionSeq out(t);
  for (int d = maxdeg(t); d >= 1; d--)
    out = ReductionSeq::concat(out, simp_d_witness(out.target(), d));
  return out;
}

long long w_measure(const TermPtr& m) {
  if (!m->is_pure()) fail(Errc::NotPure, "the W-measure is defined on pure terms");
  type_of(m);
  return simpfull(m)->weight();
}

}  // namespace deglab
