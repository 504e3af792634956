#include "deglab/typing.hpp"

#include "deglab/error.hpp"

namespace deglab {

namespace {

TypePtr infer(const TermPtr& t, std::vector<TypePtr>& binders, const TypeEnv* env) {
  switch (t->kind()) {
    case TermKind::FreeVar: {
      if (env) {
        auto it = env->find(t->var_name());
        if (it == env->end()) fail(Errc::UnboundVariable, "variable '" + t->var_name() + "'");
        if (!type_equal(it->second, t->var_type()))
          fail(Errc::AnnotationMismatch, "'" + t->var_name() + "' annotated " +
                                             to_string(t->var_type()) + " but bound to " +
                                             to_string(it->second));
      }
      return t->var_type();
    }
    case TermKind::BoundVar: {
      int k = t->index();
      if (k >= static_cast<int>(binders.size()))
        fail(Errc::UnboundVariable, "dangling index " + std::to_string(k));
      return binders[binders.size() - 1 - k];
    }
    case TermKind::Abs: {
      binders.push_back(t->binder_type());
      TypePtr body = infer(t->body(), binders, env);
      binders.pop_back();
      return Type::arrow(t->binder_type(), body);
    }
    case TermKind::App: {
      TypePtr f = infer(t->fun(), binders, env);
      TypePtr a = infer(t->arg(), binders, env);
      if (!f->is_arrow())
        fail(Errc::ArityMismatch, "applying a term of base type " + to_string(f));
      if (!type_equal(f->dom(), a))
        fail(Errc::DomainMismatch,
             "argument has type " + to_string(a) + ", expected " + to_string(f->dom()));
      return f->cod();
    }
    case TermKind::Wrap: {
      // The memorized term must be typable; its type is discarded.
      infer(t->mem(), binders, env);
      return infer(t->wrap_body(), binders, env);
    }
  }
  fail(Errc::Untypable, "unreachable");
}

}  // namespace

TypePtr type_of(const TermPtr& t) {
  std::vector<TypePtr> binders;
  return infer(t, binders, nullptr);
}

TypePtr type_of_under(const TermPtr& t, std::vector<TypePtr>& binders) {
  return infer(t, binders, nullptr);
}

TypePtr typecheck(const TypeEnv& env, const TermPtr& t) {
  std::vector<TypePtr> binders;
  return infer(t, binders, &env);
}

bool is_typable(const TermPtr& t) {
  try {
    type_of(t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

TypeEnv free_context(const TermPtr& t) {
  TypeEnv env;
  switch (t->kind()) {
    case TermKind::FreeVar:
      env[t->var_name()] = t->var_type();
      return env;
    case TermKind::BoundVar:
      return env;
    case TermKind::Abs:
      return free_context(t->body());
    case TermKind::App: {
      env = free_context(t->fun());
      env.merge(free_context(t->arg()));
      return env;
    }
    case TermKind::Wrap: {
      env = free_context(t->wrap_body());
      env.merge(free_context(t->mem()));
      return env;
    }
  }
  return env;
}

}  // namespace deglab
