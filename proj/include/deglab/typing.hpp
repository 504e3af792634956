#pragma once

#include <map>
#include <string>
#include <vector>

#include "deglab/term.hpp"

namespace deglab {

using TypeEnv = std::map<std::string, TypePtr>;

// Type of t from its own annotations (free variables carry their types).
// Throws ArityMismatch / DomainMismatch for ill-formed applications.
TypePtr type_of(const TermPtr& t);

// Same, but under a stack of binder types for the enclosing abstractions
// (innermost last); used when typing proper subterms.
TypePtr type_of_under(const TermPtr& t, std::vector<TypePtr>& binders);

// Checks t against an explicit environment: every free variable must be
// bound in env (UnboundVariable) and its annotation must agree with it
// (AnnotationMismatch). Returns the unique type.
TypePtr typecheck(const TypeEnv& env, const TermPtr& t);

bool is_typable(const TermPtr& t);

// The environment formed by the term's own free-variable annotations.
TypeEnv free_context(const TermPtr& t);

}  // namespace deglab
