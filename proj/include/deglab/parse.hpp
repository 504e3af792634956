#pragma once

#include <string>

#include "deglab/term.hpp"
#include "deglab/typing.hpp"

namespace deglab {

// ASCII grammar:
//   Type  := BASE | Type "->" Type          (right-assoc; parens allowed)
//   Term  := VAR
//          | "\" VAR ":" Type "." Term      (body extends as far as possible)
//          | Term Term                      (left-assoc)
//          | Term "[" Term "]"              (wrapper; binds tighter than application)
// BASE and VAR are [A-Za-z0-9_]+.
//
// Free variables take their type from ctx; names absent from ctx default to
// the base type "0".
TypePtr parse_type(const std::string& text);
TermPtr parse_term(const std::string& text, const TypeEnv& ctx = {});

// "y:0->0->0, f:0->0" -> environment. Empty string is an empty environment.
TypeEnv parse_ctx(const std::string& text);

std::string print_type(const TypePtr& t);
std::string print_term(const TermPtr& t);

}  // namespace deglab
