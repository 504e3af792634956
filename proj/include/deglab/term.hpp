#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deglab/type.hpp"

namespace deglab {

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind : uint8_t { FreeVar, BoundVar, Abs, App, Wrap };

// Term trees. Bound variables are de Bruijn indices; binders keep the
// user-facing name as a printing hint only. Free variables carry their
// type annotation (Church style). Wrap nodes hold an inert memorized term.
//
// Abs and Wrap nodes additionally carry an integer mark (0 = unmarked).
// Marks are ignored by alpha_equal and alpha_hash; they exist so that a
// term can double as a labeled term for residual tracking. Substitution
// copies subterms wholesale, so marks survive it.
class Term {
 public:
  static TermPtr free_var(std::string name, TypePtr type);
  static TermPtr bound_var(int index);
  static TermPtr abs(std::string hint, TypePtr binder_type, TermPtr body, int mark = 0);
  static TermPtr app(TermPtr fun, TermPtr arg);
  static TermPtr wrap(TermPtr body, TermPtr mem, int mark = 0);

  TermKind kind() const { return kind_; }

  const std::string& var_name() const { assert(kind_ == TermKind::FreeVar); return name_; }
  const TypePtr& var_type() const { assert(kind_ == TermKind::FreeVar); return ann_; }
  int index() const { assert(kind_ == TermKind::BoundVar); return index_; }
  const std::string& binder_hint() const { assert(kind_ == TermKind::Abs); return name_; }
  const TypePtr& binder_type() const { assert(kind_ == TermKind::Abs); return ann_; }
  const TermPtr& body() const { assert(kind_ == TermKind::Abs); return child0_; }
  const TermPtr& fun() const { assert(kind_ == TermKind::App); return child0_; }
  const TermPtr& arg() const { assert(kind_ == TermKind::App); return child1_; }
  const TermPtr& wrap_body() const { assert(kind_ == TermKind::Wrap); return child0_; }
  const TermPtr& mem() const { assert(kind_ == TermKind::Wrap); return child1_; }
  int mark() const { return mark_; }

  size_t alpha_hash() const { return hash_; }
  int weight() const { return weight_; }  // number of Wrap nodes
  int node_count() const { return nodes_; }
  bool is_pure() const { return weight_ == 0; }

 private:
  Term() = default;

  TermKind kind_ = TermKind::FreeVar;
  std::string name_;
  TypePtr ann_;
  int index_ = -1;
  TermPtr child0_, child1_;
  int mark_ = 0;
  size_t hash_ = 0;
  int weight_ = 0;
  int nodes_ = 1;
};

// Alpha-equality; name hints and marks are irrelevant.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// --- Positions ------------------------------------------------------------

enum class Sel : uint8_t { AbsBody = 0, AppFun = 1, AppArg = 2, WrapBody = 3, WrapMem = 4 };

// Path from the root; empty = the root itself. Lexicographic order on paths
// (prefix first) is the leftmost-outermost order used everywhere.
struct Position {
  std::vector<Sel> path;

  bool operator==(const Position&) const = default;
  std::strong_ordering operator<=>(const Position& o) const;

  bool is_prefix_of(const Position& o) const;
  Position operator+(Sel s) const;
  Position operator+(const Position& o) const;

  std::string str() const;                   // e.g. "app.fun/abs.body"
  static Position parse(const std::string&);
};

TermPtr subterm_at(const TermPtr& t, const Position& p);
TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s);

// --- Substitution ----------------------------------------------------------

// beta-substitution: replaces index 0 of `body` with `arg` (which must be
// locally closed) and renumbers the remaining indices.
TermPtr open_binder(const TermPtr& body, const TermPtr& arg);

// t{x := s} for a free variable x; memorized subterms are substituted too.
// Throws TypeMismatch if s's type disagrees with x's annotation in t.
TermPtr subst_free(const TermPtr& t, const std::string& x, const TermPtr& s);

int count_free_occurrences(const TermPtr& t, const std::string& x);

// --- Memories / m-abstractions ---------------------------------------------

// t = (\x.body)L viewed through the wrapper spine; memory is innermost-first,
// i.e. (\x.b)[u][v] yields memory {u, v}. The wrapper marks travel along so
// that rebuilding the spine preserves them.
struct MAbs {
  TermPtr abs;                    // the Abs node itself
  std::vector<TermPtr> memory;    // innermost wrapper first
  std::vector<int> memory_marks;  // parallel to memory
};

std::optional<MAbs> split_m_abstraction(const TermPtr& t);

// Appends memory around t, first element innermost; marks, when given, are
// applied to the created wrappers.
TermPtr append_memory(TermPtr t, const std::vector<TermPtr>& memory,
                      const std::vector<int>* marks = nullptr);

// --- Marks ------------------------------------------------------------------

TermPtr erase_marks(const TermPtr& t);

}  // namespace deglab
