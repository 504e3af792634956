#include "deglab/term.hpp"

#include <functional>
#include <sstream>

#include "deglab/error.hpp"
#include "deglab/typing.hpp"

namespace deglab {

namespace {
size_t hash_mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}
}  // namespace

TermPtr Term::free_var(std::string name, TypePtr type) {
  assert(!name.empty() && type);
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::FreeVar;
  t->hash_ = hash_mix(hash_mix(0xf3ee, std::hash<std::string>{}(name)), type->hash());
  t->name_ = std::move(name);
  t->ann_ = std::move(type);
  return t;
}

TermPtr Term::bound_var(int index) {
  assert(index >= 0);
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::BoundVar;
  t->index_ = index;
  t->hash_ = hash_mix(0xb0, static_cast<size_t>(index));
  return t;
}

TermPtr Term::abs(std::string hint, TypePtr binder_type, TermPtr body, int mark) {
  assert(binder_type && body);
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Abs;
  t->hash_ = hash_mix(hash_mix(0xab5, binder_type->hash()), body->alpha_hash());
  t->weight_ = body->weight();
  t->nodes_ = 1 + body->node_count();
  t->name_ = std::move(hint);
  t->ann_ = std::move(binder_type);
  t->child0_ = std::move(body);
  t->mark_ = mark;
  return t;
}

TermPtr Term::app(TermPtr fun, TermPtr arg) {
  assert(fun && arg);
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::App;
  t->hash_ = hash_mix(hash_mix(0xa99, fun->alpha_hash()), arg->alpha_hash());
  t->weight_ = fun->weight() + arg->weight();
  t->nodes_ = 1 + fun->node_count() + arg->node_count();
  t->child0_ = std::move(fun);
  t->child1_ = std::move(arg);
  return t;
}

TermPtr Term::wrap(TermPtr body, TermPtr mem, int mark) {
  assert(body && mem);
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Wrap;
  t->hash_ = hash_mix(hash_mix(0x33a9, body->alpha_hash()), mem->alpha_hash());
  t->weight_ = 1 + body->weight() + mem->weight();
  t->nodes_ = 1 + body->node_count() + mem->node_count();
  t->child0_ = std::move(body);
  t->child1_ = std::move(mem);
  t->mark_ = mark;
  return t;
}

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->alpha_hash() != b->alpha_hash()) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::FreeVar:
      return a->var_name() == b->var_name() && type_equal(a->var_type(), b->var_type());
    case TermKind::BoundVar:
      return a->index() == b->index();
    case TermKind::Abs:
      return type_equal(a->binder_type(), b->binder_type()) && alpha_equal(a->body(), b->body());
    case TermKind::App:
      return alpha_equal(a->fun(), b->fun()) && alpha_equal(a->arg(), b->arg());
    case TermKind::Wrap:
      return alpha_equal(a->wrap_body(), b->wrap_body()) && alpha_equal(a->mem(), b->mem());
  }
  return false;
}

// --- Positions ---------------------------------------------------------------

std::strong_ordering Position::operator<=>(const Position& o) const {
  size_t n = std::min(path.size(), o.path.size());
  for (size_t i = 0; i < n; i++) {
    if (path[i] != o.path[i])
      return static_cast<uint8_t>(path[i]) <=> static_cast<uint8_t>(o.path[i]);
  }
  return path.size() <=> o.path.size();
}

bool Position::is_prefix_of(const Position& o) const {
  if (path.size() > o.path.size()) return false;
  return std::equal(path.begin(), path.end(), o.path.begin());
}

Position Position::operator+(Sel s) const {
  Position p = *this;
  p.path.push_back(s);
  return p;
}

Position Position::operator+(const Position& o) const {
  Position p = *this;
  p.path.insert(p.path.end(), o.path.begin(), o.path.end());
  return p;
}

std::string Position::str() const {
  static const char* names[] = {"abs.body", "app.fun", "app.arg", "wrap.body", "wrap.mem"};
  if (path.empty()) return "root";
  std::string out;
  for (size_t i = 0; i < path.size(); i++) {
    if (i) out += "/";
    out += names[static_cast<uint8_t>(path[i])];
  }
  return out;
}

Position Position::parse(const std::string& s) {
  Position p;
  if (s.empty() || s == "root") return p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '/')) {
    if (item == "abs.body") p.path.push_back(Sel::AbsBody);
    else if (item == "app.fun") p.path.push_back(Sel::AppFun);
    else if (item == "app.arg") p.path.push_back(Sel::AppArg);
    else if (item == "wrap.body") p.path.push_back(Sel::WrapBody);
    else if (item == "wrap.mem") p.path.push_back(Sel::WrapMem);
    else fail(Errc::InvalidPosition, "bad selector '" + item + "'");
  }
  return p;
}

namespace {

const TermPtr& child_at(const TermPtr& t, Sel s) {
  switch (s) {
    case Sel::AbsBody:
      if (t->kind() == TermKind::Abs) return t->body();
      break;
    case Sel::AppFun:
      if (t->kind() == TermKind::App) return t->fun();
      break;
    case Sel::AppArg:
      if (t->kind() == TermKind::App) return t->arg();
      break;
    case Sel::WrapBody:
      if (t->kind() == TermKind::Wrap) return t->wrap_body();
      break;
    case Sel::WrapMem:
      if (t->kind() == TermKind::Wrap) return t->mem();
      break;
  }
  fail(Errc::InvalidPosition, "selector does not match node kind");
}

TermPtr rebuild(const TermPtr& t, Sel s, const TermPtr& child) {
  switch (t->kind()) {
    case TermKind::Abs:
      return Term::abs(t->binder_hint(), t->binder_type(), child, t->mark());
    case TermKind::App:
      return s == Sel::AppFun ? Term::app(child, t->arg()) : Term::app(t->fun(), child);
    case TermKind::Wrap:
      return s == Sel::WrapBody ? Term::wrap(child, t->mem(), t->mark())
                                : Term::wrap(t->wrap_body(), child, t->mark());
    default:
      fail(Errc::InvalidPosition, "leaf node has no children");
  }
}

}  // namespace

TermPtr subterm_at(const TermPtr& t, const Position& p) {
  TermPtr cur = t;
  for (Sel s : p.path) cur = child_at(cur, s);
  return cur;
}

TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s) {
  if (p.path.empty()) return s;
  std::function<TermPtr(const TermPtr&, size_t)> go = [&](const TermPtr& cur, size_t i) -> TermPtr {
    Sel sel = p.path[i];
    const TermPtr& child = child_at(cur, sel);
    TermPtr nc = (i + 1 == p.path.size()) ? s : go(child, i + 1);
    return rebuild(cur, sel, nc);
  };
  return go(t, 0);
}

// --- Substitution --------------------------------------------------------------

namespace {

// Replaces index `depth` with `arg` (locally closed) and decrements larger indices.
TermPtr open_at(const TermPtr& t, int depth, const TermPtr& arg) {
  switch (t->kind()) {
    case TermKind::FreeVar:
      return t;
    case TermKind::BoundVar: {
      int k = t->index();
      if (k == depth) return arg;
      if (k > depth) return Term::bound_var(k - 1);
      return t;
    }
    case TermKind::Abs:
      return Term::abs(t->binder_hint(), t->binder_type(), open_at(t->body(), depth + 1, arg),
                       t->mark());
    case TermKind::App:
      return Term::app(open_at(t->fun(), depth, arg), open_at(t->arg(), depth, arg));
    case TermKind::Wrap:
      return Term::wrap(open_at(t->wrap_body(), depth, arg), open_at(t->mem(), depth, arg),
                        t->mark());
  }
  fail(Errc::InvalidPosition, "unreachable");
}

TermPtr subst_free_rec(const TermPtr& t, const std::string& x, const TermPtr& s) {
  switch (t->kind()) {
    case TermKind::FreeVar:
      return t->var_name() == x ? s : t;
    case TermKind::BoundVar:
      return t;
    case TermKind::Abs:
      return Term::abs(t->binder_hint(), t->binder_type(), subst_free_rec(t->body(), x, s),
                       t->mark());
    case TermKind::App:
      return Term::app(subst_free_rec(t->fun(), x, s), subst_free_rec(t->arg(), x, s));
    case TermKind::Wrap:
      return Term::wrap(subst_free_rec(t->wrap_body(), x, s), subst_free_rec(t->mem(), x, s),
                        t->mark());
  }
  fail(Errc::InvalidPosition, "unreachable");
}

void find_annotation(const TermPtr& t, const std::string& x, TypePtr& out) {
  if (out) return;
  switch (t->kind()) {
    case TermKind::FreeVar:
      if (t->var_name() == x) out = t->var_type();
      return;
    case TermKind::BoundVar:
      return;
    case TermKind::Abs:
      find_annotation(t->body(), x, out);
      return;
    case TermKind::App:
      find_annotation(t->fun(), x, out);
      find_annotation(t->arg(), x, out);
      return;
    case TermKind::Wrap:
      find_annotation(t->wrap_body(), x, out);
      find_annotation(t->mem(), x, out);
      return;
  }
}

}  // namespace

TermPtr open_binder(const TermPtr& body, const TermPtr& arg) { return open_at(body, 0, arg); }

TermPtr subst_free(const TermPtr& t, const std::string& x, const TermPtr& s) {
  TypePtr ann;
  find_annotation(t, x, ann);
  if (ann) {
    TypePtr st = type_of(s);
    if (!type_equal(ann, st))
      fail(Errc::TypeMismatch, "substituting " + to_string(st) + " for a variable of type " +
                                   to_string(ann));
  }
  return subst_free_rec(t, x, s);
}

int count_free_occurrences(const TermPtr& t, const std::string& x) {
  switch (t->kind()) {
    case TermKind::FreeVar:
      return t->var_name() == x ? 1 : 0;
    case TermKind::BoundVar:
      return 0;
    case TermKind::Abs:
      return count_free_occurrences(t->body(), x);
    case TermKind::App:
      return count_free_occurrences(t->fun(), x) + count_free_occurrences(t->arg(), x);
    case TermKind::Wrap:
      return count_free_occurrences(t->wrap_body(), x) + count_free_occurrences(t->mem(), x);
  }
  return 0;
}

// --- Memories / m-abstractions ---------------------------------------------------

std::optional<MAbs> split_m_abstraction(const TermPtr& t) {
  std::vector<TermPtr> memory;  // collected outermost-first
  std::vector<int> marks;
  TermPtr cur = t;
  while (cur->kind() == TermKind::Wrap) {
    memory.push_back(cur->mem());
    marks.push_back(cur->mark());
    cur = cur->wrap_body();
  }
  if (cur->kind() != TermKind::Abs) return std::nullopt;
  std::reverse(memory.begin(), memory.end());  // innermost wrapper first
  std::reverse(marks.begin(), marks.end());
  return MAbs{cur, std::move(memory), std::move(marks)};
}

TermPtr append_memory(TermPtr t, const std::vector<TermPtr>& memory,
                      const std::vector<int>* marks) {
  for (size_t i = 0; i < memory.size(); i++)
    t = Term::wrap(std::move(t), memory[i], marks ? (*marks)[i] : 0);
  return t;
}

// --- Marks ------------------------------------------------------------------------

TermPtr erase_marks(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::FreeVar:
    case TermKind::BoundVar:
      return t;
    case TermKind::Abs: {
      TermPtr b = erase_marks(t->body());
      if (t->mark() == 0 && b.get() == t->body().get()) return t;
      return Term::abs(t->binder_hint(), t->binder_type(), b, 0);
    }
    case TermKind::App: {
      TermPtr f = erase_marks(t->fun()), a = erase_marks(t->arg());
      if (f.get() == t->fun().get() && a.get() == t->arg().get()) return t;
      return Term::app(f, a);
    }
    case TermKind::Wrap: {
      TermPtr b = erase_marks(t->wrap_body()), m = erase_marks(t->mem());
      if (t->mark() == 0 && b.get() == t->wrap_body().get() && m.get() == t->mem().get()) return t;
      return Term::wrap(b, m, 0);
    }
  }
  fail(Errc::InvalidPosition, "unreachable");
}

}  // namespace deglab
