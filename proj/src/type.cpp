#include "deglab/type.hpp"

#include <cassert>
#include <functional>

namespace deglab {

namespace {
size_t hash_mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}
}  // namespace

TypePtr Type::base(std::string name) {
  assert(!name.empty());
  auto t = std::shared_ptr<Type>(new Type());
  t->name_ = std::move(name);
  t->height_ = 0;
  t->hash_ = hash_mix(0x5ba5e, std::hash<std::string>{}(t->name_));
  return t;
}

TypePtr Type::arrow(TypePtr dom, TypePtr cod) {
  assert(dom && cod);
  auto t = std::shared_ptr<Type>(new Type());
  t->height_ = 1 + std::max(dom->height(), cod->height());
  t->hash_ = hash_mix(hash_mix(0xa440, dom->hash()), cod->hash());
  t->dom_ = std::move(dom);
  t->cod_ = std::move(cod);
  return t;
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash()) return false;
  if (a->is_base() != b->is_base()) return false;
  if (a->is_base()) return a->name() == b->name();
  return type_equal(a->dom(), b->dom()) && type_equal(a->cod(), b->cod());
}

std::string to_string(const TypePtr& t) {
  if (t->is_base()) return t->name();
  // -> is right-associative; parenthesize arrow domains only.
  std::string dom = to_string(t->dom());
  if (t->dom()->is_arrow()) dom = "(" + dom + ")";
  return dom + "->" + to_string(t->cod());
}

}  // namespace deglab
