#pragma once

#include <memory>
#include <string>

#include "deglab/error.hpp"

namespace deglab {

class Type;
using TypePtr = std::shared_ptr<const Type>;

// Simple types: named base types and arrows. Immutable, shared.
class Type {
 public:
  static TypePtr base(std::string name);
  static TypePtr arrow(TypePtr dom, TypePtr cod);

  bool is_base() const { return dom_ == nullptr; }
  bool is_arrow() const { return dom_ != nullptr; }

  const std::string& name() const { return name_; }
  const TypePtr& dom() const { return dom_; }
  const TypePtr& cod() const { return cod_; }

  // h(base) = 0, h(A->B) = 1 + max(h(A), h(B)).
  int height() const { return height_; }
  size_t hash() const { return hash_; }

 private:
  Type() = default;

  std::string name_;
  TypePtr dom_, cod_;
  int height_ = 0;
  size_t hash_ = 0;
};

bool type_equal(const TypePtr& a, const TypePtr& b);
std::string to_string(const TypePtr& t);

}  // namespace deglab
