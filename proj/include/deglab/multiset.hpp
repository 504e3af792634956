#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace deglab {

// Four-valued result of comparing under a strict partial order.
enum class PartialOrdering : uint8_t { Less, Equal, Greater, Incomparable };

constexpr PartialOrdering flip(PartialOrdering p) {
  switch (p) {
    case PartialOrdering::Less: return PartialOrdering::Greater;
    case PartialOrdering::Greater: return PartialOrdering::Less;
    default: return p;
  }
}

inline const char* to_string(PartialOrdering p) {
  switch (p) {
    case PartialOrdering::Less: return "Less";
    case PartialOrdering::Equal: return "Equal";
    case PartialOrdering::Greater: return "Greater";
    case PartialOrdering::Incomparable: return "Incomparable";
  }
  return "?";
}

// Finite multiset, stored as a vector sorted by a structural total order.
// The structural order is only for canonical storage and equality; the
// semantic (partial) order lives in the comparison functions below.
template <class X, class Less = std::less<X>>
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<X> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end(), Less{});
  }

  void add(X x) {
    auto it = std::upper_bound(elems_.begin(), elems_.end(), x, Less{});
    elems_.insert(it, std::move(x));
  }

  const std::vector<X>& elems() const { return elems_; }
  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  long long count(const X& x) const {
    auto [lo, hi] = std::equal_range(elems_.begin(), elems_.end(), x, Less{});
    return hi - lo;
  }

  Multiset operator+(const Multiset& o) const {
    Multiset out;
    out.elems_.resize(elems_.size() + o.elems_.size());
    std::merge(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
               out.elems_.begin(), Less{});
    return out;
  }

  bool operator==(const Multiset& o) const {
    if (elems_.size() != o.elems_.size()) return false;
    Less lt;
    for (size_t i = 0; i < elems_.size(); i++) {
      if (lt(elems_[i], o.elems_[i]) || lt(o.elems_[i], elems_[i])) return false;
    }
    return true;
  }

 private:
  std::vector<X> elems_;
};

// k copies of m summed together.
template <class X, class Less>
Multiset<X, Less> k_times(long long k, const Multiset<X, Less>& m) {
  Multiset<X, Less> out;
  for (long long i = 0; i < k; i++) out = out + m;
  return out;
}

namespace detail {

// Splits two sorted element vectors into m-n and n-m (multiset differences).
template <class X, class Less>
void multiset_diff(const std::vector<X>& m, const std::vector<X>& n, std::vector<X>& m_only,
                   std::vector<X>& n_only) {
  Less lt;
  size_t i = 0, j = 0;
  while (i < m.size() && j < n.size()) {
    if (lt(m[i], n[j])) {
      m_only.push_back(m[i++]);
    } else if (lt(n[j], m[i])) {
      n_only.push_back(n[j++]);
    } else {
      i++;
      j++;
    }
  }
  for (; i < m.size(); i++) m_only.push_back(m[i]);
  for (; j < n.size(); j++) n_only.push_back(n[j]);
}

}  // namespace detail

// The multiset extension of a strict partial order: m is greater than n iff
// they differ and every element of n-m is dominated by some element of m-n.
// This is the standard characterization of the Dershowitz-Manna order (the
// transitive closure of replacing one element by finitely many smaller ones);
// the test suite checks the agreement against a literal closure search.
template <class X, class Less, class Cmp>
PartialOrdering multiset_compare(const Multiset<X, Less>& m, const Multiset<X, Less>& n,
                                 Cmp elem_cmp) {
  std::vector<X> mo, no;
  detail::multiset_diff<X, Less>(m.elems(), n.elems(), mo, no);
  if (mo.empty() && no.empty()) return PartialOrdering::Equal;

  auto dominates = [&](const std::vector<X>& big, const std::vector<X>& small) {
    for (const X& y : small) {
      bool covered = false;
      for (const X& x : big) {
        if (elem_cmp(x, y) == PartialOrdering::Greater) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  };

  bool greater = !mo.empty() && dominates(mo, no);
  bool less = !no.empty() && dominates(no, mo);
  if (greater && !less) return PartialOrdering::Greater;
  if (less && !greater) return PartialOrdering::Less;
  return PartialOrdering::Incomparable;
}

// Pointwise multiset order: |m| = |n| and the elements can be matched up
// one-to-one with each element of m strictly above its partner.
template <class X, class Less, class Cmp>
bool pointwise_greater(const Multiset<X, Less>& m, const Multiset<X, Less>& n, Cmp elem_cmp) {
  if (m.size() != n.size()) return false;
  size_t k = m.size();
  // Kuhn's matching; sizes here are tiny.
  std::vector<std::vector<int>> adj(k);
  for (size_t i = 0; i < k; i++)
    for (size_t j = 0; j < k; j++)
      if (elem_cmp(m.elems()[i], n.elems()[j]) == PartialOrdering::Greater)
        adj[i].push_back(static_cast<int>(j));
  std::vector<int> match(k, -1);
  std::function<bool(size_t, std::vector<bool>&)> try_match = [&](size_t i,
                                                                  std::vector<bool>& seen) {
    for (int j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = true;
      if (match[j] < 0 || try_match(match[j], seen)) {
        match[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (size_t i = 0; i < k; i++) {
    std::vector<bool> seen(k, false);
    if (!try_match(i, seen)) return false;
  }
  return true;
}

}  // namespace deglab
