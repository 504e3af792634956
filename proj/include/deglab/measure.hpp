#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deglab/multiset.hpp"
#include "deglab/reduction.hpp"

namespace deglab {

// Nested measure values. An A-value is a multiset of (degree, B-value)
// pairs; a B-value is a multiset of A-values. The structural order used for
// canonical storage is a total order unrelated to the semantic comparison.
struct AValue;
struct BValue;
struct AItem;

int struct_cmp(const AValue& a, const AValue& b);
int struct_cmp(const BValue& a, const BValue& b);
int struct_cmp(const AItem& a, const AItem& b);

struct AValueLess {
  bool operator()(const AValue& a, const AValue& b) const;
};
struct AItemLess {
  bool operator()(const AItem& a, const AItem& b) const;
};

struct BValue {
  Multiset<AValue, AValueLess> items;
  bool operator==(const BValue& o) const;
};

struct AItem {
  int degree = 0;
  BValue b;
};

struct AValue {
  Multiset<AItem, AItemLess> items;
  bool operator==(const AValue& o) const;
};

// Semantic comparisons: Dershowitz-Manna on multisets, lexicographic on
// (degree, B-value) pairs.
PartialOrdering compare(const AValue& a, const AValue& b);
PartialOrdering compare(const BValue& a, const BValue& b);
PartialOrdering compare(const AItem& a, const AItem& b);

std::string pretty(const AValue& a);
std::string pretty(const BValue& b);
std::string measure_to_json(const AValue& a);

struct MeasureBudget {
  int max_degree = 4;
  long long max_sequences = 1000000;
  long long max_graph_vertices = 200000;
};

// Computes the degree-indexed measures. Values are memoized per alpha-class,
// so one engine can be reused across many terms; every operation is
// deterministic and side-effect free apart from the cache.
class MeasureEngine {
 public:
  explicit MeasureEngine(MeasureBudget budget = {}) : budget_(budget) {}

  // Multiset of (d, bme(d, t0)) per redex of degree exactly d in t.
  AValue eme(int d, const TermPtr& t0, const TermPtr& t);
  // Sum of eme(i, t, t) for 1 <= i <= d.
  AValue ame(int d, const TermPtr& t);
  // One ame(d-1, target) per reduction sequence of degree d out of t
  // (including the empty one); multiplicities count sequences.
  BValue bme(int d, const TermPtr& t);
  // ame(maxdeg(M), M) for a pure typable term.
  AValue t_measure(const TermPtr& m);

  const MeasureBudget& budget() const { return budget_; }

 private:
  struct Key {
    int d;
    size_t hash;
    bool operator<(const Key& o) const { return d != o.d ? d < o.d : hash < o.hash; }
  };

  MeasureBudget budget_;
  std::map<Key, std::vector<std::pair<TermPtr, AValue>>> ame_memo_;
  std::map<Key, std::vector<std::pair<TermPtr, BValue>>> bme_memo_;
};

// Multiset of the degrees of all redexes (pure terms).
Multiset<int> turing_measure(const TermPtr& m);
// (max degree, number of redexes of that degree), ordered lexicographically.
std::pair<int, int> turing_measure_prime(const TermPtr& m);

// Degree-stratified variant: multiset of (d, strat(d-1, M)) per redex of
// degree d <= cap. Not a decreasing measure; kept for the counterexample
// where it fails to drop.
struct StratEntry;
struct StratValue {
  std::vector<StratEntry> items;  // sorted structurally
  bool operator==(const StratValue& o) const;
};
struct StratEntry {
  int degree = 0;
  StratValue sub;
};

StratValue turing_measure_stratified(int cap, const TermPtr& m);
std::string pretty(const StratValue& v);

// Among the redexes of maximal degree, the one whose position is rightmost.
// Pure reducible terms only (NormalForm otherwise); returns a Beta step.
Step rightmost_highest_strategy(const TermPtr& m);

}  // namespace deglab
