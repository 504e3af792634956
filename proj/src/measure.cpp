#include "deglab/measure.hpp"

#include <sstream>

#include "json.hpp"

#include "deglab/error.hpp"
#include "deglab/graph.hpp"
#include "deglab/parse.hpp"

namespace deglab {

// --- structural (total) order for canonical storage ---------------------------

int struct_cmp(const AItem& a, const AItem& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  return struct_cmp(a.b, b.b);
}

namespace {

template <class T>
int struct_cmp_vec(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); i++) {
    int c = struct_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

int struct_cmp(const AValue& a, const AValue& b) {
  return struct_cmp_vec(a.items.elems(), b.items.elems());
}

int struct_cmp(const BValue& a, const BValue& b) {
  return struct_cmp_vec(a.items.elems(), b.items.elems());
}

bool AValueLess::operator()(const AValue& a, const AValue& b) const { return struct_cmp(a, b) < 0; }
bool AItemLess::operator()(const AItem& a, const AItem& b) const { return struct_cmp(a, b) < 0; }

bool AValue::operator==(const AValue& o) const { return struct_cmp(*this, o) == 0; }
bool BValue::operator==(const BValue& o) const { return struct_cmp(*this, o) == 0; }

// --- semantic comparisons -------------------------------------------------------

PartialOrdering compare(const AItem& a, const AItem& b) {
  if (a.degree > b.degree) return PartialOrdering::Greater;
  if (a.degree < b.degree) return PartialOrdering::Less;
  return compare(a.b, b.b);
}

PartialOrdering compare(const AValue& a, const AValue& b) {
  return multiset_compare(a.items, b.items,
                          [](const AItem& x, const AItem& y) { return compare(x, y); });
}

PartialOrdering compare(const BValue& a, const BValue& b) {
  return multiset_compare(a.items, b.items,
                          [](const AValue& x, const AValue& y) { return compare(x, y); });
}

// --- rendering -------------------------------------------------------------------

std::string pretty(const BValue& b) {
  std::string out = "[";
  bool first = true;
  for (const AValue& a : b.items.elems()) {
    if (!first) out += ", ";
    first = false;
    out += pretty(a);
  }
  return out + "]";
}

std::string pretty(const AValue& a) {
  std::string out = "[";
  bool first = true;
  for (const AItem& it : a.items.elems()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(it.degree) + ", " + pretty(it.b) + ")";
  }
  return out + "]";
}

namespace {

nlohmann::json json_of(const AValue& a);

nlohmann::json json_of(const BValue& b) {
  nlohmann::json j = nlohmann::json::array();
  for (const AValue& a : b.items.elems()) j.push_back(json_of(a));
  return j;
}

nlohmann::json json_of(const AValue& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const AItem& it : a.items.elems()) j.push_back({it.degree, json_of(it.b)});
  return j;
}

}  // namespace

std::string measure_to_json(const AValue& a) { return json_of(a).dump(); }

// --- the measures -----------------------------------------------------------------

namespace {

// Structural recursion counting redex occurrences of degree exactly d,
// including those inside memories; the measure is that many copies of the
// same pair (d, bme(d, t0)).
int count_redexes_of_degree(const TermPtr& t, int d, std::vector<TypePtr>& binders) {
  switch (t->kind()) {
    case TermKind::FreeVar:
    case TermKind::BoundVar:
      return 0;
    case TermKind::Abs: {
      binders.push_back(t->binder_type());
      int n = count_redexes_of_degree(t->body(), d, binders);
      binders.pop_back();
      return n;
    }
    case TermKind::App: {
      int n = count_redexes_of_degree(t->fun(), d, binders) +
              count_redexes_of_degree(t->arg(), d, binders);
      if (split_m_abstraction(t->fun())) {
        TypePtr ft = type_of_under(t->fun(), binders);
        if (ft->height() == d) n += 1;
      }
      return n;
    }
    case TermKind::Wrap:
      return count_redexes_of_degree(t->wrap_body(), d, binders) +
             count_redexes_of_degree(t->mem(), d, binders);
  }
  return 0;
}

}  // namespace

AValue MeasureEngine::eme(int d, const TermPtr& t0, const TermPtr& t) {
  AValue out;
  if (d <= 0) return out;
  std::vector<TypePtr> binders;
  int k = count_redexes_of_degree(t, d, binders);
  if (k == 0) return out;
  AItem item{d, bme(d, t0)};
  for (int i = 0; i < k; i++) out.items.add(item);
  return out;
}

AValue MeasureEngine::ame(int d, const TermPtr& t) {
  if (d <= 0) return AValue{};
  Key key{d, t->alpha_hash()};
  for (const auto& [term, value] : ame_memo_[key])
    if (alpha_equal(term, t)) return value;
  AValue out;
  for (int i = 1; i <= d; i++) out.items = out.items + eme(i, t, t).items;
  ame_memo_[key].emplace_back(t, out);
  return out;
}

BValue MeasureEngine::bme(int d, const TermPtr& t) {
  if (d < 1) fail(Errc::DegreeZero, "bme is defined for degrees >= 1");
  Key key{d, t->alpha_hash()};
  for (const auto& [term, value] : bme_memo_[key])
    if (alpha_equal(term, t)) return value;

  ReductionGraph g;
  try {
    g = reduction_graph(t, d, budget_.max_graph_vertices);
  } catch (const Error& e) {
    if (e.code() == Errc::BudgetExceeded)
      fail(Errc::BudgetExceeded, "bme(" + std::to_string(d) + ", " + print_term(t) + "): " +
                                     e.what());
    throw;
  }
  std::vector<long long> cnt = path_counts_from(g, 0);
  long long total = 0;
  for (long long c : cnt) total += c;
  if (total > budget_.max_sequences)
    fail(Errc::BudgetExceeded, "bme(" + std::to_string(d) + ", " + print_term(t) + "): " +
                                   std::to_string(total) + " reduction sequences exceed the budget of " +
                                   std::to_string(budget_.max_sequences));

  BValue out;
  for (size_t v = 0; v < g.vertices().size(); v++) {
    if (cnt[v] == 0) continue;
    AValue a = ame(d - 1, g.vertices()[v]);
    for (long long i = 0; i < cnt[v]; i++) out.items.add(a);
  }
  bme_memo_[key].emplace_back(t, out);
  return out;
}

AValue MeasureEngine::t_measure(const TermPtr& m) {
  if (!m->is_pure()) fail(Errc::NotPure, "the nested-multiset measure is defined on pure terms");
  type_of(m);
  int d = maxdeg(m);
  if (d > budget_.max_degree)
    fail(Errc::BudgetExceeded, "refusing max degree " + std::to_string(d) + " > " +
                                   std::to_string(budget_.max_degree));
  return ame(d, m);
}

// --- Turing-style measures -----------------------------------------------------------

Multiset<int> turing_measure(const TermPtr& m) {
  if (!m->is_pure()) fail(Errc::NotPure, "the degree multiset is defined on pure terms");
  Multiset<int> out;
  for (const Step& s : enumerate_redexes(m)) out.add(s.degree);
  return out;
}

std::pair<int, int> turing_measure_prime(const TermPtr& m) {
  Multiset<int> degs = turing_measure(m);
  int d = 0, n = 0;
  for (int x : degs.elems()) {
    if (x > d) {
      d = x;
      n = 1;
    } else if (x == d && d > 0) {
      n++;
    }
  }
  return {d, n};
}

int struct_cmp(const StratValue& a, const StratValue& b);

int struct_cmp(const StratEntry& a, const StratEntry& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  return struct_cmp(a.sub, b.sub);
}

int struct_cmp(const StratValue& a, const StratValue& b) { return struct_cmp_vec(a.items, b.items); }

bool StratValue::operator==(const StratValue& o) const { return struct_cmp(*this, o) == 0; }

StratValue turing_measure_stratified(int cap, const TermPtr& m) {
  StratValue out;
  if (cap <= 0) return out;
  for (const Step& s : enumerate_redexes(m)) {
    if (s.degree > cap) continue;
    out.items.push_back(StratEntry{s.degree, turing_measure_stratified(s.degree - 1, m)});
  }
  std::sort(out.items.begin(), out.items.end(),
            [](const StratEntry& a, const StratEntry& b) { return struct_cmp(a, b) < 0; });
  return out;
}

std::string pretty(const StratValue& v) {
  std::string out = "[";
  bool first = true;
  for (const StratEntry& e : v.items) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(e.degree) + ", " + pretty(e.sub) + ")";
  }
  return out + "]";
}

Step rightmost_highest_strategy(const TermPtr& m) {
  std::vector<Step> steps = enumerate_beta_redexes(m);
  if (steps.empty()) fail(Errc::NormalForm, "term has no redexes");
  int top = 0;
  for (const Step& s : steps) top = std::max(top, s.degree);
  // Enumeration is position-ordered, so the last with maximal degree wins.
  for (size_t i = steps.size(); i-- > 0;)
    if (steps[i].degree == top) return steps[i];
  fail(Errc::NormalForm, "unreachable");
}

}  // namespace deglab
