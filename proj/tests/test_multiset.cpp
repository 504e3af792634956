#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "deglab/multiset.hpp"
#include "support/oracles.hpp"

using namespace deglab;

namespace {

PartialOrdering int_cmp(int a, int b) {
  return a > b ? PartialOrdering::Greater : a < b ? PartialOrdering::Less : PartialOrdering::Equal;
}

Multiset<int> ms(std::vector<int> v) { return Multiset<int>(std::move(v)); }

PartialOrdering cmp(const Multiset<int>& a, const Multiset<int>& b) {
  return multiset_compare(a, b, int_cmp);
}

// every multiset of size <= max_len over {0..max_val}
std::vector<std::vector<int>> all_multisets(int max_len, int max_val) {
  std::vector<std::vector<int>> out{{}};
  for (int len = 1; len <= max_len; len++) {
    std::function<void(std::vector<int>&, int)> go = [&](std::vector<int>& cur, int lo) {
      if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
      }
      for (int v = lo; v <= max_val; v++) {
        cur.push_back(v);
        go(cur, v);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    go(cur, 0);
  }
  return out;
}

}  // namespace

TEST_CASE("basic comparisons") {
  CHECK(cmp(ms({2}), ms({1, 1, 1})) == PartialOrdering::Greater);
  CHECK(cmp(ms({}), ms({})) == PartialOrdering::Equal);
  Multiset<int> m = ms({3, 1});
  Multiset<int> bigger = m;
  bigger.add(0);
  CHECK(cmp(bigger, m) == PartialOrdering::Greater);
  CHECK(cmp(m, bigger) == PartialOrdering::Less);
  CHECK(cmp(ms({1}), ms({2, 0})) == PartialOrdering::Less);
}

TEST_CASE("agreement with the closure oracle on all small integer multisets") {
  auto key = [](int x) { return std::to_string(x); };
  std::vector<std::vector<int>> all = all_multisets(4, 3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      PartialOrdering fast = cmp(ms(a), ms(b));
      PartialOrdering slow = oracles::closure_compare(a, b, int_cmp, key);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("k_times") {
  CHECK(k_times(0, ms({1, 2})).empty());
  CHECK(k_times(1, ms({1, 2})) == ms({1, 2}));
  CHECK(k_times(3, ms({5})) == ms({5, 5, 5}));
}

TEST_CASE("pointwise order") {
  CHECK(pointwise_greater(ms({3, 2}), ms({2, 1}), int_cmp));
  CHECK(pointwise_greater(ms({}), ms({}), int_cmp));
  CHECK(!pointwise_greater(ms({3}), ms({2, 1}), int_cmp));
  CHECK(!pointwise_greater(ms({2, 2}), ms({2, 1}), int_cmp));
  // matching has to cross: {3,2} vs {2,2} needs 3>2 and 2>... fails
  CHECK(!pointwise_greater(ms({3, 2}), ms({2, 2}), int_cmp));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; i++) {
    std::vector<int> base;
    int len = static_cast<int>(rng() % 5);
    for (int j = 0; j < len; j++) base.push_back(static_cast<int>(rng() % 4));
    std::vector<int> above;
    for (int x : base) above.push_back(x + 1 + static_cast<int>(rng() % 2));
    Multiset<int> m = ms(above), n = ms(base);
    CHECK(pointwise_greater(m, n, int_cmp));
    if (!n.empty()) CHECK(cmp(m, n) == PartialOrdering::Greater);
    for (long long k = 0; k <= 3; k++) {
      PartialOrdering pk = cmp(m, k_times(k, n));
      CHECK((pk == PartialOrdering::Greater || pk == PartialOrdering::Equal));
    }
  }
}

TEST_CASE("comparator is a strict partial order") {
  std::mt19937_64 rng(11);
  std::vector<Multiset<int>> pool;
  for (int i = 0; i < 40; i++) {
    std::vector<int> v;
    int len = static_cast<int>(rng() % 5);
    for (int j = 0; j < len; j++) v.push_back(static_cast<int>(rng() % 4));
    pool.push_back(ms(v));
  }
  for (const auto& a : pool) {
    CHECK(cmp(a, a) == PartialOrdering::Equal);
    for (const auto& b : pool) {
      PartialOrdering ab = cmp(a, b);
      CHECK(cmp(b, a) == flip(ab));
      for (const auto& c : pool) {
        if (ab == PartialOrdering::Greater && cmp(b, c) == PartialOrdering::Greater)
          CHECK(cmp(a, c) == PartialOrdering::Greater);
      }
    }
  }
}

TEST_CASE("nested values agree with the recursive oracle") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; i++) {
    AValue a = oracles::random_avalue(rng, 3, 2);
    AValue b = oracles::random_avalue(rng, 3, 2);
    CHECK(compare(a, b) == oracles::oracle_compare(a, b));
  }
}

TEST_CASE("multiset bookkeeping") {
  Multiset<int> m = ms({2, 1, 2});
  CHECK(m.size() == 3);
  CHECK(m.count(2) == 2);
  CHECK(m.count(5) == 0);
  CHECK((m + ms({1})).count(1) == 2);
  CHECK(m == ms({1, 2, 2}));
}
