#include "deglab/generate.hpp"

#include <random>

#include "deglab/error.hpp"
#include "deglab/reduction.hpp"

namespace deglab {

namespace {

struct Gen {
  std::mt19937_64 rng;
  int max_degree;

  explicit Gen(uint64_t seed, int max_degree) : rng(seed), max_degree(max_degree) {}

  int roll(int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }

  // Random type of height <= cap, biased toward base types.
  TypePtr random_type(int cap) {
    if (cap <= 0 || roll(100) < 55) return Type::base("0");
    TypePtr dom = random_type(cap - 1);
    TypePtr cod = random_type(cap - 1);
    return Type::arrow(dom, cod);
  }

  // Generates a term of the requested type; `binders` holds the types of the
  // enclosing abstractions (innermost last). Returns nullptr when the size
  // budget cannot accommodate the request.
  TermPtr gen(const TypePtr& want, std::vector<TypePtr>& binders, int budget) {
    if (budget <= 0) return nullptr;

    // Leaf: a variable of the right type, bound if possible, else a free
    // base-typed one.
    auto leaf = [&]() -> TermPtr {
      std::vector<int> hits;
      for (size_t i = 0; i < binders.size(); i++)
        if (type_equal(binders[binders.size() - 1 - i], want)) hits.push_back(static_cast<int>(i));
      if (!hits.empty() && roll(100) < 80) return Term::bound_var(hits[roll(static_cast<int>(hits.size()))]);
      if (want->is_base()) {
        static const char* names[] = {"a", "b", "c"};
        return Term::free_var(names[roll(3)], want);
      }
      if (!hits.empty()) return Term::bound_var(hits[0]);
      return nullptr;
    };

    int choice = roll(100);
    if (budget <= 2) {
      TermPtr v = leaf();
      if (v) return v;
    }

    // Make a redex: (\x:B. body) arg, with the abstraction's type kept
    // within the degree bound.
    if (choice < 35 && budget >= 4 && want->height() < max_degree) {
      TypePtr b = random_type(max_degree - 1);
      binders.push_back(b);
      TermPtr body = gen(want, binders, (budget - 2) / 2 + 1);
      binders.pop_back();
      TermPtr arg = body ? gen(b, binders, budget - 2 - body->node_count()) : nullptr;
      if (body && arg) return Term::app(Term::abs("x", b, body), arg);
    }

    // Abstraction when an arrow is wanted.
    if (want->is_arrow()) {
      binders.push_back(want->dom());
      TermPtr body = gen(want->cod(), binders, budget - 1);
      binders.pop_back();
      if (body) return Term::abs("x", want->dom(), body);
    }

    // Application at a random argument type.
    if (choice < 85 && budget >= 3 && want->height() < max_degree) {
      TypePtr b = random_type(max_degree - 1);
      TermPtr fun = gen(Type::arrow(b, want), binders, (budget - 1) / 2 + 1);
      TermPtr arg = fun ? gen(b, binders, budget - 1 - fun->node_count()) : nullptr;
      if (fun && arg) return Term::app(fun, arg);
    }

    return leaf();
  }
};

}  // namespace

std::vector<TermPtr> generate(const GenConfig& cfg) {
  Gen gen(cfg.seed, cfg.max_degree);
  std::vector<TermPtr> out;
  TypePtr base = Type::base("0");
  long long attempts = 0;
  const long long max_attempts = 2000LL * cfg.count + 1000;
  while (static_cast<int>(out.size()) < cfg.count) {
    if (++attempts > max_attempts)
      fail(Errc::GenerationExhausted, "could not generate " + std::to_string(cfg.count) +
                                          " terms within the size/degree bounds");
    std::vector<TypePtr> binders;
    TermPtr t = gen.gen(base, binders, cfg.max_size);
    if (!t || t->node_count() > cfg.max_size) continue;
    if (!is_typable(t)) continue;
    if (maxdeg(t) > cfg.max_degree) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace deglab
