#include "deglab/props.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "deglab/error.hpp"
#include "deglab/graph.hpp"
#include "deglab/parse.hpp"
#include "deglab/project.hpp"
#include "deglab/reduction.hpp"
#include "deglab/residual.hpp"
#include "deglab/simplify.hpp"

namespace deglab {

namespace {

struct RawEntry {
  const char* name;
  const char* text;
  const char* ctx;
};

// Small closed-form examples exercising every corner: wrappers, memories,
// duplication, erasure, degree-2 redexes.
const RawEntry kCorpus[] = {
    {"memory_intro", "(\\x:0->0. \\y:0. y[x (x z)]) (\\x:0. x) w", ""},
    {"dup_apply_const", "(\\x:0->0. x (x y)) (\\z:0. w)", ""},
    {"const_chain", "(\\z:0. w) ((\\z:0. w) y)", ""},
    {"copy_arg", "(\\x:0. y x x) ((\\x:0->0. x z) f)", "y:0->0->0, f:0->0"},
    {"copy_arg_reduct", "(\\x:0. y x x) (f z)", "y:0->0->0, f:0->0"},
    {"delta_w", "(\\x:0->0. x (x z)) (\\y:0. w)", ""},
    {"turing_trap", "(\\x:0. y x x) ((\\z:0. z) w)", "y:0->0->0"},
    {"id_chain", "(\\x:0. x) ((\\x:0. x) a)", ""},
    {"erase_arg", "(\\x:0. b) ((\\x:0. x) a)", ""},
    {"two_level", "(\\x:0->0. \\y:0. x y) (\\z:0. z) a", ""},
    {"wrap_chain", "x[x[y]][y[z]]", ""},
    {"shrink_abs", "(\\x:0. x[y[y]])[z[z]]", ""},
    {"wrapped_redex", "(\\x:0. x)[u] a", ""},
    {"memory_redex", "(\\x:0. b)[(\\y:0. y) c] a", ""},
};

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (const RawEntry& e : kCorpus) {
      TypeEnv ctx = parse_ctx(e.ctx);
      out.push_back(CorpusEntry{e.name, e.text, e.ctx, parse_term(e.text, ctx)});
    }
    return out;
  }();
  return corpus;
}

namespace {

// ---- shared helpers ----------------------------------------------------------

struct Suite {
  PropertyReport report;
  int case_index = 0;

  explicit Suite(std::string name) { report.suite = std::move(name); }

  void begin_case() {
    report.cases++;
    case_index++;
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) report.failures.push_back(PropFailure{case_index, what});
  }

  void skip_budget() { report.budget_skips++; }
};

std::vector<TermPtr> pure_corpus(const GenConfig& cfg) {
  std::vector<TermPtr> out;
  for (const CorpusEntry& e : builtin_corpus())
    if (e.term->is_pure()) out.push_back(e.term);
  for (const TermPtr& t : generate(cfg)) out.push_back(t);
  return out;
}

// Pure corpus plus wrapped terms, plus terms pushed a few ->g steps in so
// wrappers and memories actually occur.
std::vector<TermPtr> g_corpus(const GenConfig& cfg) {
  std::vector<TermPtr> out;
  for (const CorpusEntry& e : builtin_corpus()) out.push_back(e.term);
  std::mt19937_64 rng(cfg.seed ^ 0x5eedf00dULL);
  for (const TermPtr& t : generate(cfg)) {
    out.push_back(t);
    TermPtr cur = t;
    int hops = static_cast<int>(rng() % 3);
    for (int i = 0; i < hops; i++) {
      std::vector<Step> steps = enumerate_redexes(cur);
      if (steps.empty()) break;
      cur = apply_step(steps[rng() % steps.size()]);
    }
    if (!alpha_equal(cur, t)) out.push_back(cur);
  }
  return out;
}

std::vector<TermPtr> forget_closure_proper(const TermPtr& t) {
  std::vector<TermPtr> out, work{t};
  auto seen = [&](const TermPtr& u) {
    for (const TermPtr& v : out)
      if (alpha_equal(u, v)) return true;
    return false;
  };
  while (!work.empty()) {
    TermPtr cur = work.back();
    work.pop_back();
    for (const ForgetStep& f : enumerate_forget_steps(cur)) {
      TermPtr nxt = apply_forget(f);
      if (!seen(nxt)) {
        out.push_back(nxt);
        work.push_back(nxt);
      }
    }
  }
  return out;
}

ReductionSeq random_homog_seq(const TermPtr& t, int degree, int len, std::mt19937_64& rng) {
  ReductionSeq seq(t);
  for (int i = 0; i < len; i++) {
    std::vector<Step> steps = enumerate_steps_of_degree(seq.target(), degree);
    if (steps.empty()) break;
    seq.push(steps[rng() % steps.size()]);
  }
  return seq;
}

std::vector<int> degrees_present(const TermPtr& t) {
  std::vector<int> out;
  for (const Step& s : enumerate_redexes(t))
    if (std::find(out.begin(), out.end(), s.degree) == out.end()) out.push_back(s.degree);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- suites -------------------------------------------------------------------

PropertyReport suite_roundtrip(const GenConfig& cfg) {
  Suite s("roundtrip");
  for (const CorpusEntry& e : builtin_corpus()) {
    s.begin_case();
    TypeEnv ctx = parse_ctx(e.ctx);
    TermPtr again = parse_term(print_term(e.term), ctx);
    s.expect(alpha_equal(e.term, again), e.name + ": parse(print(t)) != t");
    s.expect(print_term(again) == print_term(e.term), e.name + ": print not idempotent");
  }
  for (const TermPtr& t : g_corpus(cfg)) {
    s.begin_case();
    TermPtr again = parse_term(print_term(t), free_context(t));
    s.expect(alpha_equal(t, again), "parse(print(t)) != t for " + print_term(t));
  }
  return s.report;
}

PropertyReport suite_subject_reduction(const GenConfig& cfg) {
  Suite s("subject-reduction");
  for (const TermPtr& t : g_corpus(cfg)) {
    TypePtr ty = type_of(t);
    for (const Step& st : enumerate_redexes(t)) {
      s.begin_case();
      s.expect(type_equal(ty, type_of(apply_step(st))),
               "reduction changed the type of " + print_term(t));
    }
    for (const ForgetStep& f : enumerate_forget_steps(t)) {
      s.begin_case();
      s.expect(type_equal(ty, type_of(apply_forget(f))),
               "forgetting changed the type of " + print_term(t));
    }
  }
  return s.report;
}

PropertyReport suite_weight_increase(const GenConfig& cfg) {
  Suite s("weight-increase");
  for (const TermPtr& t : g_corpus(cfg)) {
    for (const Step& st : enumerate_redexes(t)) {
      s.begin_case();
      TermPtr tgt = apply_step(st);
      s.expect(tgt->weight() > t->weight(), "weight did not increase on " + print_term(t));
      TermPtr red = subterm_at(t, st.pos);
      auto ma = split_m_abstraction(red->fun());
      int k = 0;
      std::function<void(const TermPtr&, int)> count = [&](const TermPtr& u, int depth) {
        switch (u->kind()) {
          case TermKind::BoundVar:
            if (u->index() == depth) k++;
            return;
          case TermKind::FreeVar:
            return;
          case TermKind::Abs:
            count(u->body(), depth + 1);
            return;
          case TermKind::App:
            count(u->fun(), depth);
            count(u->arg(), depth);
            return;
          case TermKind::Wrap:
            count(u->wrap_body(), depth);
            count(u->mem(), depth);
            return;
        }
      };
      count(ma->abs->body(), 0);
      s.expect(tgt->weight() == t->weight() + 1 + k * red->arg()->weight(),
               "weight bookkeeping wrong on " + print_term(t));
    }
  }
  return s.report;
}

PropertyReport suite_creation_bound(const GenConfig& cfg) {
  Suite s("creation-bound");
  for (const TermPtr& t : g_corpus(cfg)) {
    std::vector<Step> all = enumerate_redexes(t);
    for (const Step& st : all) {
      s.begin_case();
      std::vector<Position> tracked;
      std::vector<int> tracked_degree;
      for (const Step& other : all) {
        if (other.pos == st.pos) continue;
        if (other.degree >= st.degree) {
          tracked.push_back(other.pos);
          tracked_degree.push_back(other.degree);
        }
      }
      TermPtr tgt = apply_step(st);
      auto buckets = residuals_after_step(st, tracked);
      std::vector<Position> covered;
      for (size_t i = 0; i < buckets.size(); i++) {
        for (const Position& p : buckets[i]) {
          covered.push_back(p);
          Step r = make_step(tgt, p, StepKind::G);
          s.expect(r.degree == tracked_degree[i], "a residual changed degree in " + print_term(t));
        }
      }
      for (const Step& r : enumerate_redexes(tgt)) {
        if (r.degree < st.degree) continue;
        s.expect(std::find(covered.begin(), covered.end(), r.pos) != covered.end(),
                 "created redex of degree " + std::to_string(r.degree) +
                     " >= " + std::to_string(st.degree) + " in " + print_term(t));
      }
    }
    // Simplification pushes the max degree strictly down.
    int d = maxdeg(t);
    if (d >= 1) {
      s.begin_case();
      s.expect(maxdeg(simp_d(t, d)) < d, "simp did not drop maxdeg of " + print_term(t));
      s.expect(maxdeg(simp_d(t, d + 1)) <= d, "simp at d+1 raised maxdeg of " + print_term(t));
    }
  }
  return s.report;
}

PropertyReport suite_normalization(const GenConfig& cfg, const MeasureBudget& budget) {
  Suite s("normalization");
  for (const TermPtr& t : g_corpus(cfg)) {
    s.begin_case();
    TermPtr nf = simpfull(t);
    s.expect(is_g_normal(nf), "simpfull is not normal for " + print_term(t));
    ReductionSeq wit = simpfull_witness(t);
    s.expect(alpha_equal(wit.source(), t) && alpha_equal(wit.target(), nf),
             "witness sequence does not reach simpfull for " + print_term(t));
    try {
      ReductionGraph g = reduction_graph(t, std::nullopt, budget.max_graph_vertices);
      std::vector<int> sinks = sink_vertices(g);
      s.expect(sinks.size() == 1, "reduction graph has " + std::to_string(sinks.size()) +
                                      " normal forms for " + print_term(t));
      if (sinks.size() == 1)
        s.expect(alpha_equal(g.vertices()[sinks[0]], nf),
                 "exhaustive normal form differs from simpfull for " + print_term(t));
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) s.skip_budget();
      else throw;
    }
  }
  return s.report;
}

PropertyReport suite_simp_develop_agree(const GenConfig& cfg) {
  Suite s("simp-develop-agree");
  for (const TermPtr& t : g_corpus(cfg)) {
    int top = maxdeg(t);
    for (int d = 1; d <= top; d++) {
      s.begin_case();
      TermPtr via_simp = simp_d(t, d);
      ReductionSeq wit = simp_d_witness(t, d);
      s.expect(alpha_equal(wit.target(), via_simp),
               "development of all degree-" + std::to_string(d) +
                   " redexes differs from simp for " + print_term(t));
      s.expect(alpha_equal(wit.source(), t), "witness has wrong source");
      auto deg = wit.uniform_degree();
      s.expect(deg && (*deg == d || wit.empty()), "witness mixes degrees");
      s.expect(enumerate_steps_of_degree(via_simp, d).empty(),
               "degree-" + std::to_string(d) + " redexes survive simp of " + print_term(t));
    }
  }
  return s.report;
}

PropertyReport suite_simp_invariance(const GenConfig& cfg) {
  Suite s("simp-invariance");
  for (const TermPtr& t : g_corpus(cfg)) {
    TermPtr nf = simpfull(t);
    for (const Step& st : enumerate_redexes(t)) {
      s.begin_case();
      s.expect(alpha_equal(nf, simpfull(apply_step(st))),
               "simpfull not invariant under reduction of " + print_term(t));
    }
    std::vector<TermPtr> shrunk = forget_closure_proper(t);
    for (const TermPtr& u : shrunk) {
      s.begin_case();
      s.expect(u->weight() < t->weight(), "forgetting did not drop weight of " + print_term(t));
      TermPtr unf = simpfull(u);
      bool found = alpha_equal(nf, unf);
      if (!found) {
        for (const TermPtr& v : forget_closure_proper(nf))
          if (alpha_equal(v, unf)) {
            found = true;
            break;
          }
        s.expect(found, "simpfull not monotone under forgetting of " + print_term(t));
      } else {
        s.expect(false, "forgetting left simpfull unchanged for " + print_term(t));
      }
    }
  }
  return s.report;
}

PropertyReport suite_forget_commute(const GenConfig& cfg) {
  Suite s("forget-commute");
  for (const TermPtr& t : g_corpus(cfg)) {
    std::vector<ForgetStep> forgets = enumerate_forget_steps(t);
    std::vector<Step> steps = enumerate_redexes(t);
    if (steps.empty()) {
      for (const ForgetStep& f : forgets) {
        s.begin_case();
        s.expect(is_g_normal(apply_forget(f)),
                 "forgetting broke normality of " + print_term(t));
      }
      continue;
    }
    for (const ForgetStep& f : forgets) {
      TermPtr sh = apply_forget(f);
      for (const Step& g : steps) {
        s.begin_case();
        TermPtr red = apply_step(g);
        // Close the square: red |>+ s' and sh ->g= s'.
        std::vector<TermPtr> down = forget_closure_proper(red);
        std::vector<TermPtr> across{sh};
        for (const Step& g2 : enumerate_redexes(sh)) across.push_back(apply_step(g2));
        bool ok = false;
        for (const TermPtr& a : down) {
          for (const TermPtr& b : across)
            if (alpha_equal(a, b)) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        s.expect(ok, "forget/reduce square does not close for " + print_term(t));
      }
    }
  }
  return s.report;
}

PropertyReport suite_reduce_forget(const GenConfig& cfg) {
  Suite s("reduce-forget");
  for (const TermPtr& t : pure_corpus(cfg)) {
    for (const Step& beta : enumerate_beta_redexes(t)) {
      s.begin_case();
      Step g = corresponding_step(beta);
      TermPtr tg = apply_step(g);
      TermPtr tb = apply_step(beta);
      TermPtr forgotten = apply_forget(make_forget(tg, beta.pos));
      s.expect(alpha_equal(forgotten, tb),
               "corresponding step does not forget to the beta target for " + print_term(t));
    }
  }
  return s.report;
}

PropertyReport suite_w_decrease(const GenConfig& cfg) {
  Suite s("w-decrease");
  for (const TermPtr& t : pure_corpus(cfg)) {
    long long wt = w_measure(t);
    for (const Step& beta : enumerate_beta_redexes(t)) {
      s.begin_case();
      long long wn = w_measure(apply_step(beta));
      s.expect(wt > wn, "W did not decrease: " + print_term(t) + " at " + beta.pos.str() + " (" +
                            std::to_string(wt) + " vs " + std::to_string(wn) + ")");
    }
  }
  return s.report;
}

PropertyReport suite_t_decrease(const GenConfig& cfg, const MeasureBudget& budget) {
  Suite s("t-decrease");
  MeasureEngine engine(budget);
  for (const TermPtr& t : pure_corpus(cfg)) {
    for (const Step& beta : enumerate_beta_redexes(t)) {
      s.begin_case();
      try {
        AValue m = engine.t_measure(t);
        TermPtr n = apply_step(beta);
        AValue mn = engine.t_measure(n);
        PartialOrdering cmp = compare(m, mn);
        s.expect(cmp == PartialOrdering::Greater,
                 "nested measure comparison is " + std::string(to_string(cmp)) + " for " +
                     print_term(t) + " at " + beta.pos.str());
        s.expect(maxdeg(t) >= maxdeg(n), "beta step raised maxdeg of " + print_term(t));
      } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded) s.skip_budget();
        else throw;
      }
    }
  }
  return s.report;
}

PropertyReport suite_turing_strategy(const GenConfig& cfg) {
  Suite s("turing-strategy");
  for (const TermPtr& t0 : pure_corpus(cfg)) {
    s.begin_case();
    TermPtr cur = t0;
    int fuel = 500;
    while (!enumerate_beta_redexes(cur).empty()) {
      if (--fuel < 0) {
        s.expect(false, "strategy did not normalize " + print_term(t0));
        break;
      }
      Step st = rightmost_highest_strategy(cur);
      TermPtr nxt = apply_step(st);
      PartialOrdering cmp =
          multiset_compare(turing_measure(cur), turing_measure(nxt),
                           [](int a, int b) {
                             return a > b   ? PartialOrdering::Greater
                                    : a < b ? PartialOrdering::Less
                                            : PartialOrdering::Equal;
                           });
      if (cmp != PartialOrdering::Greater) {
        s.expect(false, "degree multiset did not drop along the strategy at " + print_term(cur));
        break;
      }
      cur = nxt;
    }
  }
  return s.report;
}

PropertyReport suite_turing_counterexample(const GenConfig&) {
  Suite s("turing-counterexample");
  s.begin_case();
  TypeEnv ctx = parse_ctx("y:0->0->0");
  TermPtr m = parse_term("(\\x:0. y x x) ((\\z:0. z) w)", ctx);
  Step outer = make_step(m, Position{}, StepKind::Beta);
  TermPtr n = apply_step(outer);
  s.expect(alpha_equal(n, parse_term("y ((\\z:0. z) w) ((\\z:0. z) w)", ctx)),
           "unexpected reduct in the counterexample");
  s.expect(turing_measure(m) == turing_measure(n), "plain degree multisets should coincide");
  s.expect(turing_measure_stratified(1, m) == turing_measure_stratified(1, n),
           "stratified degree measures should coincide");
  s.expect(w_measure(m) > w_measure(n), "W must still decrease on the counterexample");
  MeasureEngine engine;
  s.expect(compare(engine.t_measure(m), engine.t_measure(n)) == PartialOrdering::Greater,
           "nested measure must still decrease on the counterexample");
  return s.report;
}

PropertyReport suite_commutation(const GenConfig& cfg, const MeasureBudget& budget) {
  Suite s("commutation");
  std::mt19937_64 rng(cfg.seed ^ 0xc0117eULL);
  std::vector<TermPtr> corpus = g_corpus(cfg);
  for (const TermPtr& t : corpus) {
    std::vector<int> degs = degrees_present(t);
    if (degs.empty()) continue;
    for (int d : degs) {
      for (int e : degs) {
        s.begin_case();
        ReductionSeq rho = random_homog_seq(t, d, 1 + static_cast<int>(rng() % 2), rng);
        ReductionSeq sigma = random_homog_seq(t, e, 1 + static_cast<int>(rng() % 2), rng);
        auto [rs, sr] = project_seq(rho, sigma);
        s.expect(alpha_equal(rs.source(), sigma.target()) &&
                     alpha_equal(sr.source(), rho.target()) &&
                     alpha_equal(rs.target(), sr.target()),
                 "projection legs do not close for " + print_term(t));
        if (d != e)
          s.expect(rs.size() >= rho.size(),
                   "projection lost steps (" + std::to_string(rs.size()) + " < " +
                       std::to_string(rho.size()) + ") for " + print_term(t));
        auto check_deg = [&](const ReductionSeq& q, int want) {
          auto u = q.uniform_degree();
          return u && (q.empty() || *u == want);
        };
        s.expect(check_deg(rs, d) && check_deg(sr, e), "projection mixed degrees");
        // The joint target must be a genuine join, reachable from both ends.
        try {
          ReductionGraph g = reduction_graph(t, std::nullopt, budget.max_graph_vertices);
          int vj = g.find(rs.target());
          int v2 = g.find(rho.target());
          int v3 = g.find(sigma.target());
          s.expect(vj >= 0 && v2 >= 0 && v3 >= 0, "projection left the reduction graph");
          if (vj >= 0 && v2 >= 0 && v3 >= 0) {
            s.expect(count_paths(g, v2, vj) > 0 && count_paths(g, v3, vj) > 0,
                     "projected target is not a reachable join for " + print_term(t));
          }
        } catch (const Error& err) {
          if (err.code() == Errc::BudgetExceeded) s.skip_budget();
          else throw;
        }
      }
    }
    // Injectivity of rho -> rho/sigma for distinct rho of equal degree d != e.
    if (degs.size() >= 2) {
      s.begin_case();
      int d = degs[0], e = degs[1];
      std::vector<Step> opts = enumerate_steps_of_degree(t, d);
      if (opts.size() >= 2) {
        ReductionSeq r1(t), r2(t);
        r1.push(opts[0]);
        r2.push(opts[1]);
        ReductionSeq sigma = random_homog_seq(t, e, 1, rng);
        if (!sigma.empty()) {
          auto [p1, q1] = project_seq(r1, sigma);
          auto [p2, q2] = project_seq(r2, sigma);
          s.expect(!seq_equal(p1, p2),
                   "projection identified distinct reductions for " + print_term(t));
        }
      }
    }
  }
  return s.report;
}

PropertyReport suite_lifting(const GenConfig& cfg, const MeasureBudget& budget) {
  Suite s("lifting");
  std::mt19937_64 rng(cfg.seed ^ 0x11f7ULL);
  for (const TermPtr& t : g_corpus(cfg)) {
    std::vector<int> degs = degrees_present(t);
    if (degs.size() < 2) continue;
    int d = degs.front();
    for (int upper : degs) {
      if (upper <= d) continue;
      for (const Step& r : enumerate_steps_of_degree(t, d)) {
        s.begin_case();
        ReductionSeq sigma =
            random_homog_seq(apply_step(r), upper, static_cast<int>(rng() % 3), rng);
        LiftWitness w = lift_lower_step(r, sigma, upper);
        s.expect(alpha_equal(w.to_simp.source(), t), "lift starts in the wrong place");
        s.expect(alpha_equal(w.to_simp.target(), simp_d(t, upper)),
                 "lift does not pass through the simplification of " + print_term(t));
        s.expect(!w.lower.empty(), "lift produced an empty lower leg");
        s.expect(alpha_equal(w.lower.source(), w.to_simp.target()) &&
                     alpha_equal(w.upper.source(), sigma.target()) &&
                     alpha_equal(w.lower.target(), w.upper.target()),
                 "lift legs do not close for " + print_term(t));
        try {
          ReductionGraph g = reduction_graph(t, std::nullopt, budget.max_graph_vertices);
          int vj = g.find(w.lower.target());
          s.expect(vj >= 0, "lift target is outside the reduction graph");
        } catch (const Error& err) {
          if (err.code() == Errc::BudgetExceeded) s.skip_budget();
          else throw;
        }
      }
    }
  }
  return s.report;
}

PropertyReport suite_postponement(const GenConfig& cfg) {
  Suite s("postponement");
  std::mt19937_64 rng(cfg.seed ^ 0xf02e7ULL);
  for (const TermPtr& t : g_corpus(cfg)) {
    if (t->weight() == 0) continue;
    // Random forgetful prefix.
    ForgetSeq rho(t);
    int hops = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < hops; i++) {
      std::vector<ForgetStep> fs = enumerate_forget_steps(rho.target());
      if (fs.empty()) break;
      rho.push(fs[rng() % fs.size()]);
    }
    if (rho.empty()) continue;
    std::vector<int> degs = degrees_present(rho.target());
    if (degs.empty()) continue;
    for (int d : degs) {
      s.begin_case();
      ReductionSeq sigma = random_homog_seq(rho.target(), d, 1 + static_cast<int>(rng() % 2), rng);
      if (sigma.empty()) continue;
      auto [retr, prot] = postpone_forget(rho, sigma);
      s.expect(retr.size() == sigma.size(), "retraction changed length");
      s.expect(alpha_equal(retr.source(), t) && alpha_equal(prot.source(), retr.target()) &&
                   alpha_equal(prot.target(), sigma.target()),
               "postponement legs do not close for " + print_term(t));
      auto u = retr.uniform_degree();
      s.expect(u && *u == d, "retraction mixed degrees");

      // Cross-check against an exhaustive search of all |sigma|-step
      // degree-d reductions from t.
      bool found = false;
      std::function<void(ReductionSeq)> dfs = [&](ReductionSeq cur) {
        if (found) return;
        if (cur.size() == sigma.size()) {
          if (seq_equal(cur, retr)) found = true;
          return;
        }
        for (const Step& st : enumerate_steps_of_degree(cur.target(), d)) {
          ReductionSeq next = cur;
          next.push(st);
          dfs(std::move(next));
          if (found) return;
        }
      };
      dfs(ReductionSeq(t));
      s.expect(found, "retraction is not one of the reachable factorizations");

      // Injectivity: a different sigma retracts differently.
      std::vector<Step> alts = enumerate_steps_of_degree(rho.target(), d);
      for (const Step& alt : alts) {
        if (step_equal(alt, sigma.steps().front())) continue;
        ReductionSeq sigma2(rho.target());
        sigma2.push(alt);
        auto [retr2, prot2] = postpone_forget(rho, sigma2);
        ReductionSeq head(t);
        head.push(retr.steps().front());
        s.expect(!seq_equal(head, retr2) || sigma.size() > 1,
                 "distinct reductions retracted identically for " + print_term(t));
        break;
      }
    }
  }
  return s.report;
}

PropertyReport suite_measure_lemmas(const GenConfig& cfg, const MeasureBudget& budget) {
  Suite s("measure-lemmas");
  MeasureEngine engine(budget);
  GenConfig small = cfg;
  small.count = std::min(cfg.count, 30);
  small.max_size = std::min(cfg.max_size, 9);
  auto leq = [](PartialOrdering p) {
    return p == PartialOrdering::Less || p == PartialOrdering::Equal;
  };
  auto geq = [](PartialOrdering p) {
    return p == PartialOrdering::Greater || p == PartialOrdering::Equal;
  };
  std::vector<TermPtr> corpus;
  for (const CorpusEntry& e : builtin_corpus()) corpus.push_back(e.term);
  for (const TermPtr& t : generate(small)) corpus.push_back(t);

  for (const TermPtr& t : corpus) {
    int top = maxdeg(t);
    if (top == 0) continue;
    for (const Step& st : enumerate_redexes(t)) {
      TermPtr tgt = apply_step(st);
      int dd = st.degree;
      try {
        // Contracting a higher degree cannot drop the lower-degree measures.
        for (int d = 0; d < dd; d++) {
          s.begin_case();
          s.expect(leq(compare(engine.ame(d, t), engine.ame(d, tgt))),
                   "ame(" + std::to_string(d) + ") dropped under a degree-" + std::to_string(dd) +
                       " step of " + print_term(t));
          if (d >= 1)
            s.expect(leq(compare(engine.bme(d, t), engine.bme(d, tgt))),
                     "low bme dropped under a higher step of " + print_term(t));
        }
        // Contracting degree d strictly drops bme(j, -) for j >= d and ame(D, -).
        for (int j = dd; j <= top; j++) {
          s.begin_case();
          s.expect(compare(engine.bme(j, t), engine.bme(j, tgt)) == PartialOrdering::Greater,
                   "bme(" + std::to_string(j) + ") did not drop for " + print_term(t));
        }
        s.begin_case();
        int cap = std::max(top, dd);
        s.expect(compare(engine.ame(cap, t), engine.ame(cap, tgt)) == PartialOrdering::Greater,
                 "ame did not drop for " + print_term(t));
        // eme with a reduced first argument is pointwise strictly below.
        for (int j = dd; j <= top; j++) {
          s.begin_case();
          AValue left = engine.eme(j, t, t);
          AValue right = engine.eme(j, tgt, t);
          s.expect(pointwise_greater(left.items, right.items,
                                     [](const AItem& a, const AItem& b) { return compare(a, b); }),
                   "eme is not pointwise monotone in its first argument");
          s.expect(left.items.size() == right.items.size(), "eme changed cardinality");
        }
      } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded) {
          s.skip_budget();
          continue;
        }
        throw;
      }
    }
    // Forgetting never raises the measure.
    for (const ForgetStep& f : enumerate_forget_steps(t)) {
      TermPtr tgt = apply_forget(f);
      try {
        for (int d = 0; d <= top; d++) {
          s.begin_case();
          s.expect(geq(compare(engine.ame(d, t), engine.ame(d, tgt))),
                   "forgetting raised ame of " + print_term(t));
        }
      } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded) {
          s.skip_budget();
          continue;
        }
        throw;
      }
    }
  }

  // Substitution: for s of base type (never an m-abstraction), substitution
  // adds exactly k copies of the argument's measure.
  std::vector<TermPtr> subjects = generate(small);
  for (size_t i = 0; i + 1 < subjects.size(); i += 2) {
    const TermPtr& t = subjects[i];
    const TermPtr& arg = subjects[i + 1];
    int k = count_free_occurrences(t, "a");
    if (k == 0) continue;
    TermPtr substituted = subst_free(t, "a", arg);
    try {
      for (int d = 1; d <= 2; d++) {
        s.begin_case();
        AValue lhs = engine.eme(d, t, substituted);
        AValue rhs = engine.eme(d, t, t);
        AValue argm = engine.eme(d, t, arg);
        AValue sum;
        sum.items = rhs.items + k_times(k, argm.items);
        s.expect(lhs == sum, "substitution identity failed at degree " + std::to_string(d) +
                                 " for " + print_term(t));
        s.expect(leq(compare(rhs, lhs)), "substitution dropped the measure");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) {
        s.skip_budget();
        continue;
      }
      throw;
    }
  }
  return s.report;
}

PropertyReport suite_multiset_props(const GenConfig& cfg) {
  Suite s("multiset-props");
  std::mt19937_64 rng(cfg.seed ^ 0x3417ULL);
  auto int_cmp = [](int a, int b) {
    return a > b   ? PartialOrdering::Greater
           : a < b ? PartialOrdering::Less
                   : PartialOrdering::Equal;
  };
  auto random_ms = [&](int max_len, int max_val) {
    Multiset<int> m;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; i++) m.add(static_cast<int>(rng() % (max_val + 1)));
    return m;
  };

  for (int i = 0; i < 300; i++) {
    s.begin_case();
    Multiset<int> m = random_ms(4, 3), n = random_ms(4, 3);
    PartialOrdering mn = multiset_compare(m, n, int_cmp);
    PartialOrdering nm = multiset_compare(n, m, int_cmp);
    s.expect(nm == flip(mn), "comparison is not antisymmetric");
    s.expect(multiset_compare(m, m, int_cmp) == PartialOrdering::Equal,
             "comparison is not reflexive-equal");
    // Adding an element strictly grows the multiset.
    Multiset<int> bigger = m;
    bigger.add(static_cast<int>(rng() % 4));
    s.expect(multiset_compare(bigger, m, int_cmp) == PartialOrdering::Greater,
             "m + [x] must dominate m");
    // Pointwise implies the multiset order, for nonempty m.
    if (!n.empty()) {
      Multiset<int> above;
      for (int x : n.elems()) above.add(x + 1 + static_cast<int>(rng() % 2));
      s.expect(pointwise_greater(above, n, int_cmp), "constructed pointwise pair must compare");
      s.expect(multiset_compare(above, n, int_cmp) == PartialOrdering::Greater,
               "pointwise order must imply the multiset order");
      for (long long k = 0; k <= 3; k++) {
        PartialOrdering pk = multiset_compare(above, k_times(k, n), int_cmp);
        s.expect(pk == PartialOrdering::Greater || pk == PartialOrdering::Equal,
                 "m :>: n must give m >= k*n");
      }
    }
  }
  // Transitivity over a pooled sample.
  std::vector<Multiset<int>> pool;
  for (int i = 0; i < 12; i++) pool.push_back(random_ms(3, 3));
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool) {
        if (multiset_compare(a, b, int_cmp) == PartialOrdering::Greater &&
            multiset_compare(b, c, int_cmp) == PartialOrdering::Greater) {
          s.begin_case();
          s.expect(multiset_compare(a, c, int_cmp) == PartialOrdering::Greater,
                   "comparison is not transitive");
        }
      }
  // k_times base cases.
  s.begin_case();
  Multiset<int> m(std::vector<int>{1, 2});
  s.expect(k_times(0, m).empty(), "0*m must be empty");
  s.expect(k_times(1, m) == m, "1*m must be m");
  s.expect(k_times(3, Multiset<int>(std::vector<int>{5})) ==
               Multiset<int>(std::vector<int>{5, 5, 5}),
           "3*[5] must be [5,5,5]");
  return s.report;
}

PropertyReport suite_generator(const GenConfig& cfg) {
  Suite s("generator");
  s.begin_case();
  std::vector<TermPtr> a = generate(cfg), b = generate(cfg);
  s.expect(a.size() == b.size() && static_cast<int>(a.size()) == cfg.count,
           "generator must honor count");
  for (size_t i = 0; i < std::min(a.size(), b.size()); i++) {
    s.expect(alpha_equal(a[i], b[i]), "generator must be deterministic in the seed");
  }
  for (const TermPtr& t : a) {
    s.begin_case();
    s.expect(t->is_pure(), "generated term is not pure");
    s.expect(t->node_count() <= cfg.max_size, "generated term exceeds max size");
    s.expect(is_typable(t), "generated term is untypable");
    s.expect(maxdeg(t) <= cfg.max_degree, "generated term exceeds max degree");
    s.expect(type_of(t)->is_base(), "generated term is not of base type");
  }
  s.begin_case();
  GenConfig tiny = cfg;
  tiny.max_size = 1;
  tiny.count = 5;
  for (const TermPtr& t : generate(tiny))
    s.expect(t->kind() == TermKind::FreeVar, "size-1 terms must be variables");
  return s.report;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"roundtrip",      "subject-reduction", "weight-increase",
          "creation-bound", "normalization",     "simp-develop-agree",
          "simp-invariance", "forget-commute",   "reduce-forget",
          "w-decrease",     "t-decrease",        "turing-strategy",
          "turing-counterexample", "commutation", "lifting",
          "postponement",   "measure-lemmas",    "multiset-props",
          "generator"};
}

PropertyReport run_suite(const std::string& name, const GenConfig& cfg,
                         const MeasureBudget& budget) {
  if (name == "roundtrip") return suite_roundtrip(cfg);
  if (name == "subject-reduction") return suite_subject_reduction(cfg);
  if (name == "weight-increase") return suite_weight_increase(cfg);
  if (name == "creation-bound") return suite_creation_bound(cfg);
  if (name == "normalization") return suite_normalization(cfg, budget);
  if (name == "simp-develop-agree") return suite_simp_develop_agree(cfg);
  if (name == "simp-invariance") return suite_simp_invariance(cfg);
  if (name == "forget-commute") return suite_forget_commute(cfg);
  if (name == "reduce-forget") return suite_reduce_forget(cfg);
  if (name == "w-decrease") return suite_w_decrease(cfg);
  if (name == "t-decrease") return suite_t_decrease(cfg, budget);
  if (name == "turing-strategy") return suite_turing_strategy(cfg);
  if (name == "turing-counterexample") return suite_turing_counterexample(cfg);
  if (name == "commutation") return suite_commutation(cfg, budget);
  if (name == "lifting") return suite_lifting(cfg, budget);
  if (name == "postponement") return suite_postponement(cfg);
  if (name == "measure-lemmas") return suite_measure_lemmas(cfg, budget);
  if (name == "multiset-props") return suite_multiset_props(cfg);
  if (name == "generator") return suite_generator(cfg);
  fail(Errc::SyntaxError, "unknown suite '" + name + "'");
}

std::vector<PropertyReport> run_all_suites(const GenConfig& cfg, const MeasureBudget& budget) {
  std::vector<PropertyReport> out;
  for (const std::string& n : suite_names()) out.push_back(run_suite(n, cfg, budget));
  return out;
}

std::string format_report(const PropertyReport& r, bool verbose) {
  std::ostringstream out;
  out << (r.ok() ? "ok   " : "FAIL ") << r.suite << ": " << r.cases << " cases, "
      << r.failures.size() << " failures";
  if (r.budget_skips > 0) out << ", " << r.budget_skips << " budget skips";
  if (verbose || !r.ok()) {
    size_t shown = 0;
    for (const PropFailure& f : r.failures) {
      out << "\n  case " << f.case_index << ": " << f.what;
      if (++shown >= 10 && r.failures.size() > shown) {
        out << "\n  ... " << (r.failures.size() - shown) << " more";
        break;
      }
    }
  }
  return out.str();
}

}  // namespace deglab
