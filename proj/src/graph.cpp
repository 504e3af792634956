#include "deglab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "deglab/error.hpp"
#include "deglab/parse.hpp"

namespace deglab {

int ReductionGraph::find(const TermPtr& t) const {
  auto [lo, hi] = index_.equal_range(t->alpha_hash());
  for (auto it = lo; it != hi; ++it)
    if (alpha_equal(verts_[it->second], t)) return it->second;
  return -1;
}

int ReductionGraph::add_vertex(const TermPtr& t) {
  int id = find(t);
  if (id >= 0) return id;
  id = static_cast<int>(verts_.size());
  verts_.push_back(t);
  index_.emplace(t->alpha_hash(), id);
  return id;
}

ReductionGraph reduction_graph(const TermPtr& t, std::optional<int> degree, long long budget) {
  ReductionGraph g;
  std::deque<int> work;
  work.push_back(g.add_vertex(t));
  size_t done = 0;
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    done++;
    TermPtr cur = g.vertices()[v];
    std::vector<Step> steps =
        degree ? enumerate_steps_of_degree(cur, *degree) : enumerate_redexes(cur);
    for (const Step& s : steps) {
      TermPtr tgt = apply_step(s);
      int before = static_cast<int>(g.vertices().size());
      int w = g.add_vertex(tgt);
      if (w == before) {
        if (static_cast<long long>(g.vertices().size()) > budget)
          fail(Errc::BudgetExceeded,
               "reduction graph exceeded " + std::to_string(budget) + " vertices");
        work.push_back(w);
      }
      g.add_edge(GraphEdge{v, w, s.degree, s.pos});
    }
  }
  (void)done;
  return g;
}

std::string graph_to_dot(const ReductionGraph& g) {
  std::ostringstream out;
  out << "digraph reduction {\n";
  for (size_t i = 0; i < g.vertices().size(); i++) {
    std::string label = print_term(g.vertices()[i]);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (const GraphEdge& e : g.edges())
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.degree << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const ReductionGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (size_t i = 0; i < g.vertices().size(); i++)
    j["vertices"].push_back({{"id", i}, {"term", print_term(g.vertices()[i])}});
  j["edges"] = nlohmann::json::array();
  for (const GraphEdge& e : g.edges())
    j["edges"].push_back(
        {{"from", e.from}, {"to", e.to}, {"degree", e.degree}, {"position", e.pos.str()}});
  return j.dump(2);
}

namespace {

// Topological order via DFS; empty result if cyclic.
std::vector<int> topo_order(const ReductionGraph& g) {
  size_t n = g.vertices().size();
  std::vector<std::vector<int>> out(n);
  for (size_t i = 0; i < g.edges().size(); i++) out[g.edges()[i].from].push_back(static_cast<int>(i));
  std::vector<int> state(n, 0), order;
  bool cyclic = false;
  std::function<void(int)> dfs = [&](int v) {
    if (cyclic || state[v] == 2) return;
    if (state[v] == 1) {
      cyclic = true;
      return;
    }
    state[v] = 1;
    for (int e : out[v]) dfs(g.edges()[e].to);
    state[v] = 2;
    order.push_back(v);
  };
  for (size_t v = 0; v < n; v++) dfs(static_cast<int>(v));
  if (cyclic) return {};
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

bool graph_is_acyclic(const ReductionGraph& g) {
  return !g.vertices().empty() && !topo_order(g).empty();
}

std::vector<long long> path_counts_from(const ReductionGraph& g, int src) {
  std::vector<int> order = topo_order(g);
  if (order.empty()) fail(Errc::BudgetExceeded, "path counting needs an acyclic graph");
  std::vector<long long> cnt(g.vertices().size(), 0);
  cnt[src] = 1;
  std::vector<std::vector<int>> out(g.vertices().size());
  for (size_t i = 0; i < g.edges().size(); i++) out[g.edges()[i].from].push_back(static_cast<int>(i));
  for (int v : order)
    for (int e : out[v]) cnt[g.edges()[e].to] += cnt[v];
  return cnt;
}

long long count_paths(const ReductionGraph& g, int from, int to) {
  return path_counts_from(g, from)[to];
}

std::vector<int> sink_vertices(const ReductionGraph& g) {
  std::vector<bool> has_out(g.vertices().size(), false);
  for (const GraphEdge& e : g.edges()) has_out[e.from] = true;
  std::vector<int> out;
  for (size_t i = 0; i < has_out.size(); i++)
    if (!has_out[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace deglab
