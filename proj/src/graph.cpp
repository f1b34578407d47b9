#include "kdmv/graph.hpp"

#include <algorithm>

#include "kdmv/errors.hpp"

namespace kdmv {

Graph::Graph(int n, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 0 || n > VertexSet::kMaxVertices)
    throw SizeError("graph order " + std::to_string(n) + " outside [0, " +
                    std::to_string(VertexSet::kMaxVertices) + "]");
  adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name) : Graph(n, std::move(name)) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw SpecError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::size() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw SpecError("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (adj_[v].empty()) return true;
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n, g.name().empty() ? std::string{} : "complement(" + g.name() + ")");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s, std::vector<int>* original) {
  std::vector<int> old = s.to_vector();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(old.size()); ++i) index[old[i]] = i;
  Graph h(static_cast<int>(old.size()));
  for (int i = 0; i < static_cast<int>(old.size()); ++i)
    for (int w : g.neighbors(old[i]) & s)
      if (index[w] > i) h.add_edge(i, index[w]);
  if (original) *original = std::move(old);
  return h;
}

VertexSet reachable(const Graph& g, int source, const VertexSet& allowed) {
  VertexSet seen;
  seen.set(source);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left.any()) {
    VertexSet comp = reachable(g, left.first(), left);
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable(g, 0, g.vertices()).count() == g.order();
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (!(s - g.closed_neighborhood(v)).empty()) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.order());
  for (int i = 0; i < g.order(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace kdmv
