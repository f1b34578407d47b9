#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kdmv/vertex_set.hpp"

namespace kdmv {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bit-vector rows.
///
/// Rows are kept symmetric and loop-free; add_edge rejects self-loops and
/// out-of-range endpoints. Equality compares the labeled edge sets only, the
/// name is a display label.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::string name = {});
  Graph(int n, const std::vector<Edge>& edges, std::string name = {});

  int order() const { return n_; }
  int size() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const {
    VertexSet s = adj_[v];
    s.set(v);
    return s;
  }
  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const;
  int max_degree() const;
  bool has_isolated_vertex() const;

  VertexSet vertices() const { return VertexSet::full(n_); }
  std::vector<Edge> edges() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::string name_;
};

Graph complement(const Graph& g);

/// Subgraph induced by s, relabeled in increasing vertex order. When
/// `original` is given it receives new-index -> old-index.
Graph induced_subgraph(const Graph& g, const VertexSet& s, std::vector<int>* original = nullptr);

/// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertices reachable from `source` inside `allowed` (source always included).
VertexSet reachable(const Graph& g, int source, const VertexSet& allowed);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Vertex indices sorted by degree descending, ties by index.
std::vector<int> degree_order(const Graph& g);

}  // namespace kdmv
