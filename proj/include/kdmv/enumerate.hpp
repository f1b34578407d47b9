#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "kdmv/graph.hpp"

namespace kdmv {

/// Isomorphism-invariant hash from iterated color refinement. Equal graphs
/// up to relabeling hash equally; collisions are settled by are_isomorphic.
std::uint64_t refinement_hash(const Graph& g);

/// Backtracking isomorphism test guided by refinement colors.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Keeps one representative per isomorphism class, in insertion order.
class IsoClassSet {
 public:
  /// True if g was new (and stored).
  bool insert(const Graph& g);
  const std::vector<Graph>& graphs() const { return graphs_; }
  std::vector<Graph> take() { return std::move(graphs_); }

 private:
  std::vector<Graph> graphs_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

/// Decides whether joining a new vertex to `s` in g is admissible.
using ExtensionFilter = std::function<bool(const Graph& g, const VertexSet& s)>;

/// Adds one vertex to every graph of `base` in every admissible way and
/// keeps the non-isomorphic results that pass `accept`.
///
/// Generating connected classes of order n this way from the connected
/// classes of order n - 1 is complete: every connected graph has a vertex
/// whose removal leaves it connected (an end of a spanning-tree path).
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& base, const ExtensionFilter& admissible,
                                    const std::function<bool(const Graph&)>& accept = {});

/// All connected graphs of order n up to isomorphism (n <= 10 practical).
std::vector<Graph> connected_graphs(int n);
/// Trees of order n.
std::vector<Graph> trees(int n);
/// Connected graphs of order n with girth >= min_girth (forests included).
std::vector<Graph> connected_girth_at_least(int n, int min_girth);
/// Block graphs (connected, every block a clique) of order n.
std::vector<Graph> block_graphs(int n);

}  // namespace kdmv
