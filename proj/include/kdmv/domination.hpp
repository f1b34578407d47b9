#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kdmv/coloring.hpp"
#include "kdmv/graph.hpp"

namespace kdmv {

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_total_dominating(const Graph& g, const VertexSet& d);

/// Minimum set whose `cover` rows jointly contain every vertex. Rows need
/// not be symmetric; vertex v is covered by u when cover[u] contains v.
/// Witness vertices are returned in the `set` field.
SolveResult min_cover(const std::vector<VertexSet>& cover, int n, std::uint64_t budget = kDefaultBudget);

SolveResult gamma_exact(const Graph& g, std::uint64_t budget = kDefaultBudget);
/// Throws DomainError on a graph with an isolated vertex.
SolveResult gamma_t_exact(const Graph& g, std::uint64_t budget = kDefaultBudget);
/// Distance-k domination.
SolveResult gamma_k_exact(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

/// Maximum independent set with a greedy-coloring bound.
SolveResult max_independent_set(const Graph& g, std::uint64_t budget = kDefaultBudget);
/// Maximum 2-packing (pairwise disjoint closed neighborhoods).
SolveResult rho2_exact(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Classes D_i = N(v_i) minus the neighborhoods of v_1..v_{i-1}, empty ones
/// dropped. Every class is checked to be 2DMV. Throws DomainError when d is
/// not total dominating.
Coloring total_dom_partition(const Graph& g, const std::vector<int>& d);

/// Same rule on a graph of girth >= 7; classes are also checked independent.
Coloring neighborhood_i2dmv_partition(const Graph& g, const std::vector<int>& d);

/// A set whose open neighborhoods partition V(G), or nothing.
std::optional<VertexSet> efficient_open_dominating_set(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace kdmv
