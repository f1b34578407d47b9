#pragma once

#include <optional>
#include <vector>

#include "kdmv/coloring.hpp"
#include "kdmv/families.hpp"
#include "kdmv/graph.hpp"

namespace kdmv {

// Every builder verifies its output for the stated k before returning and
// throws std::logic_error if verification fails.

/// Closed-form chi_{mu_k} where one is known: paths, cycles, complete
/// graphs, P_n strong K_m (n >= 4, m >= 2, 2 <= k <= n-2), block graphs and
/// trees with k >= diam, and tori C_m x C_n with k = 2 and m, n = 0 mod 4.
std::optional<int> formula_chi_mu_k(const FamilySpec& spec, int k);

/// Consecutive pairs {v1, v2}, {v3, v4}, ...
Coloring color_path(int n, int k);
/// ceil(n/3) classes by the wraparound rule when n <= 3k, else pairs.
Coloring color_cycle(int n, int k);

/// Blocks of k + 2 consecutive K_m fibers, two colors per block; a tail of
/// one or two fibers gets one more color, a longer tail two more.
/// Vertex (i, j) of P_n strong K_m is i*m + j. Throws SpecError outside
/// n >= 4, m >= 2, 2 <= k <= n - 2.
Coloring color_strong_path_complete(int n, int m, int k);

/// Classes V_i x W_j on G strong H. Throws DomainError if an input
/// coloring is not kDMV on its factor.
Coloring product_coloring_strong(const Graph& g, const Coloring& cg, const Graph& h, const Coloring& ch, int k);

/// Classes Q_i x V(H) on G lex H from a partition of G into independent
/// 2DMV sets. G must be connected with at least two vertices.
Coloring lex_coloring_from_i2dmv(const Graph& g, const Coloring& partition, const Graph& h);

/// Classes A_i x V(H) on G lex H from a 2DMV coloring of G with minimum
/// degree >= 2 and girth >= 5; DomainError otherwise.
Coloring lex_coloring_from_2dmv(const Graph& g, const Coloring& cg, const Graph& h);

/// Level coloring of a block graph with ceil((d+1)/2) classes, valid for
/// k = d - 1. Components around the center are numbered by smallest vertex,
/// radial ones first. DomainError if g is not a block graph,
/// ConditionError if deg*(C) > ceil((d+1)/2).
Coloring block_graph_coloring(const Graph& g);

/// Each vertex joins the closed neighborhood of its first dominator in d.
Coloring hypercube_neighborhood_coloring(int n, const std::vector<int>& d);

/// The efficient open dominating set of C_m x C_n given by the 4x4 pattern
/// {(0,0), (0,1), (2,2), (2,3)}; classes are its open neighborhoods.
/// Vertex (i, j) is i*n + j. SpecError unless m, n = 0 mod 4, m >= n >= 4.
VertexSet torus_eod_set(int m, int n);
Coloring torus_eod_coloring(int m, int n);

/// Leaf-pair peeling on the BFS spanning tree from vertex 0; at most
/// ceil(n/2) classes, valid for k = 2 on g.
Coloring tree_half_coloring(const Graph& g);

/// Perfect matching by backtracking, smallest free vertex first.
std::optional<std::vector<Edge>> find_perfect_matching(const Graph& g);

/// 2|V(G)| classes on cor(G) x C_4: every matching edge gg' spans a copy of
/// P_4 x C_4 (leaf of g, g, g', leaf of g') colored with four new colors.
/// Product vertex (x, c) is x*4 + c. DomainError without a perfect matching.
Coloring cartesian_corona_c4_coloring(const Graph& g, std::optional<std::vector<Edge>> matching = std::nullopt);

/// The four-color pattern on P_4 x C_4, indexed [path position][cycle vertex].
const int (&p4_c4_pattern())[4][4];

}  // namespace kdmv
