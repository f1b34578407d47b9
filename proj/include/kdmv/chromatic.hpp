#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kdmv/coloring.hpp"
#include "kdmv/graph.hpp"

namespace kdmv {

enum class ViolationReason { DistanceExceedsK, NoAvoidingGeodesic, NotIndependent };

const char* to_string(ViolationReason r);

struct Violation {
  int cls = 0;
  int u = 0;
  int v = 0;
  ViolationReason reason = ViolationReason::DistanceExceedsK;
};

struct Verification {
  bool ok = true;
  /// First failing pair of each failing class.
  std::vector<Violation> violations;
};

/// Checks that every class of c is a kDMV set of g.
Verification verify_kdmv_coloring(const Graph& g, int k, const Coloring& c);
/// Same, additionally requiring independent classes (I2DMV with k = 2).
Verification verify_independent_kdmv_coloring(const Graph& g, int k, const Coloring& c);

struct ChiOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Classes must also be independent sets.
  bool independent = false;
  /// Lower-bound ingredients; the far-apart clique bound is always used.
  bool use_mu_bound = true;
  bool use_domination_bound = true;
  bool use_packing_bound = true;
  /// Node cap for the mu_k run inside the bound computation.
  std::uint64_t mu_budget = 200'000;
};

/// Exact chi_{mu_k}. Vertices are colored in degree-descending order (index
/// tiebreak), a vertex opens at most one new class, and every extension is
/// checked incrementally. Targets are tried from the best lower bound up to
/// the greedy count. Disconnected graphs are solved per component and the
/// counts added, since no class can span two components.
SolveResult chi_mu_k_exact(const Graph& g, int k, const ChiOptions& options);
SolveResult chi_mu_k_exact(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

/// Minimum partition into independent 2DMV sets.
SolveResult chi_i_mu2_exact(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Exact proper chromatic number (DSATUR branch and bound).
SolveResult chromatic_number_exact(const Graph& g, std::uint64_t budget = kDefaultBudget);
/// Clique cover number: chromatic number of the complement.
SolveResult clique_cover_theta(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// First-fit over a BFS order from vertex 0 (then from the smallest
/// unvisited vertex of each further component). Always a valid kDMV coloring.
Coloring greedy_kdmv_upper(const Graph& g, int k);

/// Greedily grown set of vertices pairwise at distance > k; its size bounds
/// chi_{mu_k} from below.
VertexSet far_clique(const Graph& g, int k);

}  // namespace kdmv
