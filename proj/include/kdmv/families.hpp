#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kdmv/graph.hpp"

namespace kdmv {

enum class Family {
  Path,
  Cycle,
  Complete,
  Empty,
  Star,
  DoubleStar,
  Hypercube,
  Tree,
  Corona,
  Cartesian,
  Strong,
  Lex,
  Named,
  Graph6,
  File,
};

enum class NamedGraph {
  FigGirth,         // girth-6 graph, two hexagons and a hub; chi_mu2 = 3
  Fig1Tree,         // double star S(a,b) with l pendant P4s at x
  PropPrGraph,      // 15-vertex girth-4 graph on a 4-cycle with a 2-class labeling
  PropPrTree,       // 11-vertex tree with marked u, v, w, x
  ThmGeneralSharp,  // H with a P_{2t_i-1} hanging from each vertex
  Kn1rLexEmpty,     // K_{1,r} o complement(K_t)
  FigBlock,         // 16-vertex block graph with a 4-clique center
  DisSharp,         // C6 with pendants at v1, v3, v5
  C8Chords,         // C8 plus chords v1v5 and v3v7
};

/// Tagged descriptor of a graph family instance.
///
/// Text form (parse_family_spec / to_string):
///   path:n  cycle:n  complete:n  empty:n  star:r  doublestar:a,b
///   hypercube:n  tree:u-v,u-v,...  corona(S)  cartesian(S,S)  strong(S,S)
///   lex(S,S)  named:fig-girth|prop-pr-graph|prop-pr-tree|fig-block|
///   dis-sharp|c8-chords  fig2tree:a,b,l  sharp(S,t1,...,ts)
///   starlexempty:r,t  g6:<graph6>  file:<path>
struct FamilySpec {
  Family family = Family::Path;
  std::vector<int> params;
  std::vector<Edge> edges;
  std::vector<FamilySpec> operands;
  NamedGraph named = NamedGraph::FigGirth;
  std::string text;

  static FamilySpec of(Family f, std::vector<int> p = {}) {
    FamilySpec s;
    s.family = f;
    s.params = std::move(p);
    return s;
  }
  static FamilySpec path(int n) { return of(Family::Path, {n}); }
  static FamilySpec cycle(int n) { return of(Family::Cycle, {n}); }
  static FamilySpec complete(int n) { return of(Family::Complete, {n}); }
  static FamilySpec empty(int n) { return of(Family::Empty, {n}); }
  static FamilySpec star(int r) { return of(Family::Star, {r}); }
  static FamilySpec double_star(int a, int b) { return of(Family::DoubleStar, {a, b}); }
  static FamilySpec hypercube(int n) { return of(Family::Hypercube, {n}); }
  static FamilySpec tree(std::vector<Edge> edges);
  static FamilySpec corona(FamilySpec inner);
  static FamilySpec cartesian(FamilySpec a, FamilySpec b);
  static FamilySpec strong(FamilySpec a, FamilySpec b);
  static FamilySpec lex(FamilySpec a, FamilySpec b);
  static FamilySpec named_graph(NamedGraph id, std::vector<int> params = {});
  static FamilySpec general_sharp(FamilySpec h, std::vector<int> t);
};

/// Builds the graph. Labelings are fixed: paths and cycles in order, star
/// center 0, double star supports 0 and 1, hypercube vertices are their bit
/// strings, product vertex (g, h) is g * |V(H)| + h, corona leaf of v is
/// n + v. Throws SpecError on out-of-range parameters.
Graph generate(const FamilySpec& spec);

FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Vertex count without building the graph, or -1 when unknown
/// (graph6 text and files).
int spec_order(const FamilySpec& spec);

// Reference labelings of the fixtures, as 1-based color per vertex.
std::vector<int> fig_girth_coloring();
std::vector<int> prop_pr_graph_coloring();
std::vector<int> fig_block_coloring();
/// Labeling of fig2tree:a,b,l with l + 2 colors.
std::vector<int> fig1_tree_coloring(int a, int b, int l);

}  // namespace kdmv
