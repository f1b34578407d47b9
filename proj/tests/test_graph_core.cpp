#include <sstream>

#include "doctest.h"
#include "kdmv/distance.hpp"
#include "kdmv/enumerate.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/families.hpp"
#include "kdmv/graph6.hpp"
#include "kdmv/metrics.hpp"
#include "kdmv/products.hpp"
#include "oracles.hpp"

using namespace kdmv;

namespace {

Graph gen(const char* spec) { return generate(parse_family_spec(spec)); }

// Every graph on n <= 5 vertices (all labelings) and the connected classes up to 8.
std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 8; ++n)
    for (auto& g : connected_graphs(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s{1, 5, 64, 300};
  CHECK(s.count() == 4);
  CHECK(s.to_vector() == std::vector<int>{1, 5, 64, 300});
  CHECK(s.first() == 1);
  CHECK(s.next(5) == 64);
  VertexSet t{5, 300};
  CHECK(t.subset_of(s));
  CHECK_FALSE(s.subset_of(t));
  CHECK((s - t) == VertexSet{1, 64});
  CHECK((s & t) == t);
  CHECK(VertexSet::full(70).count() == 70);
  CHECK_FALSE(VertexSet::full(70).test(70));
  int sum = 0;
  for (int v : s) sum += v;
  CHECK(sum == 370);
}

TEST_CASE("graph rejects loops and bad endpoints") {
  Graph g(3);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 3));
  CHECK_THROWS_AS(Graph(VertexSet::kMaxVertices + 1), SizeError);
}

TEST_CASE("graph6 known strings") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(gen("complete:2")) == "A_");
  Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(to_graph6(g) == "D?{");
  CHECK(parse_graph6(">>graph6<<A_\n") == k2);
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A\x7f"), ParseError);
  // K2 with a stray padding bit.
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
}

TEST_CASE("graph6 round trip on generated and enumerated graphs") {
  for (const char* spec : {"path:5", "cycle:7", "hypercube:4", "named:fig-girth", "strong(path:15,complete:3)"}) {
    Graph g = gen(spec);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  for (auto& g : small_corpus()) REQUIRE(parse_graph6(to_graph6(g)) == g);
  // Long form.
  Graph big = gen("path:100");
  std::string s = to_graph6(big);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == big);
}

TEST_CASE("graph6 stream and edge list") {
  std::istringstream in("A_\n\n# comment\nBw\n");
  auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1].size() == 3);
  Graph c5 = gen("cycle:5");
  CHECK(parse_edge_list(to_edge_list(c5)) == c5);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
}

TEST_CASE("families") {
  Graph q3 = gen("hypercube:3");
  CHECK(q3.order() == 8);
  CHECK(q3.size() == 12);
  CHECK(q3.min_degree() == 3);
  CHECK(q3.max_degree() == 3);
  CHECK(girth(q3) == 4);
  CHECK(are_isomorphic(gen("corona(path:2)"), gen("path:4")));
  CHECK_THROWS_AS(gen("cycle:2"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("cartesian(path:3)"), ParseError);
  for (const char* spec : {"path:4", "lex(star:3,path:2)", "corona(cycle:5)", "fig2tree:2,2,1", "named:fig-block"})
    CHECK(to_string(parse_family_spec(spec)) == spec);
  CHECK(spec_order(parse_family_spec("strong(path:15,complete:3)")) == 45);
}

TEST_CASE("products") {
  Graph k2 = gen("complete:2");
  CHECK(are_isomorphic(product(ProductKind::Cartesian, k2, k2), gen("cycle:4")));
  Graph s = product(ProductKind::Strong, k2, k2);
  CHECK(s.size() == 6);
  Graph lex = product(ProductKind::Lexicographic, k2, gen("empty:2"));
  CHECK(lex.size() == 4);
  CHECK(lex.min_degree() == 2);
  CHECK(are_isomorphic(lex, gen("cycle:4")));
  CHECK_THROWS_AS(product(ProductKind::Cartesian, gen("path:30"), gen("path:30")), SizeError);
}

TEST_CASE("products agree with the adjacency rules") {
  auto gs = small_corpus();
  int checked = 0;
  for (std::size_t i = 0; i < gs.size(); i += 97)
    for (std::size_t j = 0; j < gs.size(); j += 131) {
      const Graph& g = gs[i];
      const Graph& h = gs[j];
      if (g.order() * h.order() > 60) continue;
      int nh = h.order();
      Graph c = product(ProductKind::Cartesian, g, h);
      Graph st = product(ProductKind::Strong, g, h);
      Graph lx = product(ProductKind::Lexicographic, g, h);
      auto dg = oracle::floyd_warshall(oracle::adjacency(g));
      auto dh = oracle::floyd_warshall(oracle::adjacency(h));
      auto ds = oracle::floyd_warshall(oracle::adjacency(st));
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < nh; ++b)
          for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < nh; ++y) {
              int u = a * nh + b, v = x * nh + y;
              if (u == v) continue;
              bool ge = g.has_edge(a, x), he = h.has_edge(b, y);
              CHECK(c.has_edge(u, v) == ((a == x && he) || (b == y && ge)));
              CHECK(st.has_edge(u, v) == ((a == x && he) || (b == y && ge) || (ge && he)));
              CHECK(lx.has_edge(u, v) == (ge || (a == x && he)));
              CHECK(ds[u][v] == std::max(dg[a][x], dh[b][y]));
            }
      // Fibers induce copies of the factors.
      CHECK(induced_subgraph(c, g_fiber(g.order(), nh, 0)) == g);
      CHECK(induced_subgraph(c, h_fiber(nh, 0)) == h);
      ++checked;
    }
  CHECK(checked > 5);
}

TEST_CASE("exact distance graph") {
  Graph c6 = exact_distance_graph(gen("cycle:6"), 2);
  CHECK(c6.size() == 6);
  CHECK(components(c6).size() == 2);
  Graph p4 = exact_distance_graph(gen("path:4"), 3);
  CHECK(p4.size() == 1);
  CHECK(p4.has_edge(0, 3));
  CHECK(exact_distance_graph(gen("complete:5"), 2).size() == 0);
  for (auto& g : small_corpus()) REQUIRE(exact_distance_graph(g, 1) == g);
}

TEST_CASE("common neighbors sit at distance two in triangle-free graphs") {
  for (auto& g : small_corpus()) {
    if (girth(g) < 4) continue;
    Graph d2 = exact_distance_graph(g, 2);
    for (int v = 0; v < g.order(); ++v)
      for (int a : g.neighbors(v))
        for (int b : g.neighbors(v))
          if (a < b) REQUIRE(d2.has_edge(a, b));
  }
}

TEST_CASE("distances match Floyd-Warshall") {
  for (auto& g : small_corpus()) {
    auto dm = all_pairs_distances(g);
    auto d = oracle::floyd_warshall(oracle::adjacency(g));
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) REQUIRE(dm(u, v) == d[u][v]);
  }
  auto dm = all_pairs_distances(gen("path:5"));
  CHECK(dm(0, 4) == 4);
  auto two = all_pairs_distances(Graph(2));
  CHECK(two(0, 1) == DistanceMatrix::kInf);
  CHECK_FALSE(two.finite(0, 1));
}

TEST_CASE("metrics and center") {
  auto m = metrics(gen("cycle:7"));
  CHECK(m.girth == 7);
  CHECK(m.diameter == 3);
  CHECK(m.radius == 3);
  auto ci = center_info(gen("cycle:7"));
  CHECK(ci.center.count() == 7);
  CHECK(girth(gen("path:6")) == kInfiniteGirth);
  CHECK(girth(gen("named:fig-girth")) == 6);
  CHECK_THROWS_AS(center_info(Graph(2)), ConnectivityError);
  CHECK_FALSE(metrics(Graph(2)).connected);
}

TEST_CASE("center diameter relations on block graphs") {
  for (auto& g : small_corpus()) {
    if (!blocks(g).is_block_graph) continue;
    auto ci = center_info(g);
    if (ci.center.count() == 1) REQUIRE(ci.diameter == 2 * ci.radius);
    if (ci.center.count() >= 2) REQUIRE(ci.diameter == 2 * ci.radius - 1);
  }
}

TEST_CASE("fig-block fixture") {
  Graph g = gen("named:fig-block");
  auto b = blocks(g);
  CHECK(b.is_block_graph);
  auto ci = center_info(g);
  CHECK(ci.center == (VertexSet{0, 1, 2, 3}));
  CHECK(ci.diameter == 5);
  CHECK(ci.deg_star == 3);
}

TEST_CASE("convexity") {
  Graph c4 = gen("cycle:4");
  CHECK_FALSE(is_convex(c4, VertexSet{0, 2}));
  CHECK(is_convex(c4, VertexSet::full(4)));
  CHECK(is_convex(c4, VertexSet{0, 1}));
  CHECK_FALSE(is_convex(gen("path:5"), VertexSet{0, 4}));
  Graph g = gen("cycle:5");
  Graph h = gen("path:3");
  Graph p = product(ProductKind::Cartesian, g, h);
  for (int y = 0; y < 3; ++y) CHECK(is_convex(p, g_fiber(5, 3, y)));
  for (int x = 0; x < 5; ++x) CHECK(is_convex(p, h_fiber(3, x)));
}

TEST_CASE("block decomposition") {
  for (auto& t : trees(8)) {
    auto b = blocks(t);
    CHECK(b.is_block_graph);
    CHECK(b.blocks.size() == 7);
  }
  auto c5 = blocks(gen("cycle:5"));
  CHECK(c5.blocks.size() == 1);
  CHECK_FALSE(c5.is_block_graph);
  CHECK_THROWS_AS(blocks(Graph(3)), ConnectivityError);
}

TEST_CASE("enumeration counts") {
  const int connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(connected_graphs(n).size() == static_cast<std::size_t>(connected[n - 1]));
  const int tree_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(trees(n).size() == static_cast<std::size_t>(tree_counts[n - 1]));
  const int block_counts[] = {1, 1, 2, 4, 9, 22, 59, 165, 496};
  for (int n = 1; n <= 9; ++n) CHECK(block_graphs(n).size() == static_cast<std::size_t>(block_counts[n - 1]));
  for (auto& g : connected_girth_at_least(9, 7)) {
    CHECK(is_connected(g));
    CHECK(girth(g) >= 7);
  }
}

TEST_CASE("isomorphism") {
  Graph a = gen("cycle:6");
  Graph b(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  CHECK(are_isomorphic(a, b));
  CHECK(refinement_hash(a) == refinement_hash(b));
  CHECK_FALSE(are_isomorphic(a, product(ProductKind::Cartesian, gen("complete:3"), gen("complete:2"))));
}
