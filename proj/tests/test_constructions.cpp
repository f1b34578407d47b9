#include <stdexcept>

#include "doctest.h"
#include "kdmv/chromatic.hpp"
#include "kdmv/constructions.hpp"
#include "kdmv/domination.hpp"
#include "kdmv/enumerate.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/families.hpp"
#include "kdmv/metrics.hpp"
#include "kdmv/products.hpp"
#include "kdmv/visibility.hpp"

using namespace kdmv;

namespace {

FamilySpec spec(const std::string& s) { return parse_family_spec(s); }
Graph gen(const std::string& s) { return generate(spec(s)); }

int chi(const Graph& g, int k) {
  auto r = chi_mu_k_exact(g, k);
  REQUIRE(r.exact());
  return r.value;
}

}  // namespace

TEST_CASE("formula values") {
  CHECK(formula_chi_mu_k(spec("strong(path:15,complete:3)"), 3) == 6);
  CHECK(formula_chi_mu_k(spec("cycle:7"), 2) == 4);
  CHECK(formula_chi_mu_k(spec("cartesian(cycle:8,cycle:8)"), 2) == 16);
  CHECK(formula_chi_mu_k(spec("path:1"), 5) == 1);
  CHECK(formula_chi_mu_k(spec("strong(path:6,complete:2)"), 2) == 3);
  CHECK(formula_chi_mu_k(spec("strong(path:7,complete:2)"), 2) == 4);
  CHECK(formula_chi_mu_k(spec("strong(path:8,complete:2)"), 2) == 4);
  CHECK_FALSE(formula_chi_mu_k(spec("strong(path:8,complete:2)"), 7));
  CHECK_FALSE(formula_chi_mu_k(spec("cartesian(cycle:6,cycle:8)"), 2));
  CHECK_FALSE(formula_chi_mu_k(spec("hypercube:3"), 2));
}

TEST_CASE("formulas agree with the exact solver") {
  std::vector<std::string> specs;
  for (int n = 1; n <= 12; ++n) {
    specs.push_back("path:" + std::to_string(n));
    if (n >= 3) specs.push_back("cycle:" + std::to_string(n));
    specs.push_back("complete:" + std::to_string(n));
  }
  for (int n = 4; n <= 9; ++n)
    for (int m = 2; m <= 3 && n * m <= 18; ++m)
      specs.push_back("strong(path:" + std::to_string(n) + ",complete:" + std::to_string(m) + ")");
  specs.push_back("cartesian(cycle:4,cycle:4)");
  specs.push_back("named:fig-block");
  int compared = 0;
  for (auto& s : specs) {
    Graph g = gen(s);
    int diam = metrics(g).diameter;
    for (int k = 1; k <= diam + 1; ++k) {
      auto f = formula_chi_mu_k(spec(s), k);
      if (!f) continue;
      INFO(s << " k=" << k);
      REQUIRE(*f == chi(g, k));
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("block graph formula for trees and block graphs") {
  for (int n = 1; n <= 8; ++n)
    for (auto& g : block_graphs(n)) {
      int d = metrics(g).diameter;
      CHECK(chi(g, std::max(d, 1)) == (d + 2) / 2);
    }
}

TEST_CASE("strict chain on a long strong product") {
  auto s = spec("strong(path:60,complete:2)");
  auto c2 = formula_chi_mu_k(s, 2);
  auto c3 = formula_chi_mu_k(s, 3);
  auto c4 = formula_chi_mu_k(s, 4);
  REQUIRE(c2);
  REQUIRE(c3);
  REQUIRE(c4);
  CHECK(*c4 < *c3);
  CHECK(*c3 < *c2);
  for (int k = 2; k <= 4; ++k) {
    auto c = color_strong_path_complete(60, 2, k);
    CHECK(c.num_classes() == *formula_chi_mu_k(s, k));
  }
}

TEST_CASE("paths and cycles") {
  CHECK(color_path(4, 1).colors() == std::vector<int>{0, 0, 1, 1});
  CHECK(color_path(7, 3).num_classes() == 4);
  auto c6 = color_cycle(6, 2);
  CHECK(c6.num_classes() == 2);
  CHECK(verify_kdmv_coloring(gen("cycle:6"), 2, c6).ok);
  CHECK(color_cycle(9, 2).num_classes() == 5);
  for (int n = 3; n <= 14; ++n)
    for (int k = 1; k <= 5; ++k) {
      auto c = color_cycle(n, k);
      REQUIRE(verify_kdmv_coloring(gen("cycle:" + std::to_string(n)), k, c).ok);
      REQUIRE(c.num_classes() == *formula_chi_mu_k(FamilySpec::cycle(n), k));
    }
}

TEST_CASE("strong path by complete") {
  auto c = color_strong_path_complete(15, 3, 3);
  CHECK(c.num_classes() == 6);
  CHECK(verify_kdmv_coloring(gen("strong(path:15,complete:3)"), 3, c).ok);
  CHECK(color_strong_path_complete(6, 2, 2).num_classes() == 3);
  CHECK(chi(gen("strong(path:6,complete:2)"), 2) == 3);
  CHECK(color_strong_path_complete(8, 2, 2).num_classes() == 4);
  CHECK_THROWS_AS(color_strong_path_complete(3, 2, 2), SpecError);
  CHECK_THROWS_AS(color_strong_path_complete(6, 1, 2), SpecError);
  CHECK_THROWS_AS(color_strong_path_complete(6, 2, 5), SpecError);
}

TEST_CASE("strong products of colorings") {
  Graph p5 = gen("path:5");
  Graph k4 = gen("complete:4");
  auto c = product_coloring_strong(p5, color_path(5, 2), k4, Coloring::from_labels({0, 0, 0, 0}), 2);
  CHECK(c.num_classes() == 3);
  Graph k3 = gen("complete:3");
  CHECK(product_coloring_strong(k3, Coloring::from_labels({0, 0, 0}), k3, Coloring::from_labels({0, 0, 0}), 4)
            .num_classes() == 1);
  Graph c6 = gen("cycle:6");
  auto cc = product_coloring_strong(c6, color_cycle(6, 2), c6, color_cycle(6, 2), 2);
  CHECK(cc.num_classes() == 4);
  CHECK(verify_kdmv_coloring(product(ProductKind::Strong, c6, c6), 2, cc).ok);
  CHECK_THROWS_AS(product_coloring_strong(p5, Coloring::from_labels({0, 0, 0, 0, 0}), k4,
                                          Coloring::from_labels({0, 0, 0, 0}), 2),
                  DomainError);
}

TEST_CASE("lexicographic constructions") {
  for (int r = 2; r <= 4; ++r)
    for (int t = 2; t <= 3; ++t) {
      Graph star = gen("star:" + std::to_string(r));
      Graph pt = gen("path:" + std::to_string(t));
      auto part = chi_i_mu2_exact(star);
      REQUIRE(part.coloring);
      auto c = lex_coloring_from_i2dmv(star, *part.coloring, pt);
      CHECK(c.num_classes() == 2);
      CHECK(chi(product(ProductKind::Lexicographic, star, pt), 2) == 2);
      Graph sle = generate(FamilySpec::named_graph(NamedGraph::Kn1rLexEmpty, {r, t}));
      auto e = lex_coloring_from_i2dmv(star, *part.coloring, gen("empty:" + std::to_string(t)));
      CHECK(verify_kdmv_coloring(sle, 2, e).ok);
    }
  Graph p4 = gen("path:4");
  auto c = lex_coloring_from_i2dmv(p4, Coloring::from_labels({0, 1, 0, 1}), gen("complete:2"));
  CHECK(c.num_classes() == 2);
  CHECK_THROWS_AS(lex_coloring_from_i2dmv(p4, Coloring::from_labels({0, 0, 1, 1}), gen("complete:2")), DomainError);

  Graph c5 = gen("cycle:5");
  auto cg = chi_mu_k_exact(c5, 2);
  for (const char* h : {"path:3", "complete:2", "empty:3"})
    CHECK(lex_coloring_from_2dmv(c5, *cg.coloring, gen(h)).num_classes() == 2);
  Graph c8 = gen("named:c8-chords");
  auto c8c = chi_mu_k_exact(c8, 2);
  CHECK(c8c.value == 2);
  CHECK(lex_coloring_from_2dmv(c8, *c8c.coloring, gen("path:3")).num_classes() == 2);
  Graph pr = gen("named:prop-pr-graph");
  CHECK_THROWS_AS(lex_coloring_from_2dmv(pr, Coloring::from_labels(prop_pr_graph_coloring()), gen("path:3")),
                  DomainError);
}

TEST_CASE("block graph coloring") {
  Graph fb = gen("named:fig-block");
  auto c = block_graph_coloring(fb);
  CHECK(c.num_classes() == 3);
  CHECK(verify_kdmv_coloring(fb, 4, c).ok);
  CHECK(verify_kdmv_coloring(fb, 4, Coloring::from_labels(fig_block_coloring())).ok);
  // The level coloring is not a 2DMV coloring of this graph; k = 2 needs more classes.
  CHECK_FALSE(verify_kdmv_coloring(fb, 2, c).ok);
  CHECK(chi(fb, 2) > 3);
  CHECK_THROWS_AS(block_graph_coloring(gen("star:3")), ConditionError);
  CHECK(chi(gen("star:3"), 1) == 3);
  CHECK(chi(gen("star:3"), 2) == 2);
  CHECK_THROWS_AS(block_graph_coloring(gen("cycle:5")), DomainError);
  for (int n = 2; n <= 9; ++n)
    for (auto& g : block_graphs(n)) {
      int d = metrics(g).diameter;
      int bound = (d + 2) / 2;
      if (center_info(g).deg_star <= bound) {
        auto bc = block_graph_coloring(g);
        REQUIRE(bc.num_classes() == bound);
        REQUIRE(verify_kdmv_coloring(g, std::max(d - 1, 1), bc).ok);
      } else {
        REQUIRE_THROWS_AS(block_graph_coloring(g), ConditionError);
      }
    }
}

TEST_CASE("hypercube neighborhoods") {
  auto q3 = hypercube_neighborhood_coloring(3, {0, 7});
  CHECK(q3.num_classes() == 2);
  Graph q4 = gen("hypercube:4");
  auto g4 = gamma_exact(q4);
  REQUIRE(g4.set);
  auto c4 = hypercube_neighborhood_coloring(4, g4.set->to_vector());
  CHECK(c4.num_classes() == 4);
  CHECK(verify_kdmv_coloring(q4, 2, c4).ok);
  CHECK(hypercube_neighborhood_coloring(1, {0}).num_classes() == 1);
  CHECK_THROWS_AS(hypercube_neighborhood_coloring(3, {0}), DomainError);
}

TEST_CASE("torus") {
  auto c = torus_eod_coloring(8, 8);
  CHECK(c.num_classes() == 16);
  CHECK(verify_kdmv_coloring(gen("cartesian(cycle:8,cycle:8)"), 2, c).ok);
  CHECK(torus_eod_set(8, 8).count() == 16);
  CHECK(torus_eod_coloring(4, 4).num_classes() == 4);
  CHECK(torus_eod_coloring(12, 8).num_classes() == 24);
  CHECK_THROWS_AS(torus_eod_coloring(6, 4), SpecError);
  // mu_2 of the torus gives the matching lower bound.
  auto mu = max_kdmv(gen("cartesian(cycle:8,cycle:8)"), 2);
  REQUIRE(mu.exact());
  CHECK((64 + mu.value - 1) / mu.value == 16);
}

TEST_CASE("spanning tree halving") {
  CHECK(tree_half_coloring(gen("path:7")).num_classes() == 4);
  CHECK(tree_half_coloring(gen("complete:4")).num_classes() <= 2);
  Graph sharp = generate(FamilySpec::general_sharp(FamilySpec::complete(2), {2, 2}));
  CHECK(sharp.order() == 8);
  CHECK(chi(sharp, 2) == sharp.order() / 2);
  CHECK(tree_half_coloring(sharp).num_classes() == 4);
  for (int n = 1; n <= 7; ++n)
    for (auto& g : connected_graphs(n)) {
      auto c = tree_half_coloring(g);
      REQUIRE(c.num_classes() <= (n + 1) / 2);
      REQUIRE(verify_kdmv_coloring(g, 2, c).ok);
    }
}

TEST_CASE("corona by C4") {
  Graph k2 = gen("complete:2");
  auto c = cartesian_corona_c4_coloring(k2);
  CHECK(c.num_classes() == 4);
  CHECK(verify_kdmv_coloring(product(ProductKind::Cartesian, corona(k2), gen("cycle:4")), 2, c).ok);
  CHECK(chi(gen("cartesian(path:4,cycle:4)"), 2) == 4);
  auto p4 = cartesian_corona_c4_coloring(gen("path:4"));
  CHECK(p4.num_classes() == 8);
  CHECK(p4.order() == 32);
  CHECK(rho2_exact(corona(gen("path:4"))).value == 4);
  CHECK_THROWS_AS(cartesian_corona_c4_coloring(gen("complete:3")), DomainError);
  CHECK(find_perfect_matching(gen("cycle:6")).has_value());
  CHECK_FALSE(find_perfect_matching(gen("star:3")).has_value());
}
