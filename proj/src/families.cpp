#include "kdmv/families.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "kdmv/errors.hpp"
#include "kdmv/graph6.hpp"
#include "kdmv/products.hpp"

namespace kdmv {

FamilySpec FamilySpec::tree(std::vector<Edge> edges) {
  FamilySpec s = of(Family::Tree);
  s.edges = std::move(edges);
  return s;
}

FamilySpec FamilySpec::corona(FamilySpec inner) {
  FamilySpec s = of(Family::Corona);
  s.operands.push_back(std::move(inner));
  return s;
}

FamilySpec FamilySpec::cartesian(FamilySpec a, FamilySpec b) {
  FamilySpec s = of(Family::Cartesian);
  s.operands = {std::move(a), std::move(b)};
  return s;
}

FamilySpec FamilySpec::strong(FamilySpec a, FamilySpec b) {
  FamilySpec s = of(Family::Strong);
  s.operands = {std::move(a), std::move(b)};
  return s;
}

FamilySpec FamilySpec::lex(FamilySpec a, FamilySpec b) {
  FamilySpec s = of(Family::Lex);
  s.operands = {std::move(a), std::move(b)};
  return s;
}

FamilySpec FamilySpec::named_graph(NamedGraph id, std::vector<int> params) {
  FamilySpec s = of(Family::Named, std::move(params));
  s.named = id;
  return s;
}

FamilySpec FamilySpec::general_sharp(FamilySpec h, std::vector<int> t) {
  FamilySpec s = named_graph(NamedGraph::ThmGeneralSharp, std::move(t));
  s.operands.push_back(std::move(h));
  return s;
}

namespace {

// Fixture edge lists. Their known invariants (girth, gamma, chi_mu2, center,
// deg*) are asserted in tests.

// fig-girth: inner hexagon a..f = 0..5, outer hexagon a'..f' = 6..11,
// hub u = 12 and its neighbors u1 = 13 (to e), u2 = 14 (to c), u3 = 15 (to a).
// The three curved edges are u2-f', u3-d', u1-b'.
Graph fig_girth() {
  return Graph(16,
               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 6},
                {12, 13}, {13, 4}, {12, 14}, {14, 2}, {12, 15}, {15, 0},
                {11, 5}, {7, 1}, {9, 3},
                {14, 11}, {15, 9}, {13, 7}},
               "named:fig-girth");
}

// a = 0, b = 1, c = 2, d = 3 on the 4-cycle a-b-c-d; children
// b11 = 4, b12 = 5, c11 = 6, c12 = 7, d11 = 8, d12 = 9; e1..e4 = 10..13; e = 14.
// e_i is joined to the children named by its label: e1 = b_{135},
// e2 = b_{146}, e3 = b_{236}, e4 = b_{245} over b1..b6 = b11,b12,c11,c12,d11,d12.
// Curved edges: a-e1 and a-e4.
Graph prop_pr_graph() {
  Graph g(15, "named:prop-pr-graph");
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}})
    g.add_edge(u, v);
  const int child[6] = {4, 5, 6, 7, 8, 9};
  const std::vector<std::vector<int>> label = {{1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  for (int i = 0; i < 4; ++i) {
    g.add_edge(14, 10 + i);
    for (int b : label[i]) g.add_edge(10 + i, child[b - 1]);
  }
  g.add_edge(0, 10);
  g.add_edge(0, 13);
  return g;
}

// x = 0, y = 1; leaves of x: 2, 3, 4 (v = 4); leaves of y: 5, 6, 7 (u = 7);
// path x - 8 - w - x' with w = 9 and the marked end x' = 10.
Graph prop_pr_tree() {
  return Graph(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}, {0, 8}, {8, 9}, {9, 10}},
               "named:prop-pr-tree");
}

// Center clique c1..c4 = 0..3. Branch at c1: a2 = 4 with triangle {4, 5, 6}.
// Branch at c2: d2 = 7 in the 4-clique {7, 8, 9, 10}. Branch at c3: triangle
// {2, 11, 12} with pendants 13 at 11 and 14 at 12. Branch at c4: leaf 15.
Graph fig_block() {
  Graph g(16, "named:fig-block");
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
  for (int a = 7; a < 11; ++a)
    for (int b = a + 1; b < 11; ++b) g.add_edge(a, b);
  for (auto [u, v] : std::vector<Edge>{{0, 4}, {4, 5}, {5, 6}, {4, 6}, {1, 7}, {2, 11}, {2, 12}, {11, 12}, {11, 13}, {12, 14}, {3, 15}})
    g.add_edge(u, v);
  return g;
}

Graph dis_sharp() {
  return Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {2, 7}, {4, 8}}, "named:dis-sharp");
}

Graph c8_chords() {
  Graph g(8, "named:c8-chords");
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  g.add_edge(0, 4);
  g.add_edge(2, 6);
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SpecError(what);
}

void require_params(const FamilySpec& s, std::size_t count, const char* name) {
  require(s.params.size() == count, std::string(name) + ": expected " + std::to_string(count) + " parameter(s)");
}

Graph double_star_graph(int a, int b) {
  Graph g(a + b + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < a; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < b; ++i) g.add_edge(1, 2 + a + i);
  return g;
}

}  // namespace

Graph generate(const FamilySpec& s) {
  Graph g;
  switch (s.family) {
    case Family::Path: {
      require_params(s, 1, "path");
      require(s.params[0] >= 1, "path: n >= 1 required");
      g = Graph(s.params[0]);
      for (int i = 0; i + 1 < s.params[0]; ++i) g.add_edge(i, i + 1);
      break;
    }
    case Family::Cycle: {
      require_params(s, 1, "cycle");
      require(s.params[0] >= 3, "cycle: n >= 3 required");
      g = Graph(s.params[0]);
      for (int i = 0; i < s.params[0]; ++i) g.add_edge(i, (i + 1) % s.params[0]);
      break;
    }
    case Family::Complete: {
      require_params(s, 1, "complete");
      require(s.params[0] >= 1, "complete: n >= 1 required");
      g = Graph(s.params[0]);
      for (int i = 0; i < s.params[0]; ++i)
        for (int j = i + 1; j < s.params[0]; ++j) g.add_edge(i, j);
      break;
    }
    case Family::Empty: {
      require_params(s, 1, "empty");
      require(s.params[0] >= 1, "empty: n >= 1 required");
      g = Graph(s.params[0]);
      break;
    }
    case Family::Star: {
      require_params(s, 1, "star");
      require(s.params[0] >= 1, "star: r >= 1 required");
      g = Graph(s.params[0] + 1);
      for (int i = 1; i <= s.params[0]; ++i) g.add_edge(0, i);
      break;
    }
    case Family::DoubleStar: {
      require_params(s, 2, "doublestar");
      require(s.params[0] >= 1 && s.params[1] >= 1, "doublestar: a, b >= 1 required");
      g = double_star_graph(s.params[0], s.params[1]);
      break;
    }
    case Family::Hypercube: {
      require_params(s, 1, "hypercube");
      require(s.params[0] >= 0 && s.params[0] <= 9, "hypercube: 0 <= n <= 9 required");
      const int n = 1 << s.params[0];
      g = Graph(n);
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < s.params[0]; ++b)
          if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
      break;
    }
    case Family::Tree: {
      const int n = static_cast<int>(s.edges.size()) + 1;
      g = Graph(n, s.edges);
      require(is_connected(g), "tree: edge list must form a tree on 0..m");
      break;
    }
    case Family::Corona:
      require(s.operands.size() == 1, "corona: one operand");
      g = corona(generate(s.operands[0]));
      break;
    case Family::Cartesian:
    case Family::Strong:
    case Family::Lex: {
      require(s.operands.size() == 2, "product: exactly two operands");
      const auto kind = s.family == Family::Cartesian ? ProductKind::Cartesian
                        : s.family == Family::Strong  ? ProductKind::Strong
                                                      : ProductKind::Lexicographic;
      g = product(kind, generate(s.operands[0]), generate(s.operands[1]));
      break;
    }
    case Family::Named:
      switch (s.named) {
        case NamedGraph::FigGirth:
          g = fig_girth();
          break;
        case NamedGraph::PropPrGraph:
          g = prop_pr_graph();
          break;
        case NamedGraph::PropPrTree:
          g = prop_pr_tree();
          break;
        case NamedGraph::FigBlock:
          g = fig_block();
          break;
        case NamedGraph::DisSharp:
          g = dis_sharp();
          break;
        case NamedGraph::C8Chords:
          g = c8_chords();
          break;
        case NamedGraph::Fig1Tree: {
          require_params(s, 3, "fig2tree");
          const int a = s.params[0];
          const int b = s.params[1];
          const int l = s.params[2];
          require(a >= 2 && b >= 2 && l >= 1, "fig2tree: a, b >= 2 and l >= 1 required");
          const int base = a + b + 2;
          require(base + 3 * l <= VertexSet::kMaxVertices, "fig2tree: too large");
          Graph t(base + 3 * l);
          for (auto [u, v] : double_star_graph(a, b).edges()) t.add_edge(u, v);
          for (int i = 0; i < l; ++i) {
            const int p = base + 3 * i;
            t.add_edge(0, p);
            t.add_edge(p, p + 1);
            t.add_edge(p + 1, p + 2);
          }
          g = std::move(t);
          break;
        }
        case NamedGraph::ThmGeneralSharp: {
          require(s.operands.size() == 1, "sharp: one base graph");
          Graph h = generate(s.operands[0]);
          require(static_cast<int>(s.params.size()) == h.order(), "sharp: need one t_i per vertex of H");
          int n = h.order();
          for (int t : s.params) {
            require(t >= 1, "sharp: t_i >= 1 required");
            n += 2 * t - 1;
          }
          require(n <= VertexSet::kMaxVertices, "sharp: too large");
          Graph out(n);
          for (auto [u, v] : h.edges()) out.add_edge(u, v);
          int next = h.order();
          for (int i = 0; i < h.order(); ++i) {
            const int len = 2 * s.params[i] - 1;
            out.add_edge(i, next);
            for (int j = 0; j + 1 < len; ++j) out.add_edge(next + j, next + j + 1);
            next += len;
          }
          g = std::move(out);
          break;
        }
        case NamedGraph::Kn1rLexEmpty: {
          require_params(s, 2, "starlexempty");
          require(s.params[0] >= 1 && s.params[1] >= 2, "starlexempty: r >= 1 and t >= 2 required");
          g = generate(FamilySpec::lex(FamilySpec::star(s.params[0]), FamilySpec::empty(s.params[1])));
          break;
        }
      }
      break;
    case Family::Graph6:
      g = parse_graph6(s.text);
      break;
    case Family::File: {
      std::ifstream in(s.text);
      if (!in) throw IOError("cannot open graph file '" + s.text + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string content = buf.str();
      // Edge lists start with "n m"; anything else is read as graph6.
      std::istringstream probe(content);
      long n = 0;
      long m = 0;
      if (probe >> n >> m)
        g = parse_edge_list(content);
      else {
        std::istringstream lines(content);
        auto all = read_graph6_stream(lines);
        if (all.empty()) throw ParseError("graph file '" + s.text + "' holds no graph");
        g = std::move(all.front());
      }
      break;
    }
  }
  g.set_name(to_string(s));
  return g;
}

int spec_order(const FamilySpec& s) {
  switch (s.family) {
    case Family::Path:
    case Family::Cycle:
    case Family::Complete:
    case Family::Empty:
      return s.params.empty() ? -1 : s.params[0];
    case Family::Star:
      return s.params.empty() ? -1 : s.params[0] + 1;
    case Family::DoubleStar:
      return s.params.size() < 2 ? -1 : s.params[0] + s.params[1] + 2;
    case Family::Hypercube:
      return s.params.empty() || s.params[0] < 0 || s.params[0] > 20 ? -1 : 1 << s.params[0];
    case Family::Tree:
      return static_cast<int>(s.edges.size()) + 1;
    case Family::Corona: {
      int n = s.operands.empty() ? -1 : spec_order(s.operands[0]);
      return n < 0 ? -1 : 2 * n;
    }
    case Family::Cartesian:
    case Family::Strong:
    case Family::Lex: {
      if (s.operands.size() != 2) return -1;
      int a = spec_order(s.operands[0]);
      int b = spec_order(s.operands[1]);
      return a < 0 || b < 0 ? -1 : a * b;
    }
    case Family::Named:
      switch (s.named) {
        case NamedGraph::FigGirth:
        case NamedGraph::FigBlock:
          return 16;
        case NamedGraph::PropPrGraph:
          return 15;
        case NamedGraph::PropPrTree:
          return 11;
        case NamedGraph::DisSharp:
          return 9;
        case NamedGraph::C8Chords:
          return 8;
        case NamedGraph::Fig1Tree:
          return s.params.size() < 3 ? -1 : s.params[0] + s.params[1] + 2 + 3 * s.params[2];
        case NamedGraph::ThmGeneralSharp: {
          if (s.operands.empty()) return -1;
          int n = spec_order(s.operands[0]);
          if (n < 0) return -1;
          for (int t : s.params) n += 2 * t - 1;
          return n;
        }
        case NamedGraph::Kn1rLexEmpty:
          return s.params.size() < 2 ? -1 : (s.params[0] + 1) * s.params[1];
      }
      return -1;
    case Family::Graph6:
    case Family::File:
      return -1;
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

const char* named_id(NamedGraph id) {
  switch (id) {
    case NamedGraph::FigGirth:
      return "fig-girth";
    case NamedGraph::PropPrGraph:
      return "prop-pr-graph";
    case NamedGraph::PropPrTree:
      return "prop-pr-tree";
    case NamedGraph::FigBlock:
      return "fig-block";
    case NamedGraph::DisSharp:
      return "dis-sharp";
    case NamedGraph::C8Chords:
      return "c8-chords";
    default:
      return nullptr;
  }
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec s = parse();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("graph spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a family name");
    std::string id(text_.substr(start, pos_ - start));
    for (auto& c : id) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return id;
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  bool digit_follows_comma() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ',') return false;
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  std::vector<int> int_list() {
    std::vector<int> out{integer()};
    while (digit_follows_comma()) {
      ++pos_;
      out.push_back(integer());
    }
    return out;
  }

  std::string raw_token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != ';') ++pos_;
    if (start == pos_) fail("expected a value");
    return std::string(text_.substr(start, pos_ - start));
  }

  FamilySpec parse() {
    const std::string id = ident();
    if (id == "corona" || id == "cartesian" || id == "strong" || id == "lex" || id == "sharp") {
      expect('(');
      std::vector<FamilySpec> operands{parse()};
      std::vector<int> ints;
      while (peek(',')) {
        if (digit_follows_comma()) {
          ++pos_;
          ints.push_back(integer());
        } else {
          ++pos_;
          if (!ints.empty()) fail("graph operand after integer parameters");
          operands.push_back(parse());
        }
      }
      expect(')');
      if (id == "corona") {
        if (operands.size() != 1 || !ints.empty()) fail("corona takes one graph");
        return FamilySpec::corona(std::move(operands[0]));
      }
      if (id == "sharp") {
        if (operands.size() != 1) fail("sharp takes one graph followed by t_1..t_s");
        return FamilySpec::general_sharp(std::move(operands[0]), std::move(ints));
      }
      if (operands.size() != 2 || !ints.empty()) fail("products take exactly two graphs");
      if (id == "cartesian") return FamilySpec::cartesian(std::move(operands[0]), std::move(operands[1]));
      if (id == "strong") return FamilySpec::strong(std::move(operands[0]), std::move(operands[1]));
      return FamilySpec::lex(std::move(operands[0]), std::move(operands[1]));
    }

    expect(':');
    if (id == "path") return FamilySpec::path(integer());
    if (id == "cycle") return FamilySpec::cycle(integer());
    if (id == "complete") return FamilySpec::complete(integer());
    if (id == "empty") return FamilySpec::empty(integer());
    if (id == "star") return FamilySpec::star(integer());
    if (id == "hypercube") return FamilySpec::hypercube(integer());
    if (id == "doublestar") {
      auto p = int_list();
      if (p.size() != 2) fail("doublestar takes a,b");
      return FamilySpec::double_star(p[0], p[1]);
    }
    if (id == "fig2tree") {
      auto p = int_list();
      if (p.size() != 3) fail("fig2tree takes a,b,l");
      return FamilySpec::named_graph(NamedGraph::Fig1Tree, p);
    }
    if (id == "starlexempty") {
      auto p = int_list();
      if (p.size() != 2) fail("starlexempty takes r,t");
      return FamilySpec::named_graph(NamedGraph::Kn1rLexEmpty, p);
    }
    if (id == "tree") {
      std::vector<Edge> edges;
      if (!peek(',') && !peek(')') && pos_ < text_.size()) {
        while (true) {
          int u = integer();
          expect('-');
          int v = integer();
          edges.emplace_back(u, v);
          if (!digit_follows_comma()) break;
          ++pos_;
        }
      }
      return FamilySpec::tree(std::move(edges));
    }
    if (id == "named") {
      const std::string name = ident();
      for (auto named : {NamedGraph::FigGirth, NamedGraph::PropPrGraph, NamedGraph::PropPrTree, NamedGraph::FigBlock,
                         NamedGraph::DisSharp, NamedGraph::C8Chords})
        if (name == named_id(named)) return FamilySpec::named_graph(named);
      fail("unknown named graph '" + name + "'");
    }
    if (id == "g6") {
      FamilySpec s = FamilySpec::of(Family::Graph6);
      s.text = raw_token();
      return s;
    }
    if (id == "file") {
      FamilySpec s = FamilySpec::of(Family::File);
      s.text = raw_token();
      return s;
    }
    fail("unknown family '" + id + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string to_string(const FamilySpec& s) {
  auto one = [&](const char* name) { return std::string(name) + ":" + (s.params.empty() ? "" : std::to_string(s.params[0])); };
  auto binary = [&](const char* name) {
    return std::string(name) + "(" + (s.operands.size() > 0 ? to_string(s.operands[0]) : "") + "," +
           (s.operands.size() > 1 ? to_string(s.operands[1]) : "") + ")";
  };
  switch (s.family) {
    case Family::Path:
      return one("path");
    case Family::Cycle:
      return one("cycle");
    case Family::Complete:
      return one("complete");
    case Family::Empty:
      return one("empty");
    case Family::Star:
      return one("star");
    case Family::Hypercube:
      return one("hypercube");
    case Family::DoubleStar:
      return "doublestar:" + join_ints(s.params);
    case Family::Tree: {
      std::string out = "tree:";
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.edges[i].first) + "-" + std::to_string(s.edges[i].second);
      }
      return out;
    }
    case Family::Corona:
      return "corona(" + (s.operands.empty() ? std::string{} : to_string(s.operands[0])) + ")";
    case Family::Cartesian:
      return binary("cartesian");
    case Family::Strong:
      return binary("strong");
    case Family::Lex:
      return binary("lex");
    case Family::Named:
      switch (s.named) {
        case NamedGraph::Fig1Tree:
          return "fig2tree:" + join_ints(s.params);
        case NamedGraph::Kn1rLexEmpty:
          return "starlexempty:" + join_ints(s.params);
        case NamedGraph::ThmGeneralSharp:
          return "sharp(" + (s.operands.empty() ? std::string{} : to_string(s.operands[0])) +
                 (s.params.empty() ? "" : "," + join_ints(s.params)) + ")";
        default:
          return std::string("named:") + named_id(s.named);
      }
    case Family::Graph6:
      return "g6:" + s.text;
    case Family::File:
      return "file:" + s.text;
  }
  return "?";
}

std::vector<int> fig_girth_coloring() { return {1, 2, 1, 2, 1, 2, 3, 1, 3, 1, 3, 1, 1, 2, 2, 2}; }

std::vector<int> prop_pr_graph_coloring() { return {2, 1, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 2}; }

std::vector<int> fig_block_coloring() { return {3, 3, 2, 2, 2, 1, 1, 1, 2, 2, 2, 1, 1, 3, 3, 1}; }

std::vector<int> fig1_tree_coloring(int a, int b, int l) {
  std::vector<int> c(a + b + 2 + 3 * l);
  c[0] = 2;
  c[1] = 1;
  for (int i = 0; i < a; ++i) c[2 + i] = 1;
  for (int i = 0; i < b; ++i) c[2 + a + i] = 2;
  for (int i = 0; i < l; ++i) {
    const int p = a + b + 2 + 3 * i;
    c[p] = 1;
    c[p + 1] = c[p + 2] = i + 3;
  }
  return c;
}

}  // namespace kdmv
