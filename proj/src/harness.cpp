#include "kdmv/harness.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "kdmv/chromatic.hpp"
#include "kdmv/constructions.hpp"
#include "kdmv/distance.hpp"
#include "kdmv/domination.hpp"
#include "kdmv/enumerate.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/graph6.hpp"
#include "kdmv/metrics.hpp"
#include "kdmv/products.hpp"
#include "kdmv/visibility.hpp"

namespace kdmv {
namespace {

constexpr std::array<const char*, 17> kCheckNames = {
    "ObsChain",       "OrderBound", "GammaTotalUpper",    "GirthGammaLower", "ClosedNbhdLemma",
    "ThmDis",         "TriangleFreeDis", "LexicChain",    "ThmCon",          "StrongProductBound",
    "CartesianLower", "QnStructure", "FormulaAgreement", "ConstructionValidity", "OpenQnEquality",
    "OpenCartesianGamma", "OpenBlockTheta"};

// Largest order on which companion values are computed for skipped instances.
constexpr int kCompanionLimit = 24;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<std::vector<int>> class_lists(const Coloring& c) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : c.classes()) out.push_back(cls.to_vector());
  return out;
}

struct BudgetSkip {
  std::string key;
};

// Lazily computed invariants of one graph. Exact values land in the record
// under `prefix`; an inexact solve raises BudgetSkip.
class Ctx {
 public:
  Ctx(Graph g, InstanceRecord* rec, std::string prefix = {})
      : g_(std::move(g)), rec_(rec), prefix_(std::move(prefix)) {}

  const Graph& g() const { return g_; }
  int n() const { return g_.order(); }
  const DistanceMatrix& dm() {
    if (!dm_) dm_ = all_pairs_distances(g_);
    return *dm_;
  }
  const GraphMetrics& met() {
    if (!met_) met_ = metrics(g_, dm());
    return *met_;
  }
  bool connected() { return n() > 0 && met().connected; }
  int diam() { return met().diameter; }
  int girth() { return met().girth; }
  bool isolate_free() const { return n() > 0 && !g_.has_isolated_vertex(); }

  const SolveResult& solve(const std::string& key, std::uint64_t budget,
                           const std::function<SolveResult(std::uint64_t)>& run) {
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      if (it->second.second.exact()) return it->second.second;
      if (it->second.first >= budget) throw BudgetSkip{prefix_ + key};
    }
    SolveResult r = run(budget);
    if (rec_) {
      rec_->nodes += r.nodes;
      if (r.exact()) {
        rec_->values[prefix_ + key] = r.value;
        if (prefix_.empty()) {
          if (r.coloring) rec_->witnesses[key] = class_lists(*r.coloring);
          else if (r.set) rec_->witnesses[key] = {r.set->to_vector()};
        }
      }
    }
    auto& slot = cache_[key];
    slot = {budget, std::move(r)};
    if (!slot.second.exact()) throw BudgetSkip{prefix_ + key};
    return slot.second;
  }

  const SolveResult& chi_r(int k, std::uint64_t b) {
    return solve("chi_mu_" + std::to_string(k), b, [&](std::uint64_t x) { return chi_mu_k_exact(g_, k, x); });
  }
  int chi(int k, std::uint64_t b) { return chi_r(k, b).value; }
  int theta(std::uint64_t b) {
    return solve("theta", b, [&](std::uint64_t x) { return clique_cover_theta(g_, x); }).value;
  }
  const SolveResult& gamma_r(std::uint64_t b) {
    return solve("gamma", b, [&](std::uint64_t x) { return gamma_exact(g_, x); });
  }
  int gamma(std::uint64_t b) { return gamma_r(b).value; }
  const SolveResult& gamma_t_r(std::uint64_t b) {
    return solve("gamma_t", b, [&](std::uint64_t x) { return gamma_t_exact(g_, x); });
  }
  int gamma_t(std::uint64_t b) { return gamma_t_r(b).value; }
  int gamma_k(int k, std::uint64_t b) {
    return solve("gamma_k_" + std::to_string(k), b, [&](std::uint64_t x) { return gamma_k_exact(g_, k, x); }).value;
  }
  int rho2(std::uint64_t b) {
    return solve("rho2", b, [&](std::uint64_t x) { return rho2_exact(g_, x); }).value;
  }
  int mu(int k, std::uint64_t b) {
    return solve("mu_" + std::to_string(k), b, [&](std::uint64_t x) { return max_kdmv(g_, k, x); }).value;
  }
  const SolveResult& chi_i_r(std::uint64_t b) {
    return solve("chi_i_mu2", b, [&](std::uint64_t x) { return chi_i_mu2_exact(g_, x); });
  }
  int chi_i(std::uint64_t b) { return chi_i_r(b).value; }
  int theta_nd2(std::uint64_t b) {
    return solve("theta_nd2", b, [&](std::uint64_t x) { return clique_cover_theta(exact_distance_graph(g_, 2), x); })
        .value;
  }

 private:
  Graph g_;
  InstanceRecord* rec_;
  std::string prefix_;
  std::optional<DistanceMatrix> dm_;
  std::optional<GraphMetrics> met_;
  std::map<std::string, std::pair<std::uint64_t, SolveResult>> cache_;
};

class Outcome {
 public:
  explicit Outcome(CheckId id) { out_.id = id; }

  void expect(bool ok, const std::string& what) {
    ++out_.comparisons;
    if (!ok) failed_ = true;
    note(ok ? what : "VIOLATED " + what);
  }
  void note(const std::string& s) {
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += s;
  }
  int comparisons() const { return out_.comparisons; }
  bool failed() const { return failed_; }

  CheckOutcome finish() {
    out_.verdict = failed_ ? Verdict::Fail : Verdict::Pass;
    return out_;
  }
  CheckOutcome finding(bool holds) {
    out_.verdict = Verdict::Finding;
    out_.relation_holds = holds;
    return out_;
  }
  CheckOutcome skip(Verdict v, const std::string& why) {
    out_.verdict = v;
    note(why);
    return out_;
  }

 private:
  CheckOutcome out_;
  bool failed_ = false;
};

std::string rel(const std::string& a, int x, const char* op, const std::string& b, int y) {
  return a + "=" + std::to_string(x) + " " + op + " " + b + "=" + std::to_string(y);
}

struct Factor {
  std::string name;
  Graph g;
};

const std::vector<Factor>& product_factors() {
  static const std::vector<Factor> f = {{"K2", generate(FamilySpec::path(2))},
                                        {"P3", generate(FamilySpec::path(3))},
                                        {"C4", generate(FamilySpec::cycle(4))}};
  return f;
}

const std::vector<Factor>& lex_factors() {
  static const std::vector<Factor> f = {{"K2", generate(FamilySpec::path(2))},
                                        {"2K1", generate(FamilySpec::empty(2))},
                                        {"P3", generate(FamilySpec::path(3))}};
  return f;
}

struct Env {
  const CorpusItem& item;
  const CheckSpec& spec;
  InstanceRecord& rec;
  Ctx& c;
  std::uint64_t b() const { return spec.budget; }
};

bool spec_is(const std::optional<FamilySpec>& s, Family f) { return s && s->family == f; }

// Tagged hypercubes, or untagged graphs isomorphic to Q_d with d <= 4.
std::optional<int> hypercube_dim(const CorpusItem& item) {
  if (spec_is(item.spec, Family::Hypercube) && item.spec->params.size() == 1) return item.spec->params[0];
  const Graph& g = item.graph;
  for (int d = 1; d <= 4; ++d) {
    if (g.order() != (1 << d) || g.size() != d << (d - 1)) continue;
    if (are_isomorphic(g, generate(FamilySpec::hypercube(d)))) return d;
  }
  return std::nullopt;
}

// ---- theorem checks ------------------------------------------------------

CheckOutcome obs_chain(Env& e) {
  Outcome o(CheckId::ObsChain);
  auto& c = e.c;
  if (c.n() < 2) return o.skip(Verdict::SkippedHypothesis, "order below 2");
  if (!c.connected()) return o.skip(Verdict::SkippedHypothesis, "disconnected");
  const int d = c.diam();
  std::vector<int> chi(d + 2);
  for (int k = 1; k <= d + 1; ++k) chi[k] = c.chi(k, e.b());
  o.expect(chi[1] == c.theta(e.b()), rel("chi_mu_1", chi[1], "==", "theta", c.theta(e.b())));
  for (int k = 1; k < d; ++k)
    o.expect(chi[k + 1] <= chi[k], rel("chi_mu_" + std::to_string(k + 1), chi[k + 1], "<=",
                                       "chi_mu_" + std::to_string(k), chi[k]));
  o.expect(chi[d + 1] == chi[d], rel("chi_mu_" + std::to_string(d + 1), chi[d + 1], "==",
                                     "chi_mu_" + std::to_string(d), chi[d]));
  return o.finish();
}

CheckOutcome order_bound(Env& e) {
  Outcome o(CheckId::OrderBound);
  auto& c = e.c;
  if (c.n() < 1) return o.skip(Verdict::SkippedHypothesis, "empty graph");
  const int top = c.connected() ? std::max(c.diam(), 2) : 2;
  for (int k = 1; k <= top; ++k) {
    const std::string ks = std::to_string(k);
    const int chi = c.chi(k, e.b());
    const int mu = c.mu(k, e.b());
    o.expect(chi >= ceil_div(c.n(), mu), rel("chi_mu_" + ks, chi, ">=", "ceil(n/mu_" + ks + ")", ceil_div(c.n(), mu)));
    const int gk = c.gamma_k(k, e.b());
    o.expect(gk <= chi, rel("gamma_k_" + ks, gk, "<=", "chi_mu_" + ks, chi));
    if (k == 2) o.expect(c.rho2(e.b()) <= chi, rel("rho2", c.rho2(e.b()), "<=", "chi_mu_2", chi));
  }
  return o.finish();
}

CheckOutcome gamma_total_upper(Env& e) {
  Outcome o(CheckId::GammaTotalUpper);
  auto& c = e.c;
  if (!c.isolate_free()) return o.skip(Verdict::SkippedHypothesis, "isolated vertex");
  const auto& gt = c.gamma_t_r(e.b());
  const int chi = c.chi(2, e.b());
  o.expect(chi <= gt.value, rel("chi_mu_2", chi, "<=", "gamma_t", gt.value));
  const Coloring p = total_dom_partition(c.g(), gt.set->to_vector());
  o.expect(p.num_classes() == gt.value, rel("partition classes", p.num_classes(), "==", "gamma_t", gt.value));
  return o.finish();
}

// Records companion values on a hypothesis skip when they are cheap.
template <class F>
void companion(Ctx& c, Outcome& o, F&& f) {
  if (c.n() > kCompanionLimit) return;
  try {
    f();
  } catch (const BudgetSkip& s) {
    o.note("companion budget exhausted at " + s.key);
  }
}

std::string girth_text(int g) { return g == kInfiniteGirth ? "inf" : std::to_string(g); }

CheckOutcome girth_gamma_lower(Env& e) {
  Outcome o(CheckId::GirthGammaLower);
  auto& c = e.c;
  if (c.n() < 1) return o.skip(Verdict::SkippedHypothesis, "empty graph");
  if (c.girth() < 7) {
    companion(c, o, [&] {
      o.note("companion " + rel("gamma", c.gamma(e.b()), "vs", "chi_mu_2", c.chi(2, e.b())));
    });
    return o.skip(Verdict::SkippedHypothesis, "girth " + girth_text(c.girth()) + " below 7");
  }
  const int chi = c.chi(2, e.b());
  o.expect(chi >= c.gamma(e.b()), rel("chi_mu_2", chi, ">=", "gamma", c.gamma(e.b())));
  return o.finish();
}

CheckOutcome closed_nbhd_lemma(Env& e) {
  Outcome o(CheckId::ClosedNbhdLemma);
  auto& c = e.c;
  if (c.n() < 1) return o.skip(Verdict::SkippedHypothesis, "empty graph");
  if (c.girth() < 7) return o.skip(Verdict::SkippedHypothesis, "girth " + girth_text(c.girth()) + " below 7");
  const auto& r = c.chi_r(2, e.b());
  const auto classes = r.coloring->classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    bool closed = false;
    bool open = false;
    for (int v = 0; v < c.n(); ++v) {
      closed = closed || cls.subset_of(c.g().closed_neighborhood(v));
      open = open || cls.subset_of(c.g().neighbors(v));
    }
    const std::string name = "class " + cls.to_string();
    o.expect(closed, name + " inside a closed neighborhood");
    if (cls.count() >= 3) o.expect(open, name + " inside an open neighborhood");
  }
  return o.finish();
}

CheckOutcome thm_dis(Env& e) {
  Outcome o(CheckId::ThmDis);
  auto& c = e.c;
  if (!c.isolate_free()) return o.skip(Verdict::SkippedHypothesis, "isolated vertex");
  if (c.girth() < 7) {
    companion(c, o, [&] {
      o.note("companion " + rel("gamma_t", c.gamma_t(e.b()), "vs", "theta_nd2", c.theta_nd2(e.b())));
    });
    return o.skip(Verdict::SkippedHypothesis, "girth " + girth_text(c.girth()) + " below 7");
  }
  const int t = c.theta_nd2(e.b());
  const int ci = c.chi_i(e.b());
  const auto& gt = c.gamma_t_r(e.b());
  o.expect(t == ci, rel("theta_nd2", t, "==", "chi_i_mu2", ci));
  o.expect(ci == gt.value, rel("chi_i_mu2", ci, "==", "gamma_t", gt.value));
  const Coloring p = neighborhood_i2dmv_partition(c.g(), gt.set->to_vector());
  o.expect(p.num_classes() == gt.value, rel("I2DMV partition classes", p.num_classes(), "==", "gamma_t", gt.value));
  return o.finish();
}

CheckOutcome triangle_free_dis(Env& e) {
  Outcome o(CheckId::TriangleFreeDis);
  auto& c = e.c;
  if (!c.isolate_free()) return o.skip(Verdict::SkippedHypothesis, "isolated vertex");
  if (c.girth() < 4) return o.skip(Verdict::SkippedHypothesis, "contains a triangle");
  const int t = c.theta_nd2(e.b());
  o.expect(t <= c.gamma_t(e.b()), rel("theta_nd2", t, "<=", "gamma_t", c.gamma_t(e.b())));
  return o.finish();
}

CheckOutcome lexic_chain(Env& e) {
  Outcome o(CheckId::LexicChain);
  auto& c = e.c;
  if (c.n() < 2) return o.skip(Verdict::SkippedHypothesis, "order below 2");
  if (!c.connected()) return o.skip(Verdict::SkippedHypothesis, "disconnected");
  bool any = false;
  for (const auto& h : lex_factors()) {
    if (c.n() * h.g.order() > e.spec.product_limit) continue;
    any = true;
    Ctx p(product(ProductKind::Lexicographic, c.g(), h.g), &e.rec, "lex(G," + h.name + ").");
    const int tnd = c.theta_nd2(e.b());
    const int chi = p.chi(2, e.b());
    const int tp = p.theta_nd2(e.b());
    o.expect(chi <= tnd, rel("chi_mu_2(G lex " + h.name + ")", chi, "<=", "theta_nd2(G)", tnd));
    o.expect(tnd <= tp, rel("theta_nd2(G)", tnd, "<=", "theta_nd2(G lex " + h.name + ")", tp));
    const Coloring built = lex_coloring_from_i2dmv(c.g(), *c.chi_i_r(e.b()).coloring, h.g);
    o.expect(built.num_classes() == tnd, rel("lex classes with " + h.name, built.num_classes(), "==", "theta_nd2", tnd));
  }
  if (!any) return o.skip(Verdict::SkippedBudget, "product order above limit");
  o.expect(c.chi_i(e.b()) == c.theta_nd2(e.b()), rel("chi_i_mu2", c.chi_i(e.b()), "==", "theta_nd2", c.theta_nd2(e.b())));
  return o.finish();
}

CheckOutcome thm_con(Env& e) {
  Outcome o(CheckId::ThmCon);
  auto& c = e.c;
  if (c.n() < 1 || c.g().min_degree() < 2) return o.skip(Verdict::SkippedHypothesis, "minimum degree below 2");
  if (c.girth() < 5) return o.skip(Verdict::SkippedHypothesis, "girth " + girth_text(c.girth()) + " below 5");
  bool any = false;
  for (const auto& h : lex_factors()) {
    if (c.n() * h.g.order() > e.spec.product_limit) continue;
    any = true;
    Ctx p(product(ProductKind::Lexicographic, c.g(), h.g), &e.rec, "lex(G," + h.name + ").");
    const auto& cg = c.chi_r(2, e.b());
    const int chi = p.chi(2, e.b());
    o.expect(chi <= cg.value, rel("chi_mu_2(G lex " + h.name + ")", chi, "<=", "chi_mu_2(G)", cg.value));
    const Coloring built = lex_coloring_from_2dmv(c.g(), *cg.coloring, h.g);
    o.expect(built.num_classes() == cg.value, rel("lex classes with " + h.name, built.num_classes(), "==", "chi_mu_2", cg.value));
  }
  if (!any) return o.skip(Verdict::SkippedBudget, "product order above limit");
  return o.finish();
}

CheckOutcome strong_product_bound(Env& e) {
  Outcome o(CheckId::StrongProductBound);
  auto& c = e.c;
  if (c.n() < 1) return o.skip(Verdict::SkippedHypothesis, "empty graph");
  bool any = false;
  for (const auto& h : product_factors()) {
    if (c.n() * h.g.order() > e.spec.product_limit) continue;
    any = true;
    Ctx hc(h.g, nullptr);
    Ctx p(product(ProductKind::Strong, c.g(), h.g), &e.rec, "strong(G," + h.name + ").");
    for (int k = 1; k <= 3; ++k) {
      const auto& cg = c.chi_r(k, e.b());
      const auto& ch = hc.chi_r(k, e.b());
      const int chi = p.chi(k, e.b());
      const std::string ks = std::to_string(k);
      o.expect(chi <= cg.value * ch.value,
               rel("chi_mu_" + ks + "(G strong " + h.name + ")", chi, "<=", "product of factors", cg.value * ch.value));
      const Coloring built = product_coloring_strong(c.g(), *cg.coloring, h.g, *ch.coloring, k);
      o.expect(built.num_classes() == cg.value * ch.value,
               rel("strong classes k=" + ks, built.num_classes(), "==", "product of factors", cg.value * ch.value));
    }
  }
  if (!any) return o.skip(Verdict::SkippedBudget, "product order above limit");
  return o.finish();
}

CheckOutcome cartesian_lower(Env& e) {
  Outcome o(CheckId::CartesianLower);
  auto& c = e.c;
  if (!c.connected()) return o.skip(Verdict::SkippedHypothesis, "disconnected");
  bool any = false;
  for (const auto& h : product_factors()) {
    if (c.n() * h.g.order() > e.spec.product_limit) continue;
    any = true;
    Ctx hc(h.g, nullptr);
    Ctx p(product(ProductKind::Cartesian, c.g(), h.g), &e.rec, "cartesian(G," + h.name + ").");
    const int bound = std::max(c.chi(2, e.b()) * hc.rho2(e.b()), hc.chi(2, e.b()) * c.rho2(e.b()));
    const int chi = p.chi(2, e.b());
    o.expect(chi >= bound, rel("chi_mu_2(G box " + h.name + ")", chi, ">=", "packing bound", bound));
  }
  if (!any) return o.skip(Verdict::SkippedBudget, "product order above limit");
  return o.finish();
}

CheckOutcome qn_structure(Env& e) {
  Outcome o(CheckId::QnStructure);
  auto& c = e.c;
  const auto dim = hypercube_dim(e.item);
  if (!dim) return o.skip(Verdict::SkippedHypothesis, "not a hypercube");
  if (*dim > 4) return o.skip(Verdict::SkippedBudget, "dimension above 4");
  // The classifier and the neighborhood coloring use bit-string labels.
  Ctx q(generate(FamilySpec::hypercube(*dim)), nullptr);
  const int n = q.n();
  std::vector<std::uint32_t> far(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (q.dm()(u, v) > 2) far[u] |= 1U << v;
  std::array<int, 5> counts{};
  bool all_ok = true;
  int sets = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    bool diam2 = true;
    for (int v = 0; v < n && diam2; ++v)
      if (((mask >> v) & 1U) && (mask & far[v])) diam2 = false;
    if (!diam2) continue;
    ++sets;
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.set(v);
    const auto cls = classify_q_n_diam2_set(*dim, s);
    ++counts[static_cast<int>(cls.kind)];
    bool ok = false;
    switch (cls.kind) {
      case QnSetKind::WithinClosedNeighborhood:
        ok = cls.center >= 0 && s.subset_of(q.g().closed_neighborhood(cls.center));
        break;
      case QnSetKind::Square: {
        ok = s.count() == 4;
        for (int v : s) ok = ok && (q.g().neighbors(v) & s).count() == 2;
        break;
      }
      case QnSetKind::Q3PartiteSet: {
        ok = s.count() == 4 && is_independent(q.g(), s);
        for (int u : s)
          for (int v : s) ok = ok && (u == v || q.dm()(u, v) == 2);
        break;
      }
      default:
        ok = false;
    }
    if (!ok) {
      all_ok = false;
      o.note("misclassified " + s.to_string() + " as " + to_string(cls.kind));
    }
  }
  o.expect(all_ok, std::to_string(sets) + " diameter-2 sets classified (" + std::to_string(counts[0]) +
                       " in a closed neighborhood, " + std::to_string(counts[1]) + " squares, " +
                       std::to_string(counts[2]) + " cube partite sets)");
  const auto& gam = q.gamma_r(e.b());
  o.expect(gam.value == c.gamma(e.b()), rel("gamma of labeled cube", gam.value, "==", "gamma", c.gamma(e.b())));
  const Coloring nb = hypercube_neighborhood_coloring(*dim, gam.set->to_vector());
  o.expect(nb.num_classes() <= gam.value, rel("neighborhood classes", nb.num_classes(), "<=", "gamma", gam.value));
  const int chi = c.chi(2, e.b());
  o.expect(chi <= gam.value, rel("chi_mu_2", chi, "<=", "gamma", gam.value));
  return o.finish();
}

// A formula value on an instance too large for the exact solver: accepted
// when a verified construction meets it and, for tori, the order bound too.
bool formula_only(Env& e, Outcome& o, const FamilySpec& s, int k, int f) {
  if (s.family == Family::Cartesian && s.operands.size() == 2 && k == 2) {
    const int m = s.operands[0].params.at(0);
    const int n = s.operands[1].params.at(0);
    if (m < n) return false;
    const Coloring col = torus_eod_coloring(m, n);
    o.expect(col.num_classes() == f, rel("torus construction classes", col.num_classes(), "==", "formula", f));
    const int mu = e.c.mu(2, e.b());
    o.expect(ceil_div(e.c.n(), mu) == f, rel("ceil(n/mu_2)", ceil_div(e.c.n(), mu), "==", "formula", f));
    return true;
  }
  if (s.family == Family::Strong && s.operands.size() == 2) {
    const Coloring col = color_strong_path_complete(s.operands[0].params.at(0), s.operands[1].params.at(0), k);
    o.expect(col.num_classes() == f, rel("strong construction classes k=" + std::to_string(k), col.num_classes(),
                                         "==", "formula", f));
    o.note("formula-only verification");
    return true;
  }
  return false;
}

CheckOutcome formula_agreement(Env& e) {
  Outcome o(CheckId::FormulaAgreement);
  auto& c = e.c;
  if (!c.connected()) return o.skip(Verdict::SkippedHypothesis, "disconnected");
  const FamilySpec s = e.item.spec ? *e.item.spec : parse_family_spec("g6:" + to_graph6(c.g()));
  const int d = c.diam();
  std::vector<int> ks = {1, 2, 3, std::max(d, 1)};
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  bool too_large = false;
  for (int k : ks) {
    const auto f = formula_chi_mu_k(s, k);
    if (!f) continue;
    if (c.n() <= e.spec.exact_limit) {
      const int chi = c.chi(k, e.b());
      o.expect(chi == *f, rel("chi_mu_" + std::to_string(k), chi, "==", "formula", *f));
    } else if (!formula_only(e, o, s, k, *f)) {
      too_large = true;
    }
  }
  if (d >= 2 && blocks(c.g()).is_block_graph) {
    if (c.n() <= e.spec.exact_limit) {
      const int deg_star = center_info(c.g(), c.dm()).deg_star;
      const int cap = ceil_div(d + 1, 2);
      const bool equal = c.chi(d - 1, e.b()) == c.chi(d, e.b());
      o.expect(equal == (deg_star <= cap), "chi_mu_" + std::to_string(d - 1) + (equal ? " == " : " != ") + "chi_mu iff deg*=" +
                                               std::to_string(deg_star) + (deg_star <= cap ? " <= " : " > ") + std::to_string(cap));
    } else {
      too_large = true;
    }
  }
  if (o.comparisons() == 0) {
    if (too_large) return o.skip(Verdict::SkippedBudget, "order above exact limit");
    return o.skip(Verdict::SkippedHypothesis, "no closed form");
  }
  return o.finish();
}

CheckOutcome construction_validity(Env& e) {
  Outcome o(CheckId::ConstructionValidity);
  auto& c = e.c;
  if (c.n() < 1) return o.skip(Verdict::SkippedHypothesis, "empty graph");
  const int n = c.n();
  auto guarded = [&](const char* what, const std::function<void()>& f) {
    try {
      f();
    } catch (const BudgetSkip& s) {
      o.note(std::string(what) + " skipped, budget exhausted at " + s.key);
    }
  };
  if (c.connected()) {
    const Coloring half = tree_half_coloring(c.g());
    o.expect(half.num_classes() <= ceil_div(n, 2), rel("tree classes", half.num_classes(), "<=", "ceil(n/2)", ceil_div(n, 2)));
    if (n <= e.spec.exact_limit)
      guarded("order bound", [&] {
        o.expect(c.chi(2, e.b()) <= ceil_div(n, 2), rel("chi_mu_2", c.chi(2, e.b()), "<=", "ceil(n/2)", ceil_div(n, 2)));
      });
  }
  if (c.isolate_free() && n <= kCompanionLimit) {
    guarded("total domination partition", [&] {
      const auto& gt = c.gamma_t_r(e.b());
      const Coloring p = total_dom_partition(c.g(), gt.set->to_vector());
      o.expect(p.num_classes() == gt.value, rel("total domination classes", p.num_classes(), "==", "gamma_t", gt.value));
      if (c.girth() >= 7) {
        const Coloring q = neighborhood_i2dmv_partition(c.g(), gt.set->to_vector());
        o.expect(q.num_classes() == gt.value, rel("I2DMV classes", q.num_classes(), "==", "gamma_t", gt.value));
      }
    });
  }
  if (c.connected() && c.diam() >= 2 && blocks(c.g()).is_block_graph) {
    const int d = c.diam();
    const int cap = ceil_div(d + 1, 2);
    if (center_info(c.g(), c.dm()).deg_star <= cap) {
      const Coloring col = block_graph_coloring(c.g());
      o.expect(col.num_classes() == cap, rel("block classes", col.num_classes(), "==", "ceil((d+1)/2)", cap));
    } else {
      bool refused = false;
      try {
        block_graph_coloring(c.g());
      } catch (const ConditionError&) {
        refused = true;
      }
      o.expect(refused, "block coloring refused when deg* exceeds ceil((d+1)/2)");
    }
  }
  if (const auto& s = e.item.spec) {
    const auto& p = s->params;
    if (s->family == Family::Path) {
      for (int k = 1; k <= 3; ++k)
        o.expect(color_path(p[0], k).num_classes() == ceil_div(p[0], 2), "path coloring k=" + std::to_string(k));
    } else if (s->family == Family::Cycle) {
      for (int k = 1; k <= 3; ++k) {
        const int f = *formula_chi_mu_k(*s, k);
        o.expect(color_cycle(p[0], k).num_classes() == f, "cycle coloring k=" + std::to_string(k));
      }
    } else if (s->family == Family::Strong && formula_chi_mu_k(*s, 2)) {
      const int pn = s->operands[0].params[0];
      const int pm = s->operands[1].params[0];
      for (int k = 2; k <= pn - 2; ++k)
        o.expect(color_strong_path_complete(pn, pm, k).num_classes() == *formula_chi_mu_k(*s, k),
                 "strong path-complete coloring k=" + std::to_string(k));
    } else if (s->family == Family::Cartesian && s->operands.size() == 2) {
      const auto& a = s->operands[0];
      const auto& b = s->operands[1];
      if (a.family == Family::Cycle && b.family == Family::Cycle && formula_chi_mu_k(*s, 2) &&
          a.params[0] >= b.params[0]) {
        const int f = *formula_chi_mu_k(*s, 2);
        o.expect(torus_eod_coloring(a.params[0], b.params[0]).num_classes() == f, rel("torus classes", f, "==", "mn/4", f));
      } else if (a.family == Family::Corona && b.family == Family::Cycle && b.params[0] == 4) {
        const Graph inner = generate(a.operands.at(0));
        if (find_perfect_matching(inner)) {
          const Coloring col = cartesian_corona_c4_coloring(inner);
          o.expect(col.num_classes() == 2 * inner.order(),
                   rel("corona box C4 classes", col.num_classes(), "==", "2|V|", 2 * inner.order()));
        }
      }
    } else if (s->family == Family::Hypercube && n <= kCompanionLimit) {
      guarded("hypercube neighborhoods", [&] {
        const auto& gam = c.gamma_r(e.b());
        const Coloring col = hypercube_neighborhood_coloring(p[0], gam.set->to_vector());
        o.expect(col.num_classes() <= gam.value, rel("neighborhood classes", col.num_classes(), "<=", "gamma", gam.value));
      });
    } else if (s->family == Family::Named) {
      auto fixture = [&](const std::string& name, const std::vector<int>& labels, int k, int classes) {
        const Coloring col = Coloring::from_labels(labels);
        o.expect(verify_kdmv_coloring(c.g(), k, col).ok && col.num_classes() == classes,
                 name + " labeling verifies with " + std::to_string(classes) + " classes at k=" + std::to_string(k));
      };
      switch (s->named) {
        case NamedGraph::FigGirth:
          fixture("fig-girth", fig_girth_coloring(), 2, 3);
          break;
        case NamedGraph::PropPrGraph:
          fixture("prop-pr-graph", prop_pr_graph_coloring(), 2, 2);
          break;
        case NamedGraph::FigBlock:
          fixture("fig-block", fig_block_coloring(), c.diam() - 1, 3);
          break;
        case NamedGraph::Fig1Tree:
          if (p.size() == 3) fixture("fig2tree", fig1_tree_coloring(p[0], p[1], p[2]), 2, p[2] + 2);
          break;
        default:
          break;
      }
    }
  }
  if (o.comparisons() == 0) return o.skip(Verdict::SkippedHypothesis, "no construction applies");
  return o.finish();
}

// ---- open problems ------------------------------------------------------

CheckOutcome open_qn_equality(Env& e) {
  Outcome o(CheckId::OpenQnEquality);
  const auto dim = hypercube_dim(e.item);
  if (!dim) return o.skip(Verdict::SkippedHypothesis, "not a hypercube");
  if (*dim > 4) return o.skip(Verdict::SkippedBudget, "dimension above 4");
  const int chi = e.c.chi(2, e.b());
  const int gam = e.c.gamma(e.b());
  o.note(rel("chi_mu_2", chi, chi == gam ? "==" : "!=", "gamma", gam));
  return o.finding(chi == gam);
}

bool cartesian_gamma_pair(Ctx& g, Ctx& h, Ctx& p, const std::string& hname, std::uint64_t b, Outcome& o) {
  const int bound = std::max(g.chi(2, b) * h.gamma(b), h.chi(2, b) * g.gamma(b));
  const int chi = p.chi(2, b);
  o.note(rel("chi_mu_2(G box " + hname + ")", chi, chi >= bound ? ">=" : "<", "domination bound", bound));
  return chi >= bound;
}

CheckOutcome open_cartesian_gamma(Env& e) {
  Outcome o(CheckId::OpenCartesianGamma);
  auto& c = e.c;
  if (!c.connected()) return o.skip(Verdict::SkippedHypothesis, "disconnected");
  bool any = false;
  bool holds = true;
  for (const auto& h : product_factors()) {
    if (c.n() * h.g.order() > e.spec.product_limit) continue;
    any = true;
    Ctx hc(h.g, nullptr);
    Ctx p(product(ProductKind::Cartesian, c.g(), h.g), &e.rec, "cartesian(G," + h.name + ").");
    holds = cartesian_gamma_pair(c, hc, p, h.name, e.b(), o) && holds;
  }
  if (!any) return o.skip(Verdict::SkippedBudget, "product order above limit");
  return o.finding(holds);
}

CheckOutcome open_block_theta(Env& e) {
  Outcome o(CheckId::OpenBlockTheta);
  auto& c = e.c;
  if (!c.connected() || !blocks(c.g()).is_block_graph) return o.skip(Verdict::SkippedHypothesis, "not a block graph");
  const int chi = c.chi(2, e.b());
  const int th = c.theta(e.b());
  o.note(rel("chi_mu_2", chi, chi == th ? "==" : "!=", "theta", th));
  return o.finding(chi == th);
}

CheckOutcome run_check(Env& e) {
  const CheckId id = e.spec.id;
  try {
    switch (id) {
      case CheckId::ObsChain: return obs_chain(e);
      case CheckId::OrderBound: return order_bound(e);
      case CheckId::GammaTotalUpper: return gamma_total_upper(e);
      case CheckId::GirthGammaLower: return girth_gamma_lower(e);
      case CheckId::ClosedNbhdLemma: return closed_nbhd_lemma(e);
      case CheckId::ThmDis: return thm_dis(e);
      case CheckId::TriangleFreeDis: return triangle_free_dis(e);
      case CheckId::LexicChain: return lexic_chain(e);
      case CheckId::ThmCon: return thm_con(e);
      case CheckId::StrongProductBound: return strong_product_bound(e);
      case CheckId::CartesianLower: return cartesian_lower(e);
      case CheckId::QnStructure: return qn_structure(e);
      case CheckId::FormulaAgreement: return formula_agreement(e);
      case CheckId::ConstructionValidity: return construction_validity(e);
      case CheckId::OpenQnEquality: return open_qn_equality(e);
      case CheckId::OpenCartesianGamma: return open_cartesian_gamma(e);
      case CheckId::OpenBlockTheta: return open_block_theta(e);
    }
  } catch (const BudgetSkip& s) {
    Outcome o(id);
    return o.skip(Verdict::SkippedBudget, "budget exhausted at " + s.key);
  } catch (const std::exception& ex) {
    // A construction failing its own verification, or an unexpected error.
    Outcome o(id);
    if (is_open(id)) return o.skip(Verdict::SkippedBudget, std::string("error: ") + ex.what());
    o.expect(false, std::string("error: ") + ex.what());
    return o.finish();
  }
  return {};
}

InstanceRecord make_record(const std::string& name, Ctx& c) {
  InstanceRecord r;
  r.name = name;
  r.graph6 = to_graph6(c.g());
  r.n = c.n();
  r.m = c.g().size();
  if (c.n() > 0) {
    r.girth = c.girth() == kInfiniteGirth ? -1 : c.girth();
    r.diam = c.connected() ? c.diam() : -1;
  }
  return r;
}

void summarize(Report& report) {
  SuiteSummary s;
  s.instances = static_cast<int>(report.instances.size());
  for (const auto& rec : report.instances) {
    for (const auto& o : rec.checks) {
      const std::string id = to_string(o.id);
      s.coverage.try_emplace(id, 0);
      switch (o.verdict) {
        case Verdict::Pass:
          ++s.checked;
          ++s.passed;
          s.coverage[id] += o.comparisons;
          break;
        case Verdict::Fail:
          ++s.checked;
          ++s.failed;
          s.coverage[id] += o.comparisons;
          break;
        case Verdict::Finding:
          ++s.checked;
          ++s.findings;
          if (o.relation_holds == false) ++s.counterexamples;
          break;
        case Verdict::SkippedBudget:
          ++s.skipped_budget;
          break;
        case Verdict::SkippedHypothesis:
          ++s.skipped_hypothesis;
          break;
      }
    }
  }
  report.summary = std::move(s);
}

std::vector<CorpusItem> named_graphs(const std::vector<Graph>& gs, const std::string& prefix) {
  std::vector<CorpusItem> out;
  out.reserve(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i)
    out.push_back({prefix + "#" + std::to_string(i), gs[i], std::nullopt});
  return out;
}

std::vector<CorpusItem> read_file_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read corpus file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<Graph> gs;
  try {
    std::istringstream is(text);
    gs = read_graph6_stream(is);
  } catch (const ParseError&) {
    gs = {parse_edge_list(text)};
  }
  return named_graphs(gs, path);
}

}  // namespace

const char* to_string(CheckId id) { return kCheckNames[static_cast<int>(id)]; }

std::optional<CheckId> parse_check_id(std::string_view text) {
  for (std::size_t i = 0; i < kCheckNames.size(); ++i)
    if (text == kCheckNames[i]) return static_cast<CheckId>(i);
  return std::nullopt;
}

bool is_open(CheckId id) {
  return id == CheckId::OpenQnEquality || id == CheckId::OpenCartesianGamma || id == CheckId::OpenBlockTheta;
}

std::vector<CheckId> all_theorem_checks() {
  std::vector<CheckId> out;
  for (int i = 0; i <= static_cast<int>(CheckId::ConstructionValidity); ++i) out.push_back(static_cast<CheckId>(i));
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::SkippedHypothesis: return "SkippedHypothesis";
    case Verdict::SkippedBudget: return "SkippedBudget";
    case Verdict::Finding: return "Finding";
  }
  return "?";
}

std::vector<CorpusItem> load_corpus(std::string_view source) {
  const std::string src(source);
  static const std::regex generated(R"(^(connected|geng|trees|girth7|blocks):n(<=|=)(\d+)$)");
  std::smatch m;
  if (std::regex_match(src, m, generated)) {
    const std::string kind = m[1];
    const int top = std::stoi(m[3]);
    if (top < 1 || top > 12) throw SizeError("generated corpus order must be in 1..12");
    const int from = m[2] == "=" ? top : 1;
    std::vector<CorpusItem> out;
    for (int n = from; n <= top; ++n) {
      std::vector<Graph> gs;
      if (kind == "connected" || kind == "geng") gs = connected_graphs(n);
      else if (kind == "trees") gs = trees(n);
      else if (kind == "girth7") gs = connected_girth_at_least(n, 7);
      else gs = block_graphs(n);
      auto items = named_graphs(gs, kind + ":n" + std::to_string(n));
      out.insert(out.end(), std::make_move_iterator(items.begin()), std::make_move_iterator(items.end()));
    }
    return out;
  }
  if (src.rfind("file:", 0) == 0) return read_file_corpus(src.substr(5));
  if (src.find(':') == std::string::npos && src.find('(') == std::string::npos) return read_file_corpus(src);
  std::vector<CorpusItem> out;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= src.size(); ++i) {
    if (i < src.size() && src[i] == '(') ++depth;
    if (i < src.size() && src[i] == ')' && depth > 0) --depth;
    if (i == src.size() || (src[i] == ';' && depth == 0)) {
      std::string part = src.substr(start, i - start);
      part.erase(0, part.find_first_not_of(" \t\n"));
      part.erase(part.find_last_not_of(" \t\n") + 1);
      if (!part.empty()) {
        FamilySpec spec = parse_family_spec(part);
        Graph g = generate(spec);
        out.push_back({to_string(spec), std::move(g), std::move(spec)});
      }
      start = i + 1;
    }
  }
  if (out.empty()) throw ParseError("empty corpus");
  return out;
}

Report run_suite(const std::vector<CorpusItem>& corpus, const std::vector<CheckSpec>& checks) {
  Report report;
  report.instances.reserve(corpus.size());
  for (const auto& item : corpus) {
    InstanceRecord rec;
    Ctx c(item.graph, &rec);
    rec = make_record(item.name, c);
    for (const auto& cs : checks) {
      Env e{item, cs, rec, c};
      rec.checks.push_back(run_check(e));
    }
    report.instances.push_back(std::move(rec));
  }
  summarize(report);
  return report;
}

std::optional<OpenProblem> parse_open_problem(std::string_view text) {
  if (text == "OpenQnEquality") return OpenProblem::OpenQnEquality;
  if (text == "OpenCartesianGamma") return OpenProblem::OpenCartesianGamma;
  if (text == "OpenBlockTheta") return OpenProblem::OpenBlockTheta;
  return std::nullopt;
}

Report counterexample_search(OpenProblem problem, int size_limit, std::uint64_t budget) {
  CheckSpec cs;
  cs.budget = budget;
  switch (problem) {
    case OpenProblem::OpenQnEquality: {
      cs.id = CheckId::OpenQnEquality;
      std::vector<CorpusItem> corpus;
      for (int d = 1; d <= std::min(size_limit, 4); ++d) {
        const FamilySpec s = FamilySpec::hypercube(d);
        corpus.push_back({to_string(s), generate(s), s});
      }
      return run_suite(corpus, {cs});
    }
    case OpenProblem::OpenBlockTheta: {
      cs.id = CheckId::OpenBlockTheta;
      std::vector<CorpusItem> corpus;
      for (int n = 1; n <= std::min(size_limit, 12); ++n) {
        auto items = named_graphs(block_graphs(n), "blocks:n" + std::to_string(n));
        corpus.insert(corpus.end(), items.begin(), items.end());
      }
      return run_suite(corpus, {cs});
    }
    case OpenProblem::OpenCartesianGamma:
      break;
  }
  // Unordered pairs of connected graphs with 2 <= |G| <= |H| and |G||H| within the limit.
  Report report;
  std::map<int, std::vector<Graph>> by_order;
  auto graphs_of = [&](int n) -> const std::vector<Graph>& {
    auto it = by_order.find(n);
    if (it == by_order.end()) it = by_order.emplace(n, connected_graphs(n)).first;
    return it->second;
  };
  for (int a = 2; a * a <= size_limit; ++a) {
    for (int b = a; a * b <= size_limit; ++b) {
      const auto& gs = graphs_of(a);
      const auto& hs = graphs_of(b);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = (a == b ? i : 0); j < hs.size(); ++j) {
          Ctx gc(gs[i], nullptr);
          Ctx hc(hs[j], nullptr);
          const std::string hname = "g6:" + to_graph6(hs[j]);
          Ctx pc(product(ProductKind::Cartesian, gs[i], hs[j]), nullptr);
          InstanceRecord rec = make_record("cartesian(g6:" + to_graph6(gs[i]) + "," + hname + ")", pc);
          Outcome o(CheckId::OpenCartesianGamma);
          CheckOutcome out;
          try {
            const bool holds = cartesian_gamma_pair(gc, hc, pc, hname, budget, o);
            rec.values["chi_mu_2(G)"] = gc.chi(2, budget);
            rec.values["chi_mu_2(H)"] = hc.chi(2, budget);
            rec.values["gamma(G)"] = gc.gamma(budget);
            rec.values["gamma(H)"] = hc.gamma(budget);
            rec.values["chi_mu_2"] = pc.chi(2, budget);
            out = o.finding(holds);
          } catch (const BudgetSkip& s) {
            out = o.skip(Verdict::SkippedBudget, "budget exhausted at " + s.key);
          }
          rec.checks.push_back(std::move(out));
          report.instances.push_back(std::move(rec));
        }
      }
    }
  }
  summarize(report);
  return report;
}

}  // namespace kdmv
