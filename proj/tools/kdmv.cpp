// kdmv: exact solvers, constructions and the verification suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdmv/chromatic.hpp"
#include "kdmv/constructions.hpp"
#include "kdmv/domination.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/families.hpp"
#include "kdmv/graph6.hpp"
#include "kdmv/harness.hpp"
#include "kdmv/metrics.hpp"
#include "kdmv/visibility.hpp"

namespace {

using nlohmann::json;
using namespace kdmv;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string graph;
  int k = 2;
  std::uint64_t budget = kDefaultBudget;
  std::string out;
  std::string format = "json";
  std::string corpus;
  bool exact_required = false;
  std::string checks = "all";
  int product_limit = 16;
  int exact_limit = 18;
  std::string problem;
  int limit = 0;
  std::string scheme;
  int n = 0;
  int m = 0;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw IOError("cannot write " + o.out);
  f << text;
}

std::vector<std::vector<int>> lists(const Coloring& c) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : c.classes()) out.push_back(cls.to_vector());
  return out;
}

Graph load_graph(const std::string& text) { return generate(parse_family_spec(text)); }

int solve_verb(const Options& o, const std::function<SolveResult(const Graph&)>& run) {
  const Graph g = load_graph(o.graph);
  const SolveResult r = run(g);
  json j = {{"value", r.value},
            {"status", to_string(r.status)},
            {"lower", r.lower},
            {"upper", r.upper},
            {"nodes", r.nodes}};
  if (r.coloring) j["classes"] = lists(*r.coloring);
  if (r.set) j["set"] = r.set->to_vector();
  emit(o, j.dump() + "\n");
  return (o.exact_required && !r.exact()) ? kExitBudget : 0;
}

int eod_verb(const Options& o) {
  const Graph g = load_graph(o.graph);
  json j;
  try {
    const auto s = efficient_open_dominating_set(g, o.budget);
    j = {{"status", "Exact"}, {"exists", s.has_value()}};
    if (s) j["set"] = s->to_vector();
  } catch (const BudgetError&) {
    j = {{"status", "BoundsOnly"}};
    emit(o, j.dump() + "\n");
    return o.exact_required ? kExitBudget : 0;
  }
  emit(o, j.dump() + "\n");
  return 0;
}

int info_verb(const Options& o) {
  const Graph g = load_graph(o.graph);
  const auto mt = metrics(g);
  auto finite = [](int v, bool ok) { return ok ? json(v) : json(nullptr); };
  json j = {{"n", g.order()},
            {"m", g.size()},
            {"graph6", to_graph6(g)},
            {"connected", mt.connected},
            {"girth", finite(mt.girth, mt.girth != kInfiniteGirth)},
            {"diameter", finite(mt.diameter, mt.connected)},
            {"radius", finite(mt.radius, mt.connected)}};
  emit(o, j.dump() + "\n");
  return 0;
}

int construct_verb(const Options& o) {
  Graph g;
  Coloring c;
  int k = o.k;
  const std::string& s = o.scheme;
  if (s == "path") {
    g = generate(FamilySpec::path(o.n));
    c = color_path(o.n, k);
  } else if (s == "cycle") {
    g = generate(FamilySpec::cycle(o.n));
    c = color_cycle(o.n, k);
  } else if (s == "strong-path-complete") {
    g = generate(FamilySpec::strong(FamilySpec::path(o.n), FamilySpec::complete(o.m)));
    c = color_strong_path_complete(o.n, o.m, k);
  } else if (s == "torus") {
    g = generate(FamilySpec::cartesian(FamilySpec::cycle(o.m), FamilySpec::cycle(o.n)));
    c = torus_eod_coloring(o.m, o.n);
    k = 2;
  } else if (s == "hypercube") {
    g = generate(FamilySpec::hypercube(o.n));
    const auto r = gamma_exact(g, o.budget);
    if (!r.exact()) return kExitBudget;
    c = hypercube_neighborhood_coloring(o.n, r.set->to_vector());
    k = 2;
  } else if (s == "block") {
    g = load_graph(o.graph);
    c = block_graph_coloring(g);
    k = std::max(1, metrics(g).diameter - 1);
  } else if (s == "tree-half") {
    g = load_graph(o.graph);
    c = tree_half_coloring(g);
    k = 2;
  } else if (s == "total-dom") {
    g = load_graph(o.graph);
    const auto r = gamma_t_exact(g, o.budget);
    if (!r.exact()) return kExitBudget;
    c = total_dom_partition(g, r.set->to_vector());
    k = 2;
  } else if (s == "corona-c4") {
    const Graph inner = load_graph(o.graph);
    g = generate(FamilySpec::cartesian(FamilySpec::corona(parse_family_spec(o.graph)), FamilySpec::cycle(4)));
    c = cartesian_corona_c4_coloring(inner);
    k = 2;
  } else {
    throw SpecError("unknown scheme " + s);
  }
  const bool verified = verify_kdmv_coloring(g, k, c).ok;
  json j = {{"scheme", s},
            {"k", k},
            {"n", g.order()},
            {"num_classes", c.num_classes()},
            {"classes", lists(c)},
            {"verified", verified}};
  emit(o, j.dump() + "\n");
  return verified ? 0 : kExitFailure;
}

std::vector<CheckSpec> parse_checks(const Options& o) {
  std::vector<CheckId> ids;
  if (o.checks == "all") {
    ids = all_theorem_checks();
  } else {
    std::stringstream ss(o.checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto id = parse_check_id(item);
      if (!id) throw CLI::ValidationError("--checks", "unknown check " + item);
      ids.push_back(*id);
    }
  }
  std::vector<CheckSpec> out;
  for (CheckId id : ids) {
    CheckSpec cs;
    cs.id = id;
    cs.budget = o.budget;
    cs.product_limit = o.product_limit;
    cs.exact_limit = o.exact_limit;
    out.push_back(cs);
  }
  return out;
}

void emit_report(const Options& o, const Report& r) { emit(o, o.format == "csv" ? to_csv(r) : to_json(r)); }

int suite_verb(const Options& o) {
  const auto checks = parse_checks(o);
  const Report r = run_suite(load_corpus(o.corpus), checks);
  emit_report(o, r);
  const auto& s = r.summary;
  std::cerr << "checked " << s.checked << " passed " << s.passed << " failed " << s.failed << " skipped-budget "
            << s.skipped_budget << " skipped-hypothesis " << s.skipped_hypothesis << '\n';
  if (s.failed > 0) return kExitFailure;
  if (o.exact_required && s.skipped_budget > 0) return kExitBudget;
  return 0;
}

int probe_verb(const Options& o) {
  const auto p = parse_open_problem(o.problem);
  if (!p) throw CLI::ValidationError("--problem", "unknown problem " + o.problem);
  int limit = o.limit;
  if (limit <= 0) limit = *p == OpenProblem::OpenQnEquality ? 4 : *p == OpenProblem::OpenBlockTheta ? 9 : 16;
  const Report r = counterexample_search(*p, limit, o.budget);
  emit_report(o, r);
  std::cerr << "instances " << r.summary.instances << " findings " << r.summary.findings << " relation-fails "
            << r.summary.counterexamples << '\n';
  if (o.exact_required && r.summary.skipped_budget > 0) return kExitBudget;
  return 0;
}

int gen_verb(const Options& o) {
  std::ostringstream out;
  for (const auto& item : load_corpus(o.corpus)) out << to_graph6(item.graph) << '\n';
  emit(o, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-distance mutual-visibility colorings: solvers, constructions, verification suite"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Search node budget per solve");
    sub->add_option("--out", o.out, "Write output to this path");
    sub->add_flag("--exact-required", o.exact_required, "Exit 3 when a budget runs out");
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Graph spec, e.g. cycle:7, g6:Dhc, file:path")->required();
  };

  std::function<int()> action;
  auto solver = [&](const char* name, const char* help, bool with_k, std::function<SolveResult(const Graph&)> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_graph(sub);
    add_common(sub);
    if (with_k) sub->add_option("--k", o.k, "Distance bound")->check(CLI::PositiveNumber);
    sub->callback([&, run] { action = [&, run] { return solve_verb(o, run); }; });
  };

  solver("chi", "Exact k-distance mutual-visibility chromatic number", true,
         [&](const Graph& g) { return chi_mu_k_exact(g, o.k, o.budget); });
  solver("chii", "Minimum partition into independent 2DMV sets", false,
         [&](const Graph& g) { return chi_i_mu2_exact(g, o.budget); });
  solver("mu", "Largest kDMV set", true, [&](const Graph& g) { return max_kdmv(g, o.k, o.budget); });
  solver("gamma", "Domination number", false, [&](const Graph& g) { return gamma_exact(g, o.budget); });
  solver("gammat", "Total domination number", false, [&](const Graph& g) { return gamma_t_exact(g, o.budget); });
  solver("gammak", "Distance-k domination number", true,
         [&](const Graph& g) { return gamma_k_exact(g, o.k, o.budget); });
  solver("rho2", "2-packing number", false, [&](const Graph& g) { return rho2_exact(g, o.budget); });
  solver("theta", "Clique cover number", false, [&](const Graph& g) { return clique_cover_theta(g, o.budget); });

  CLI::App* eod = app.add_subcommand("eod", "Efficient open dominating set");
  add_graph(eod);
  add_common(eod);
  eod->callback([&] { action = [&] { return eod_verb(o); }; });

  CLI::App* info = app.add_subcommand("info", "Order, size, girth, diameter and graph6");
  add_graph(info);
  add_common(info);
  info->callback([&] { action = [&] { return info_verb(o); }; });

  CLI::App* construct = app.add_subcommand("construct", "Build and verify a coloring scheme");
  construct
      ->add_option("--scheme", o.scheme,
                   "path|cycle|strong-path-complete|torus|hypercube|block|tree-half|total-dom|corona-c4")
      ->required();
  construct->add_option("graph", o.graph, "Graph spec for graph-based schemes");
  construct->add_option("--n", o.n, "First size parameter");
  construct->add_option("--m", o.m, "Second size parameter");
  construct->add_option("--k", o.k, "Distance bound")->check(CLI::PositiveNumber);
  add_common(construct);
  construct->callback([&] { action = [&] { return construct_verb(o); }; });

  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* suite = app.add_subcommand("suite", "Run theorem checks over a corpus");
  suite->add_option("--corpus", o.corpus, "connected:n<=7, trees:n<=10, girth7:n<=10, blocks:n<=9, file:path or specs")
      ->required();
  suite->add_option("--checks", o.checks, "Comma-separated check ids or 'all'");
  suite->add_option("--product-limit", o.product_limit, "Largest product order");
  suite->add_option("--exact-limit", o.exact_limit, "Largest order compared with exact solves");
  add_common(suite);
  add_report(suite);
  suite->callback([&] { action = [&] { return suite_verb(o); }; });

  CLI::App* probe = app.add_subcommand("probe", "Search an open problem for counterexamples");
  probe->add_option("--problem", o.problem, "OpenQnEquality|OpenCartesianGamma|OpenBlockTheta")->required();
  probe->add_option("--limit", o.limit, "Size limit");
  add_common(probe);
  add_report(probe);
  probe->callback([&] { action = [&] { return probe_verb(o); }; });

  CLI::App* gen = app.add_subcommand("gen", "Print a corpus as graph6 lines");
  gen->add_option("--corpus", o.corpus, "Corpus source")->required();
  add_common(gen);
  gen->callback([&] { action = [&] { return gen_verb(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }
  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
