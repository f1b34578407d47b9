#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdmv/coloring.hpp"
#include "kdmv/families.hpp"
#include "kdmv/graph.hpp"

namespace kdmv {

enum class CheckId {
  ObsChain,
  OrderBound,
  GammaTotalUpper,
  GirthGammaLower,
  ClosedNbhdLemma,
  ThmDis,
  TriangleFreeDis,
  LexicChain,
  ThmCon,
  StrongProductBound,
  CartesianLower,
  QnStructure,
  FormulaAgreement,
  ConstructionValidity,
  OpenQnEquality,
  OpenCartesianGamma,
  OpenBlockTheta,
};

const char* to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view text);
/// Open-problem probes report findings and never fail.
bool is_open(CheckId id);
std::vector<CheckId> all_theorem_checks();

struct CheckSpec {
  CheckId id = CheckId::ObsChain;
  /// Node budget per individual solve.
  std::uint64_t budget = kDefaultBudget;
  /// Largest product order formed by the product checks.
  int product_limit = 16;
  /// Largest order on which formulas are compared with the exact solver.
  int exact_limit = 18;
};

enum class Verdict { Pass, Fail, SkippedHypothesis, SkippedBudget, Finding };
const char* to_string(Verdict v);

struct CheckOutcome {
  CheckId id = CheckId::ObsChain;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  /// Individual inequalities or equalities evaluated.
  int comparisons = 0;
  /// Open probes only: whether the conjectured relation held.
  std::optional<bool> relation_holds;
};

struct InstanceRecord {
  std::string name;
  std::string graph6;
  int n = 0;
  int m = 0;
  /// -1 encodes an infinite girth or diameter.
  int girth = -1;
  int diam = -1;
  std::map<std::string, int> values;
  std::map<std::string, std::vector<std::vector<int>>> witnesses;
  std::vector<CheckOutcome> checks;
  std::uint64_t nodes = 0;
};

struct SuiteSummary {
  int instances = 0;
  int checked = 0;
  int passed = 0;
  int failed = 0;
  int skipped_budget = 0;
  int skipped_hypothesis = 0;
  int findings = 0;
  /// Open probes whose conjectured relation failed on an instance.
  int counterexamples = 0;
  /// Per check id: comparisons evaluated (Pass or Fail).
  std::map<std::string, int> coverage;
};

struct Report {
  std::vector<InstanceRecord> instances;
  SuiteSummary summary;
  bool ok() const { return summary.failed == 0; }
};

struct CorpusItem {
  std::string name;
  Graph graph;
  std::optional<FamilySpec> spec;
};

/// Corpus sources:
///   connected:n<=8 | connected:n=6 | geng:n<=6   all connected graphs
///   trees:n<=10  girth7:n<=10  blocks:n<=9       generated classes
///   file:<path>                                  graph6 lines
///   spec;spec;...                                family specs
/// Throws IOError for unreadable files and ParseError for bad syntax.
std::vector<CorpusItem> load_corpus(std::string_view source);

/// Runs every check on every instance, in corpus order.
Report run_suite(const std::vector<CorpusItem>& corpus, const std::vector<CheckSpec>& checks);

enum class OpenProblem { OpenQnEquality, OpenCartesianGamma, OpenBlockTheta };
std::optional<OpenProblem> parse_open_problem(std::string_view text);

/// Searches for instances where the conjectured relation fails. The size
/// limit is the hypercube dimension, the product order, or the block graph
/// order respectively.
Report counterexample_search(OpenProblem problem, int size_limit, std::uint64_t budget = kDefaultBudget);

std::string to_json(const Report& report);
/// Header: graph6,n,girth,diam,chi_mu2,gamma,gamma_t,theta_nd2,rho2,verdicts
std::string to_csv(const Report& report);

}  // namespace kdmv
