#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/harness.hpp"

using namespace kdmv;

namespace {

std::vector<CheckSpec> specs(std::initializer_list<CheckId> ids) {
  std::vector<CheckSpec> out;
  for (auto id : ids) {
    CheckSpec s;
    s.id = id;
    out.push_back(s);
  }
  return out;
}

std::vector<CheckSpec> all_specs() {
  std::vector<CheckSpec> out;
  for (auto id : all_theorem_checks()) {
    CheckSpec s;
    s.id = id;
    out.push_back(s);
  }
  return out;
}

const CheckOutcome& outcome(const InstanceRecord& r, CheckId id) {
  for (auto& c : r.checks)
    if (c.id == id) return c;
  throw std::runtime_error("missing check");
}

}  // namespace

TEST_CASE("check ids round trip") {
  for (auto id : all_theorem_checks()) {
    CHECK(parse_check_id(to_string(id)) == id);
    CHECK_FALSE(is_open(id));
  }
  CHECK(is_open(CheckId::OpenQnEquality));
  CHECK_FALSE(parse_check_id("NoSuchCheck"));
  CHECK(parse_open_problem("OpenBlockTheta") == OpenProblem::OpenBlockTheta);
}

TEST_CASE("corpus sources") {
  CHECK(load_corpus("connected:n<=5").size() == 1 + 1 + 2 + 6 + 21);
  CHECK(load_corpus("geng:n=6").size() == 112);
  CHECK(load_corpus("trees:n=7").size() == 11);
  CHECK(load_corpus("blocks:n<=4").size() == 8);
  auto specs_corpus = load_corpus("cycle:5;strong(path:4,complete:2);named:fig-girth");
  REQUIRE(specs_corpus.size() == 3);
  CHECK(specs_corpus[1].graph.order() == 8);
  CHECK(specs_corpus[1].spec.has_value());
  CHECK_THROWS_AS(load_corpus("file:/nonexistent/corpus.g6"), IOError);
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.g6"), IOError);
  CHECK_THROWS_AS(load_corpus("cycle:"), ParseError);

  const char* path = "harness_corpus.g6";
  {
    std::ofstream out(path);
    out << "A_\nBw\nC~\n";
  }
  auto file = load_corpus(std::string("file:") + path);
  CHECK(file.size() == 3);
  CHECK(file[2].graph.size() == 6);
  std::remove(path);
}

TEST_CASE("small exhaustive corpus passes the bounds") {
  auto report = run_suite(load_corpus("connected:n<=7"),
                          specs({CheckId::ObsChain, CheckId::OrderBound, CheckId::GammaTotalUpper}));
  CHECK(report.summary.instances == 996);
  CHECK(report.summary.failed == 0);
  CHECK(report.summary.skipped_budget == 0);
  CHECK(report.ok());
}

TEST_CASE("every theorem check is exercised on n <= 7") {
  auto report = run_suite(load_corpus("connected:n<=7"), all_specs());
  CHECK(report.summary.failed == 0);
  for (auto id : all_theorem_checks()) {
    INFO(to_string(id));
    CHECK(report.summary.coverage[to_string(id)] > 0);
  }
}

TEST_CASE("girth bound hypothesis skip carries the companion values") {
  auto report = run_suite(load_corpus("named:fig-girth"), specs({CheckId::GirthGammaLower}));
  REQUIRE(report.instances.size() == 1);
  auto& rec = report.instances[0];
  auto& c = outcome(rec, CheckId::GirthGammaLower);
  CHECK(c.verdict == Verdict::SkippedHypothesis);
  CHECK(rec.values.at("chi_mu_2") == 3);
  CHECK(rec.values.count("gamma") == 1);
  CHECK(rec.values.at("gamma") > rec.values.at("chi_mu_2"));
  CHECK(c.detail.find("gamma") != std::string::npos);
  CHECK(report.summary.skipped_hypothesis == 1);
  CHECK(report.ok());
}

TEST_CASE("torus formula agreement") {
  auto report = run_suite(load_corpus("cartesian(cycle:4,cycle:4);cartesian(cycle:8,cycle:8)"),
                          specs({CheckId::FormulaAgreement}));
  REQUIRE(report.instances.size() == 2);
  for (auto& rec : report.instances) CHECK(outcome(rec, CheckId::FormulaAgreement).verdict == Verdict::Pass);
}

TEST_CASE("open probes never fail") {
  auto qn = counterexample_search(OpenProblem::OpenQnEquality, 3);
  CHECK(qn.instances.size() == 3);
  CHECK(qn.summary.failed == 0);
  auto& q3 = qn.instances.back();
  CHECK(q3.values.at("gamma") == 2);
  CHECK(q3.values.count("chi_mu_2") == 1);
  auto blocks = counterexample_search(OpenProblem::OpenBlockTheta, 6);
  CHECK(blocks.summary.failed == 0);
  CHECK(blocks.summary.findings > 0);
  auto cart = counterexample_search(OpenProblem::OpenCartesianGamma, 9);
  CHECK(cart.summary.failed == 0);
  CHECK(cart.ok());
}

TEST_CASE("report determinism and formats") {
  auto corpus = load_corpus("connected:n<=5");
  auto checks = all_specs();
  std::string a = to_json(run_suite(corpus, checks));
  std::string b = to_json(run_suite(corpus, checks));
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["instances"].size() == 31);
  CHECK(j["instances"][0]["girth"].is_null());

  std::string csv = to_csv(run_suite(corpus, specs({CheckId::GammaTotalUpper})));
  CHECK(csv.rfind("graph6,n,girth,diam,chi_mu2,gamma,gamma_t,theta_nd2,rho2,verdicts\n", 0) == 0);
  CHECK(csv.find("GammaTotalUpper=Pass") != std::string::npos);
}

TEST_CASE("budget exhaustion is a skip, not a failure") {
  std::vector<CheckSpec> tight = specs({CheckId::GammaTotalUpper});
  tight[0].budget = 3;
  auto report = run_suite(load_corpus("named:fig-girth"), tight);
  CHECK(report.summary.failed == 0);
  CHECK(report.summary.skipped_budget == 1);
}
