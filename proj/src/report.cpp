#include <sstream>

#include "json.hpp"
#include "kdmv/harness.hpp"

namespace kdmv {
namespace {

nlohmann::json finite_or_null(int v) { return v < 0 ? nlohmann::json(nullptr) : nlohmann::json(v); }

}  // namespace

std::string to_json(const Report& report) {
  using nlohmann::json;
  json instances = json::array();
  for (const auto& r : report.instances) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json o = {{"id", to_string(c.id)},
                {"verdict", to_string(c.verdict)},
                {"detail", c.detail},
                {"comparisons", c.comparisons}};
      if (c.relation_holds) o["relation_holds"] = *c.relation_holds;
      checks.push_back(std::move(o));
    }
    instances.push_back({{"name", r.name},
                         {"graph6", r.graph6},
                         {"n", r.n},
                         {"m", r.m},
                         {"girth", finite_or_null(r.girth)},
                         {"diam", finite_or_null(r.diam)},
                         {"values", r.values},
                         {"witnesses", r.witnesses},
                         {"checks", std::move(checks)},
                         {"nodes", r.nodes}});
  }
  const auto& s = report.summary;
  json summary = {{"instances", s.instances},
                  {"checked", s.checked},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"skipped_budget", s.skipped_budget},
                  {"skipped_hypothesis", s.skipped_hypothesis},
                  {"findings", s.findings},
                  {"counterexamples", s.counterexamples},
                  {"coverage", s.coverage}};
  json out = {{"instances", std::move(instances)}, {"summary", std::move(summary)}};
  return out.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "graph6,n,girth,diam,chi_mu2,gamma,gamma_t,theta_nd2,rho2,verdicts\n";
  auto value = [](const InstanceRecord& r, const char* key) {
    auto it = r.values.find(key);
    return it == r.values.end() ? std::string() : std::to_string(it->second);
  };
  auto finite = [](int v) { return v < 0 ? std::string("inf") : std::to_string(v); };
  for (const auto& r : report.instances) {
    out << r.graph6 << ',' << r.n << ',' << finite(r.girth) << ',' << finite(r.diam) << ',' << value(r, "chi_mu_2")
        << ',' << value(r, "gamma") << ',' << value(r, "gamma_t") << ',' << value(r, "theta_nd2") << ','
        << value(r, "rho2") << ',';
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      if (i) out << ';';
      out << to_string(r.checks[i].id) << '=' << to_string(r.checks[i].verdict);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kdmv
