#pragma once

// JSON reports shared by the suites and the command line:
//   {suite, cases: [{name, inputs, computed, reference, abs_err, rel_err, pass}], summary}

#include <nlohmann/json.hpp>

#include <complex>
#include <string>
#include <vector>

#include "dunkl/integrals.hpp"

namespace dunkl {

using json = nlohmann::ordered_json;

inline json complex_json(std::complex<double> z) {
  if (z.imag() == 0) return z.real();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

struct CaseResult {
  std::string name;
  json inputs = json::object();
  json computed;
  json reference;
  double abs_err = 0;
  double rel_err = 0;
  bool pass = false;
  std::vector<std::string> notes;

  json to_json() const {
    json j{{"name", name},       {"inputs", inputs},   {"computed", computed}, {"reference", reference},
           {"abs_err", abs_err}, {"rel_err", rel_err}, {"pass", pass}};
    if (!notes.empty()) j["notes"] = notes;
    return j;
  }
};

/// Exact check over many identities: computed = number that held, reference = number checked.
inline CaseResult exact_case(std::string name, json inputs, long held, long checked) {
  CaseResult c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.computed = held;
  c.reference = checked;
  c.abs_err = static_cast<double>(checked - held);
  c.rel_err = checked ? c.abs_err / static_cast<double>(checked) : 0.0;
  c.pass = held == checked;
  return c;
}

inline CaseResult identity_case(std::string name, const IdentityReport& rep) {
  CaseResult c;
  c.name = std::move(name);
  for (const auto& [key, value] : rep.inputs) c.inputs[key] = value;
  c.inputs["tol"] = rep.tolerance;
  c.computed = complex_json(rep.computed);
  c.reference = complex_json(rep.reference);
  c.abs_err = rep.abs_err;
  c.rel_err = rep.rel_err;
  c.pass = rep.pass;
  c.notes = rep.notes;
  return c;
}

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::vector<std::string> warnings;
  bool skipped = false;

  long passed() const {
    long p = 0;
    for (const auto& c : cases) p += c.pass;
    return p;
  }
  bool pass() const { return passed() == static_cast<long>(cases.size()); }

  json summary() const {
    json s{{"total", cases.size()},
           {"passed", passed()},
           {"failed", static_cast<long>(cases.size()) - passed()},
           {"skipped", skipped},
           {"pass", pass()}};
    if (!warnings.empty()) s["warnings"] = warnings;
    return s;
  }

  json to_json() const {
    json cs = json::array();
    for (const auto& c : cases) cs.push_back(c.to_json());
    return json{{"suite", suite}, {"cases", cs}, {"summary", summary()}};
  }
};

/// Several suites folded into one report; case names are prefixed "suite/".
inline json aggregate_json(const std::vector<SuiteReport>& reports) {
  json cs = json::array();
  json per = json::array();
  long total = 0, passed = 0;
  bool all = true;
  for (const auto& r : reports) {
    for (const auto& c : r.cases) {
      json j = c.to_json();
      j["name"] = r.suite + "/" + c.name;
      cs.push_back(std::move(j));
    }
    json s = r.summary();
    s["suite"] = r.suite;
    per.push_back(std::move(s));
    total += static_cast<long>(r.cases.size());
    passed += r.passed();
    all = all && r.pass();
  }
  return json{{"suite", "all"},
              {"cases", cs},
              {"summary", {{"total", total}, {"passed", passed}, {"failed", total - passed}, {"pass", all}, {"suites", per}}}};
}

}  // namespace dunkl
