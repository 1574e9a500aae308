// dunkl: evaluate Jack polynomials, multivariate Gamma values and Bessel
// kernels, classify Wallach points and run the verification suites.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/dunkl.hpp"

using namespace dunkl;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr const char* kSchemaHelp = R"(Reports are JSON objects on standard output.
  verify:   {"suite", "cases": [{"name", "inputs", "computed", "reference",
             "abs_err", "rel_err", "pass"}], "summary": {"total", "passed", "failed", "pass"}}
  others:   a flat object naming the inputs and the computed value.
Scalars: rationals as "p/q", decimals as "0.5", complex as "a+bi".
Lists (lambda, x, z): comma separated, e.g. --lambda 2,1 --z 1+0.5i,2.
)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    auto t = detail::trim(cur);
    if (t.empty()) throw UsageError("empty entry in list '" + s + "'");
    out.emplace_back(t);
  }
  return out;
}

Partition parse_partition(const std::string& s) {
  std::string t(detail::trim(s));
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  if (t.empty()) return Partition();
  std::vector<int> parts;
  for (const auto& p : split_list(t)) {
    if (!detail::is_int_literal(p)) throw UsageError("partition part '" + p + "' is not an integer");
    parts.push_back(std::stoi(p));
  }
  try {
    return Partition(parts);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::vector<cdouble> parse_complex_list(const std::string& s) {
  std::vector<cdouble> out;
  for (const auto& p : split_list(s)) out.push_back(parse_complex(p));
  return out;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  const bool report = j.contains("cases") && j.contains("summary");
  if (format == "csv") {
    if (report) {
      std::cout << "name,pass,abs_err,rel_err,computed,reference\n";
      for (const auto& c : j["cases"])
        std::cout << csv_field(c["name"].get<std::string>()) << "," << (c["pass"].get<bool>() ? "true" : "false") << ","
                  << c["abs_err"].dump() << "," << c["rel_err"].dump() << "," << csv_field(scalar_text(c["computed"]))
                  << "," << csv_field(scalar_text(c["reference"])) << "\n";
    } else {
      std::cout << "key,value\n";
      for (const auto& [key, value] : j.items()) std::cout << csv_field(key) << "," << csv_field(scalar_text(value)) << "\n";
    }
    return;
  }
  if (report) {
    for (const auto& c : j["cases"])
      std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
                << "  rel_err=" << c["rel_err"].dump() << "\n";
    const auto& s = j["summary"];
    std::cout << j["suite"].get<std::string>() << ": " << s["passed"].dump() << "/" << s["total"].dump() << " passed"
              << (s.value("skipped", false) ? " (skipped)" : "") << "\n";
    if (s.contains("warnings"))
      for (const auto& w : s["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
  } else {
    for (const auto& [key, value] : j.items()) std::cout << key << ": " << scalar_text(value) << "\n";
  }
}

json big_complex_json(const BigComplex& z, unsigned digits) {
  if (z.imag() == 0) return z.real().str(static_cast<std::streamsize>(digits));
  return json{{"re", z.real().str(static_cast<std::streamsize>(digits))}, {"im", z.imag().str(static_cast<std::streamsize>(digits))}};
}

json scalar_json(const ScalarValue& v, unsigned digits) {
  if (v.is_exact()) return v.exact().get_str();
  return big_complex_json(v.big(), digits);
}

struct Options {
  std::string format = "json";
  std::optional<int> n;
  std::string k, alpha, mu, nu, lambda, x, z, normalization = "C";
  std::optional<double> tol;
  std::optional<int> max_degree;
  std::optional<unsigned> digits;
  std::string suite = "all";
  std::uint64_t seed = 42;
  int trials = 200;
  int threads = 1;
  bool force = false, parallel = false, raw = false;
};

Multiplicity require_k(const Options& o) {
  if (o.k.empty()) throw UsageError("--k is required");
  return Multiplicity::parse(o.k);
}

int require_n(const Options& o) {
  if (!o.n) throw UsageError("--n is required");
  if (*o.n < 1) throw UsageError("--n must be positive");
  return *o.n;
}

int cmd_jack(const Options& o) {
  const int n = require_n(o);
  Rational alpha;
  if (!o.alpha.empty()) {
    alpha = parse_rational(o.alpha);
  } else if (!o.k.empty()) {
    Multiplicity k = Multiplicity::parse(o.k);
    alpha = k.alpha_exact();
  } else {
    throw UsageError("one of --alpha or --k is required");
  }
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  if (o.normalization != "C" && o.normalization != "P") throw UsageError("--normalization must be C or P");
  Partition lam = parse_partition(o.lambda);
  if (lam.length() > n) throw UsageError("partition has more parts than variables");
  const bool c_norm = o.normalization == "C";
  auto t = cached_jack_table(n, alpha, lam.weight());
  json terms = json::array();
  for (const auto& [nu, c] : t->expansion(lam, c_norm)) terms.push_back({{"partition", nu.to_string()}, {"coefficient", c.get_str()}});
  Rational ones = c_norm ? t->at_ones(lam) : Rational(t->at_ones(lam) / t->scale(lam));
  emit(json{{"n", n},
            {"alpha", alpha.get_str()},
            {"lambda", lam.to_string()},
            {"normalization", o.normalization},
            {"expansion", t->m_basis_string(lam, c_norm)},
            {"terms", terms},
            {"at_ones", ones.get_str()}},
       o.format);
  return kExitPass;
}

int cmd_gamma_n(const Options& o) {
  const int n = require_n(o);
  Multiplicity k = require_k(o);
  if (o.mu.empty()) throw UsageError("--mu is required");
  ScalarValue mu = ScalarValue::parse(o.mu);
  const unsigned digits = o.digits.value_or(default_digits());
  PrecisionScope scope(digits + 10);
  json out{{"n", n}, {"k", k.to_string()}, {"mu", mu.to_string()}};
  try {
    BigComplex g = gamma_n(mu, n, k, digits);
    out["value"] = big_complex_json(g, digits);
    auto c = normalization_constants(n, k, digits);
    out["d_n"] = c.d_n.str(static_cast<std::streamsize>(digits));
    out["c_kn"] = c.c_kn.str(static_cast<std::streamsize>(digits));
  } catch (const PoleError& e) {
    out["value"] = nullptr;
    out["error"] = std::string("pole: ") + e.what();
    emit(out, o.format);
    return kExitFail;
  }
  emit(out, o.format);
  return kExitPass;
}

int cmd_pochhammer(const Options& o) {
  Multiplicity k = require_k(o);
  if (o.mu.empty()) throw UsageError("--mu is required");
  ScalarValue mu = ScalarValue::parse(o.mu);
  Partition lam = parse_partition(o.lambda);
  const unsigned digits = o.digits.value_or(default_digits());
  PrecisionScope scope(digits + 10);
  ScalarValue v = gpochhammer(mu, lam, k);
  json out{{"k", k.to_string()}, {"mu", mu.to_string()}, {"lambda", lam.to_string()}, {"value", scalar_json(v, digits)}};
  if (o.n) {
    out["n"] = *o.n;
    out["bernstein_factor"] = scalar_json(
        mu.is_exact() && k.is_exact() ? ScalarValue(bernstein_factor(mu.exact(), *o.n, k.exact()))
                                      : ScalarValue(bernstein_factor(mu.big(), *o.n, BigComplex(k.big(), BigReal(0)))),
        digits);
  }
  emit(out, o.format);
  return kExitPass;
}

int cmd_bessel(const Options& o) {
  Multiplicity k = require_k(o);
  if (o.x.empty() || o.z.empty()) throw UsageError("--x and --z are required");
  auto x = parse_complex_list(o.x);
  auto z = parse_complex_list(o.z);
  if (x.size() != z.size()) throw UsageError("--x and --z must have the same length");
  BesselOptions opt;
  opt.rel_tol = o.tol.value_or(1e-12);
  opt.centered = !o.raw;
  if (o.max_degree) opt.max_degree = *o.max_degree;
  json out{{"k", k.to_string()}, {"x", format_vector(x)}, {"z", format_vector(z)}, {"tol", opt.rel_tol}};
  try {
    auto r = bessel_J(std::span<const cdouble>(x), std::span<const cdouble>(z), k.value(), opt);
    out["value_re"] = r.value.real();
    out["value_im"] = r.value.imag();
    out["degree"] = r.truncation_degree;
    out["tail_bound"] = r.tail_bound;
  } catch (const TruncationError& e) {
    out["value_re"] = nullptr;
    out["value_im"] = nullptr;
    out["degree"] = e.degree;
    out["tail_bound"] = e.bound;
    out["error"] = e.what();
    emit(out, o.format);
    return kExitFail;
  }
  emit(out, o.format);
  return kExitPass;
}

int cmd_wallach(const Options& o) {
  const int n = require_n(o);
  Multiplicity k = require_k(o);
  if (o.mu.empty()) throw UsageError("--mu is required");
  ScalarValue mu = ScalarValue::parse(o.mu);
  WallachVerdict v = wallach_classify(mu, n, k);
  json out{{"n", n},
           {"k", k.to_string()},
           {"mu", mu.to_string()},
           {"verdict", to_string(v.verdict)},
           {"r", v.r >= 0 ? json(v.r) : json(nullptr)},
           {"witness", v.witness ? json(v.witness->to_string()) : json(nullptr)},
           {"pochhammer_value", v.pochhammer_value ? json(*v.pochhammer_value) : json(nullptr)},
           {"candidate_complex_measure", v.candidate_complex_measure},
           {"complex_measure", to_string(v.complex_measure)},
           {"tolerance_tagged", v.tolerance_tagged}};
  if (mu.is_exact() && k.is_exact() && mu.exact() >= 0) {
    const int deg = o.max_degree.value_or(n + 1);
    auto sw = sign_witness(mu.exact(), n, k.exact(), deg);
    out["sign_scan"] = {{"max_degree", deg}, {"partitions", sw.scanned}, {"all_nonnegative", sw.all_nonnegative}};
  }
  if (!v.notes.empty()) out["notes"] = v.notes;
  emit(out, o.format);
  return kExitPass;
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.n = o.n;
  if (!o.k.empty()) cfg.k = o.k;
  cfg.tol = o.tol;
  cfg.max_degree = o.max_degree;
  if (!o.mu.empty()) cfg.mu = o.mu;
  if (!o.nu.empty()) cfg.nu = o.nu;
  if (!o.lambda.empty()) cfg.lambda = parse_partition(o.lambda);
  if (!o.z.empty()) cfg.z = parse_complex_list(o.z);
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.force = o.force;
  cfg.threads = o.threads;
  if (o.suite == "all") {
    auto reports = verify_all(cfg, o.parallel);
    json j = aggregate_json(reports);
    emit(j, o.format);
    return j["summary"]["pass"].get<bool>() ? kExitPass : kExitFail;
  }
  bool known = false;
  for (const auto& entry : suite_registry()) known = known || entry.first == o.suite;
  if (!known) throw UsageError("unknown suite '" + o.suite + "'");
  SuiteReport r = run_suite(o.suite, cfg);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  emit(r.to_json(), o.format);
  return r.pass() ? kExitPass : kExitFail;
}

std::string suite_names() {
  std::string s = "all";
  for (const auto& entry : suite_registry()) s += ", " + entry.first;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack polynomials, Dunkl-Bessel kernels, Riesz measures and the generalized Wallach set"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* jack = app.add_subcommand("jack", "m-basis expansion of C_lambda (or P_lambda)");
  jack->add_option("--n", o.n, "number of variables")->required();
  jack->add_option("--alpha", o.alpha, "Jack parameter alpha (rational)");
  jack->add_option("--k", o.k, "multiplicity k, alpha = 1/k");
  jack->add_option("--lambda", o.lambda, "partition, e.g. 2,1")->required();
  jack->add_option("--normalization", o.normalization, "C or P");
  add_common(jack);

  auto* gam = app.add_subcommand("gamma-n", "Gamma_n(mu; k) together with d_n and c_{k,n}");
  gam->add_option("--n", o.n)->required();
  gam->add_option("--k", o.k)->required();
  gam->add_option("--mu", o.mu)->required();
  gam->add_option("--digits", o.digits, "significant digits (default from DUNKL_PRECISION_DIGITS or 50)");
  add_common(gam);

  auto* poch = app.add_subcommand("pochhammer", "generalized Pochhammer symbol [mu]_lambda");
  poch->add_option("--mu", o.mu)->required();
  poch->add_option("--k", o.k)->required();
  poch->add_option("--lambda", o.lambda)->required();
  poch->add_option("--n", o.n, "also report b_k(mu) in n variables");
  poch->add_option("--digits", o.digits);
  add_common(poch);

  auto* bes = app.add_subcommand("bessel", "Bessel kernel J(x, z)");
  bes->add_option("--x", o.x)->required();
  bes->add_option("--z", o.z)->required();
  bes->add_option("--k", o.k)->required();
  bes->add_option("--tol", o.tol, "series relative tolerance");
  bes->add_option("--max-degree", o.max_degree, "series degree cap");
  bes->add_flag("--raw", o.raw, "sum the series without centering");
  add_common(bes);

  auto* wal = app.add_subcommand("wallach", "classify mu against the generalized Wallach set");
  wal->add_option("--n", o.n)->required();
  wal->add_option("--k", o.k)->required();
  wal->add_option("--mu", o.mu)->required();
  wal->add_option("--max-degree", o.max_degree, "degree of the Pochhammer sign scan");
  add_common(wal);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", o.suite, "one of: " + suite_names());
  ver->add_option("--n", o.n);
  ver->add_option("--k", o.k);
  ver->add_option("--mu", o.mu);
  ver->add_option("--nu", o.nu, "second exponent for kadell");
  ver->add_option("--lambda", o.lambda, "partition for macdonald and kadell");
  ver->add_option("--z", o.z, "Laplace argument, n coordinates");
  ver->add_option("--tol", o.tol);
  ver->add_option("--max-degree", o.max_degree);
  ver->add_option("--seed", o.seed, "seed for randomized suites");
  ver->add_option("--trials", o.trials, "trials per randomized property")->check(CLI::PositiveNumber);
  ver->add_option("--threads", o.threads, "quadrature worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--force", o.force, "run quadrature beyond the desk-scale dimension cap");
  ver->add_flag("--parallel", o.parallel, "run suites concurrently");
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << kSchemaHelp;
    return kExitUsage;
  }

  try {
    if (*jack) return cmd_jack(o);
    if (*gam) return cmd_gamma_n(o);
    if (*poch) return cmd_pochhammer(o);
    if (*bes) return cmd_bessel(o);
    if (*wal) return cmd_wallach(o);
    if (*ver) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << kSchemaHelp;
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << kSchemaHelp;
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << kSchemaHelp;
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
