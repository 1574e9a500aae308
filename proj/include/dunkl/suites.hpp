#pragma once

// Verification suites behind `verify`. Each suite runs at desk-scale defaults
// that individual fields of SuiteConfig may override.

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dunkl/bessel.hpp"
#include "dunkl/integrals.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/report.hpp"
#include "dunkl/riesz.hpp"

namespace dunkl {

struct SuiteConfig {
  std::optional<int> n;
  std::optional<std::string> k;
  std::optional<double> tol;
  std::optional<int> max_degree;
  std::optional<std::string> mu;
  std::optional<std::string> nu;
  std::optional<Partition> lambda;
  std::optional<std::vector<cdouble>> z;
  std::uint64_t seed = 42;
  int trials = 200;
  bool force = false;
  int threads = 1;
};

namespace detail {

inline Rational rq(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline std::vector<Rational> exact_k_list(const SuiteConfig& cfg, std::vector<Rational> defaults) {
  if (!cfg.k) return defaults;
  Multiplicity m = Multiplicity::parse(*cfg.k);
  if (!m.is_exact()) throw DomainError("this suite is exact; pass k as a rational such as 1/2");
  if (m.exact() == 0) throw DomainError("k must be positive");
  return {m.exact()};
}

inline std::vector<Multiplicity> k_list(const SuiteConfig& cfg, const std::vector<Rational>& defaults) {
  std::vector<Multiplicity> out;
  if (cfg.k) {
    out.push_back(Multiplicity::parse(*cfg.k));
    if (!(out.back().value() > 0)) throw DomainError("k must be positive");
    return out;
  }
  for (const auto& k : defaults) out.emplace_back(k);
  return out;
}

inline std::vector<int> n_list(const SuiteConfig& cfg, std::vector<int> defaults) {
  if (!cfg.n) return defaults;
  if (*cfg.n < 1) throw DomainError("n must be positive");
  return {*cfg.n};
}

/// Orthant and real-space quadrature beyond the desk-scale dimension is skipped unless forced.
inline bool gate_dimension(SuiteReport& rep, int n, const SuiteConfig& cfg) {
  if (n <= kOrthantDeskDimension) return true;
  std::string msg = "dimension " + std::to_string(n) + " exceeds the desk-scale cap of " +
                    std::to_string(kOrthantDeskDimension) + " for orthant quadrature";
  msg += cfg.force ? "; running because of --force" : "; suite skipped (use --force)";
  if (std::find(rep.warnings.begin(), rep.warnings.end(), msg) == rep.warnings.end()) rep.warnings.push_back(msg);
  rep.skipped = !cfg.force;
  return cfg.force;
}

}  // namespace detail

inline SuiteReport suite_jack(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"jack"};
  const int deg = cfg.max_degree.value_or(cfg.n.value_or(3) <= 3 ? 6 : 4);
  std::vector<Rational> alphas = {rq(1, 2), rq(1), rq(2), rq(3)};
  if (cfg.k) {
    alphas.clear();
    for (const auto& k : detail::exact_k_list(cfg, {})) alphas.push_back(Rational(1 / k));
  }
  for (int n : detail::n_list(cfg, {2, 3})) {
    for (const auto& alpha : alphas) {
      auto t = cached_jack_table(n, alpha, deg);
      json in{{"n", n}, {"alpha", alpha.get_str()}, {"max_degree", deg}};
      long held = 0;
      long coeffs = 0, nonneg = 0;
      for (int m = 0; m <= deg; ++m) {
        MultiPoly sum(static_cast<std::size_t>(n));
        for (const auto& lam : t->partitions(m)) {
          sum += t->c_poly(lam);
          for (const auto& [nu, c] : t->expansion(lam)) {
            ++coeffs;
            nonneg += c >= 0;
          }
        }
        held += sum == coordinate_sum(static_cast<std::size_t>(n)).pow(m);
      }
      rep.cases.push_back(exact_case("normalization n=" + std::to_string(n) + " alpha=" + alpha.get_str(), in, held, deg + 1));
      rep.cases.push_back(exact_case("nonnegativity n=" + std::to_string(n) + " alpha=" + alpha.get_str(), in, nonneg, coeffs));
    }
  }
  // stability and C_lambda(1_r)/C_lambda(1_n) = [kr]_lambda/[kn]_lambda
  const int n = cfg.n.value_or(3);
  const int rdeg = std::min(deg, 5);
  for (const auto& k : detail::exact_k_list(cfg, {rq(1, 3), rq(1, 2), rq(2)})) {
    Rational alpha = 1 / k;
    auto tn = cached_jack_table(n, alpha, rdeg);
    long held = 0, checked = 0;
    for (int r = 1; r <= n - 1; ++r) {
      auto tr = cached_jack_table(r, alpha, rdeg);
      for (int m = 0; m <= rdeg; ++m) {
        for (const auto& lam : tn->partitions(m)) {
          Rational lhs = tn->at_ones(lam, r) / tn->at_ones(lam);
          Rational rhs = gpochhammer(Rational(k * r), lam, k) / gpochhammer(Rational(k * n), lam, k);
          held += (lhs == rhs) + jack_stability_check(lam, *tn, *tr);
          checked += 2;
        }
      }
    }
    rep.cases.push_back(exact_case("stability-ratio n=" + std::to_string(n) + " k=" + k.get_str(),
                                   {{"n", n}, {"k", k.get_str()}, {"max_degree", rdeg}}, held, checked));
  }
  return rep;
}

inline SuiteReport suite_bernstein(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"bernstein"};
  const int amax = cfg.max_degree.value_or(4);
  for (int n : detail::n_list(cfg, {2, 3, 4})) {
    for (const auto& k : detail::exact_k_list(cfg, {rq(1, 3), rq(1, 2), rq(1), rq(5, 2)})) {
      DunklContext ctx(static_cast<std::size_t>(n), k);
      json in{{"n", n}, {"k", k.get_str()}, {"a_max", amax}};
      long held = 0, steps = 0, steps_held = 0;
      for (int a = 1; a <= amax; ++a) {
        held += bernstein_check(ctx, a).equal;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
          ++steps;
          steps_held += induction_step_check(ctx, a, i);
        }
      }
      std::string tag = " n=" + std::to_string(n) + " k=" + k.get_str();
      rep.cases.push_back(exact_case("identity" + tag, in, held, amax));
      rep.cases.push_back(exact_case("induction-step" + tag, in, steps_held, steps));
    }
  }
  return rep;
}

/// Rational samples p/q with |p| <= 12, 1 <= q <= 6, drawn from the seed.
inline std::vector<Rational> seeded_rationals(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    long p = static_cast<long>(rng() % 25) - 12;
    long q = static_cast<long>(rng() % 6) + 1;
    out.push_back(detail::rq(p, q));
  }
  return out;
}

inline SuiteReport suite_eval_pairing(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"eval-pairing"};
  const int deg = cfg.max_degree.value_or(4);
  const auto mus = seeded_rationals(cfg.seed, 6);
  json mj = json::array();
  for (const auto& m : mus) mj.push_back(m.get_str());
  for (int n : detail::n_list(cfg, {2, 3})) {
    for (const auto& k : detail::exact_k_list(cfg, {rq(1, 2), rq(2)})) {
      auto t = cached_jack_table(n, Rational(1 / k), deg);
      long held = 0, checked = 0;
      for (int m = 0; m <= deg; ++m) {
        for (const auto& lam : t->partitions(m)) {
          for (const auto& s : eval_pairing_check(*t, k, lam, mus).samples) {
            ++checked;
            held += s.equal;
          }
        }
      }
      rep.cases.push_back(exact_case("pairing n=" + std::to_string(n) + " k=" + k.get_str(),
                                     {{"n", n}, {"k", k.get_str()}, {"max_degree", deg}, {"mu", mj}, {"seed", cfg.seed}},
                                     held, checked));
    }
  }
  return rep;
}

inline SuiteReport suite_binomial(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"binomial"};
  std::vector<Rational> alphas = {rq(1, 2), rq(2)};
  if (cfg.k) {
    alphas.clear();
    for (const auto& k : detail::exact_k_list(cfg, {})) alphas.push_back(Rational(1 / k));
  }
  for (int n : detail::n_list(cfg, {2, 3})) {
    const int deg = cfg.max_degree.value_or(n <= 2 ? 6 : 4);
    for (const auto& alpha : alphas) {
      auto t = cached_jack_table(n, alpha, deg);
      for (const auto& a : {rq(5, 3), rq(-1, 2), rq(3)}) {
        auto b = binomial_check(a, *t, deg);
        long held = 0;
        for (const auto& d : b.degrees) held += d.equal;
        rep.cases.push_back(exact_case("binomial n=" + std::to_string(n) + " alpha=" + alpha.get_str() + " a=" + a.get_str(),
                                       {{"n", n}, {"alpha", alpha.get_str()}, {"a", a.get_str()}, {"max_degree", deg}},
                                       held, deg + 1));
      }
    }
  }
  return rep;
}

inline SuiteReport suite_mehta(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"mehta"};
  struct Case {
    int n;
    Multiplicity k;
    double tol;
  };
  std::vector<Case> cases;
  if (cfg.n || cfg.k || cfg.tol) {
    int n = cfg.n.value_or(2);
    for (const auto& k : detail::k_list(cfg, {rq(1, 2), rq(1)})) cases.push_back({n, k, cfg.tol.value_or(n <= 2 ? 1e-6 : 1e-3)});
  } else {
    cases = {{2, Multiplicity(rq(1, 2)), 1e-6}, {2, Multiplicity(rq(1)), 1e-6}, {3, Multiplicity(rq(1, 2)), 1e-3}};
  }
  for (const auto& c : cases) {
    if (!detail::gate_dimension(rep, c.n, cfg)) continue;
    rep.cases.push_back(identity_case("mehta n=" + std::to_string(c.n) + " k=" + c.k.to_string(),
                                      mehta_check(c.n, c.k, c.tol, cfg.threads)));
  }
  return rep;
}

inline SuiteReport suite_macdonald(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"macdonald"};
  const int n = cfg.n.value_or(2);
  if (!detail::gate_dimension(rep, n, cfg)) return rep;
  const double tol = cfg.tol.value_or(1e-4);
  const cdouble mu = cfg.mu ? ScalarValue::parse(*cfg.mu).to_complex() : cdouble(2);
  std::vector<Partition> lams;
  if (cfg.lambda) {
    lams = {*cfg.lambda};
  } else {
    for (int m = 0; m <= cfg.max_degree.value_or(2); ++m)
      for (const auto& lam : enumerate_partitions(m, n)) lams.push_back(lam);
  }
  for (const auto& k : detail::k_list(cfg, {rq(1, 2)})) {
    for (const auto& lam : lams) {
      rep.cases.push_back(identity_case("macdonald n=" + std::to_string(n) + " k=" + k.to_string() + " lambda=" + lam.to_string(),
                                        macdonald_check(n, k, mu, lam, tol, cfg.threads)));
    }
  }
  return rep;
}

inline SuiteReport suite_kadell(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"kadell"};
  const int n = cfg.n.value_or(2);
  const double tol = cfg.tol.value_or(1e-4);
  const double mu = cfg.mu ? ScalarValue::parse(*cfg.mu).to_complex().real() : 2.0;
  const double nu = cfg.nu ? ScalarValue::parse(*cfg.nu).to_complex().real() : mu;
  std::vector<Partition> lams = {Partition(), Partition({1})};
  if (cfg.lambda) lams = {*cfg.lambda};
  for (const auto& k : detail::k_list(cfg, {rq(1, 2)})) {
    for (const auto& lam : lams) {
      rep.cases.push_back(identity_case("kadell n=" + std::to_string(n) + " k=" + k.to_string() + " lambda=" + lam.to_string(),
                                        kadell_check(n, k, mu, nu, lam, tol, cfg.threads)));
    }
  }
  return rep;
}

inline SuiteReport suite_laplace_power(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"laplace-power"};
  const int n = cfg.n.value_or(2);
  if (!detail::gate_dimension(rep, n, cfg)) return rep;
  const double tol = cfg.tol.value_or(1e-4);
  std::vector<cdouble> mus = {1.7, 2.5};
  if (cfg.mu) mus = {ScalarValue::parse(*cfg.mu).to_complex()};
  std::vector<std::vector<cdouble>> zs;
  if (n == 2) {
    zs = {{1, 2}, {{1, 0.5}, 2}};
  } else {
    std::vector<cdouble> z, zi;
    for (int i = 0; i < n; ++i) {
      z.emplace_back(1 + 0.5 * i);
      zi.emplace_back(1 + 0.5 * i, i == 0 ? 0.5 : 0.0);
    }
    zs = {z, zi};
  }
  if (cfg.z) {
    if (static_cast<int>(cfg.z->size()) != n) throw DomainError("--z must have n coordinates");
    zs = {*cfg.z};
  }
  for (const auto& k : detail::k_list(cfg, {rq(3, 4)})) {
    for (const auto& mu : mus) {
      for (const auto& z : zs) {
        auto r = laplace_power_check(n, k, mu, z, tol, cfg.threads);
        rep.cases.push_back(identity_case("laplace-power mu=" + format_complex(mu) + " z=" + format_vector(z), r));
      }
    }
    auto s = laplace_shift_check(n, k, mus.front(), 0.5, zs.front(), tol, cfg.threads);
    rep.cases.push_back(identity_case("laplace-shift s=0.5", s));
  }
  return rep;
}

inline SuiteReport suite_discrete_wallach(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"discrete-wallach"};
  struct Case {
    int n;
    int r;
    Multiplicity k;
    std::vector<cdouble> z;
    double tol;
  };
  std::vector<Case> cases;
  auto zfor = [&cfg](int n) {
    if (cfg.z && static_cast<int>(cfg.z->size()) == n) return *cfg.z;
    std::vector<cdouble> z;
    for (int i = 0; i < n; ++i) z.emplace_back(1 + (n == 2 ? 1.0 : 0.5) * i);
    return z;
  };
  if (cfg.z && (!cfg.n || static_cast<int>(cfg.z->size()) != *cfg.n))
    throw DomainError("--z requires --n with the same number of coordinates");
  if (cfg.n || cfg.k || cfg.tol) {
    int n = cfg.n.value_or(2);
    for (const auto& k : detail::k_list(cfg, {rq(1, 2)}))
      for (int r = 1; r <= n - 1; ++r) cases.push_back({n, r, k, zfor(n), cfg.tol.value_or(n <= 2 ? 1e-4 : 1e-3)});
  } else {
    for (const auto& k : {rq(1, 2), rq(1)}) cases.push_back({2, 1, Multiplicity(k), zfor(2), 1e-4});
    for (int r = 1; r <= 2; ++r) cases.push_back({3, r, Multiplicity(rq(1, 2)), zfor(3), 1e-3});
  }
  if (!cases.empty() && !detail::gate_dimension(rep, cases.front().n, cfg)) return rep;
  for (const auto& c : cases) {
    auto r = discrete_wallach_laplace_check(c.n, c.r, c.k, c.z, c.tol, cfg.threads);
    rep.cases.push_back(identity_case("laplace n=" + std::to_string(c.n) + " r=" + std::to_string(c.r) + " k=" + c.k.to_string(), r));
  }
  // R_0 = delta_0 has Laplace transform 1
  for (int n : detail::n_list(cfg, {2, 3})) {
    DiscreteWallachMeasure delta(n, Multiplicity(rq(1, 2)), 0);
    std::vector<cdouble> z = zfor(n), w;
    for (const auto& c : z) w.push_back(-c);
    auto val = delta.pair([&](std::span<const double> x) {
      std::vector<cdouble> xc(x.begin(), x.end());
      return bessel_J(std::span<const cdouble>(xc), std::span<const cdouble>(w), 0.5).value;
    }, {});
    CaseResult c;
    c.name = "point-mass n=" + std::to_string(n);
    c.inputs = {{"n", n}, {"r", 0}, {"z", format_vector(z)}};
    c.computed = complex_json(val.value);
    c.reference = 1.0;
    c.abs_err = std::abs(val.value - 1.0);
    c.rel_err = c.abs_err;
    c.pass = c.abs_err <= 1e-14;
    rep.cases.push_back(std::move(c));
  }
  // exact length-restricted series
  const int deg = cfg.max_degree.value_or(5);
  for (int n : detail::n_list(cfg, {2, 3})) {
    for (const auto& k : detail::exact_k_list(cfg, {rq(1, 2), rq(1)})) {
      for (int r = 0; r <= n - 1; ++r) {
        auto b = discrete_wallach_series_check(n, r, k, deg);
        long held = 0;
        for (const auto& d : b.degrees) held += d.equal && d.dropped_vanish;
        rep.cases.push_back(exact_case("series n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + k.get_str(),
                                       {{"n", n}, {"r", r}, {"k", k.get_str()}, {"max_degree", deg}}, held, deg + 1));
      }
    }
  }
  return rep;
}

inline SuiteReport suite_wallach(const SuiteConfig& cfg) {
  using detail::rq;
  SuiteReport rep{"wallach"};
  for (int n : detail::n_list(cfg, {2, 3, 4})) {
    for (const auto& k : detail::exact_k_list(cfg, {rq(1, 3), rq(1, 2), rq(2)})) {
      const Rational mu0 = k * (n - 1);
      const int scan = cfg.max_degree.value_or(n + 1);
      long held = 0, checked = 0, gaps = 0, witnesses = 0;
      for (Rational mu = -k; mu <= k * (n + 1); mu += k / 4) {
        mu.canonicalize();
        ++checked;
        bool wallach = mu > mu0;
        for (int r = 0; r < n; ++r) wallach = wallach || mu == k * r;
        bool gap = !wallach && mu > 0;
        auto v = wallach_classify(mu, n, Multiplicity(k));
        bool positive = v.verdict == WallachKind::positive_measure_continuous ||
                        v.verdict == WallachKind::positive_measure_discrete;
        bool ok = positive == wallach;
        if (gap) {
          ++gaps;
          bool wit = v.witness && v.witness->length() == v.r + 1 && gpochhammer(mu, *v.witness, k) < 0;
          witnesses += wit;
          ok = ok && wit;
        } else {
          ok = ok && !v.witness;
        }
        auto sw = sign_witness(mu, n, k, scan);
        ok = ok && sw.all_nonnegative == wallach;
        ok = ok && sign_witness(mu, n, k, scan + 2).all_nonnegative == sw.all_nonnegative;
        held += ok;
      }
      auto c = exact_case("grid n=" + std::to_string(n) + " k=" + k.get_str(),
                          {{"n", n}, {"k", k.get_str()}, {"step", Rational(k / 4).get_str()}, {"scan_degree", scan}}, held, checked);
      c.notes.push_back("gap points " + std::to_string(gaps) + ", witnesses " + std::to_string(witnesses));
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

inline SuiteReport suite_bessel_properties(const SuiteConfig& cfg) {
  SuiteReport rep{"bessel-properties"};
  const double tol = cfg.tol.value_or(1e-10);
  const int trials = cfg.trials;
  const int nmax = std::min(cfg.n.value_or(3), 3);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0, 1);
  auto uni = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  auto kdraw = [&]() { return cfg.k ? Multiplicity::parse(*cfg.k).value() : uni(0.2, 3.0); };
  auto vec = [&](int n, double lo, double hi, double im = 0) {
    std::vector<cdouble> v;
    for (int i = 0; i < n; ++i) v.emplace_back(uni(lo, hi), im == 0 ? 0.0 : uni(-im, im));
    return v;
  };
  BesselOptions raw;
  raw.centered = false;
  raw.rel_tol = tol * 1e-2;
  BesselOptions centered;
  centered.rel_tol = tol * 1e-2;

  struct Tally {
    long held = 0;
    double worst = 0;
  };
  auto record = [&](const std::string& name, const Tally& t, json in) {
    CaseResult c;
    c.name = name;
    in["trials"] = trials;
    in["tol"] = tol;
    in["seed"] = cfg.seed;
    in["n_max"] = nmax;
    c.inputs = std::move(in);
    c.computed = t.held;
    c.reference = trials;
    c.abs_err = t.worst;
    c.rel_err = t.worst;
    c.pass = t.held == trials;
    rep.cases.push_back(std::move(c));
  };
  auto rel = [](cdouble a, cdouble b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };

  Tally ones, shift, decay, imag, perm;
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % nmax;
    const double k = kdraw();
    {
      std::vector<cdouble> x(static_cast<std::size_t>(n), cdouble(1));
      auto z = vec(n, -1, 1, 0.5);
      cdouble s = std::accumulate(z.begin(), z.end(), cdouble(0));
      double d = rel(bessel_J(std::span<const cdouble>(x), std::span<const cdouble>(z), k, raw).value, std::exp(s));
      ones.worst = std::max(ones.worst, d);
      ones.held += d <= tol;
    }
    {
      auto x = vec(n, -1, 1);
      auto z = vec(n, -0.5, 0.5, 0.3);
      double s = uni(0, 0.5);
      auto pc = shift_factorization_check(std::span<const cdouble>(x), std::span<const cdouble>(z), s, k, tol);
      shift.worst = std::max(shift.worst, pc.diff / std::max(std::abs(pc.rhs), 1e-300));
      shift.held += pc.pass;
    }
    {
      std::vector<double> x;
      for (int i = 0; i < n; ++i) x.push_back(uni(0, 2));
      double s = uni(0.1, 1);
      std::vector<cdouble> z;
      for (int i = 0; i < n; ++i) z.emplace_back(s + uni(0, 1), uni(-1, 1));
      auto pc = decay_bound_check(std::span<const double>(x), std::span<const cdouble>(z), s, k, tol);
      decay.worst = std::max(decay.worst, std::max(0.0, pc.diff));
      decay.held += pc.pass;
    }
    {
      auto x = vec(n, -2, 2), y = vec(n, -2, 2);
      for (auto& v : x) v *= cdouble(0, 1);
      double a = std::abs(bessel_J(std::span<const cdouble>(x), std::span<const cdouble>(y), k, centered).value);
      imag.worst = std::max(imag.worst, std::max(0.0, a - 1));
      imag.held += a <= 1 + tol;
    }
    {
      auto x = vec(n, -1.5, 1.5), z = vec(n, -1.5, 1.5, 0.5);
      std::vector<std::size_t> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
      std::vector<cdouble> px;
      for (auto i : p) px.push_back(x[i]);
      auto a = bessel_J(std::span<const cdouble>(x), std::span<const cdouble>(z), k, centered).value;
      auto b = bessel_J(std::span<const cdouble>(px), std::span<const cdouble>(z), k, centered).value;
      double d = rel(b, a);
      perm.worst = std::max(perm.worst, d);
      perm.held += d <= tol;
    }
  }
  record("ones-exponential", ones, {{"property", "J(1,z) = exp(sum z)"}});
  record("shift-factorization", shift, {{"property", "J(x, z + s1) = exp(s sum x) J(x, z)"}});
  record("decay-bound", decay, {{"property", "|J(-x, z)| <= exp(-s |x|_1)"}});
  record("imaginary-bound", imag, {{"property", "|J(ix, y)| <= 1"}});
  record("permutation-symmetry", perm, {{"property", "J(sigma x, z) = J(x, z)"}});
  return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteConfig&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"jack", suite_jack},
      {"bernstein", suite_bernstein},
      {"eval-pairing", suite_eval_pairing},
      {"binomial", suite_binomial},
      {"mehta", suite_mehta},
      {"macdonald", suite_macdonald},
      {"kadell", suite_kadell},
      {"laplace-power", suite_laplace_power},
      {"discrete-wallach", suite_discrete_wallach},
      {"wallach", suite_wallach},
      {"bessel-properties", suite_bessel_properties},
  };
  return r;
}

/// Runs one suite; errors become a failing case instead of escaping.
inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  for (const auto& [id, fn] : suite_registry()) {
    if (id != name) continue;
    try {
      SuiteReport rep = fn(cfg);
      if (cfg.k && !try_parse_rational(*cfg.k)) rep.warnings.push_back("k = " + *cfg.k + " parsed as a floating value");
      return rep;
    } catch (const Error& e) {
      SuiteReport rep{name};
      CaseResult c;
      c.name = "error";
      c.computed = nullptr;
      c.reference = nullptr;
      c.notes.push_back(e.what());
      rep.cases.push_back(std::move(c));
      return rep;
    }
  }
  throw DomainError("unknown suite '" + name + "'");
}

/// All registered suites, in registry order. With parallel the suites run
/// concurrently; reports are still collected in order.
inline std::vector<SuiteReport> verify_all(const SuiteConfig& cfg, bool parallel = false) {
  std::vector<SuiteReport> out;
  if (!parallel) {
    for (const auto& [id, fn] : suite_registry()) out.push_back(run_suite(id, cfg));
    return out;
  }
  std::vector<std::future<SuiteReport>> futs;
  for (const auto& [id, fn] : suite_registry())
    futs.push_back(std::async(std::launch::async, [name = id, &cfg] { return run_suite(name, cfg); }));
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace dunkl
