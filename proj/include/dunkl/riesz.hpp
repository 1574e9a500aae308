#pragma once

// Riesz densities, the generalized Wallach set and the discrete Wallach
// measures on the boundary strata of the positive orthant.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/bessel.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/integrals.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/partitions.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

/// D(x)^{mu-mu0-1} / (d_n Gamma_n(mu)), meaningful as a function for Re mu > mu0.
class RieszDensity {
 public:
  RieszDensity(int n, const Multiplicity& k, cdouble mu) : n_(n), k_(k.value()), mu_(mu) {
    if (n < 1) throw DomainError("Riesz density requires n >= 1");
    if (!(k_ > 0)) throw DomainError("Riesz density requires k > 0");
    function_regime_ = mu.real() > k_ * (n - 1);
    if (function_regime_) norm_ = 1.0 / (d_n_value(n, k_) * gamma_n_value(mu, n, k_));
  }

  int n() const { return n_; }
  double k() const { return k_; }
  cdouble mu() const { return mu_; }
  double mu0() const { return k_ * (n_ - 1); }
  bool function_regime() const { return function_regime_; }
  cdouble normalization() const { return norm_; }

  cdouble operator()(std::span<const double> x) const {
    if (!function_regime_)
      throw DistributionOnly("R_mu with Re mu <= k(n-1) is a distribution, not a density");
    if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("point must have n coordinates");
    for (double v : x)
      if (!(v > 0)) throw DomainError("Riesz density is evaluated on the open positive orthant");
    return norm_ * real_power(coord_product(x), mu_ - mu0() - 1.0);
  }

 private:
  int n_;
  double k_;
  cdouble mu_;
  bool function_regime_ = false;
  cdouble norm_ = 0;
};

inline cdouble riesz_density_eval(const RieszDensity& d, std::span<const double> x) { return d(x); }

/// R_{kr}: symmetrization of R'_{kn} on R^r times the point mass at 0 in R^{n-r}.
class DiscreteWallachMeasure {
 public:
  DiscreteWallachMeasure(int n, const Multiplicity& k, int r) : n_(n), k_(k.value()), r_(r) {
    if (n < 1) throw DomainError("discrete Wallach measure requires n >= 1");
    if (!(k_ > 0)) throw DomainError("discrete Wallach measure requires k > 0");
    if (r < 0 || r > n - 1) throw DomainError("discrete Wallach index r must lie in {0, ..., n-1}");
  }

  int n() const { return n_; }
  int r() const { return r_; }
  double k() const { return k_; }
  double mu() const { return k_ * r_; }

  /// Pairing with an S_n-invariant test function, by r-dimensional quadrature.
  /// phi receives the full n-vector (x', 0).
  QuadResult pair(const std::function<cdouble(std::span<const double>)>& phi, const QuadOptions& opt) const {
    std::vector<double> origin(static_cast<std::size_t>(n_), 0.0);
    if (r_ == 0) {
      QuadResult res;
      res.value = phi(std::span<const double>(origin));
      res.evaluations = 1;
      return res;
    }
    const double exponent = k_ * (n_ - r_ + 1) - 1;
    const double norm = 1.0 / (d_n_value(r_, k_) * gamma_n_value(k_ * n_, r_, k_).real());
    const int n = n_;
    QuadratureJob job;
    job.n = r_;
    job.domain = Domain::positive_orthant;
    job.options = opt;
    job.integrand = [&, exponent, n](std::span<const double> xr) -> cdouble {
      thread_local std::vector<double> full;
      full.assign(static_cast<std::size_t>(n), 0.0);
      std::copy(xr.begin(), xr.end(), full.begin());
      double w = std::pow(coord_product(xr), exponent) * weight_omega(xr, k_);
      if (w == 0 || !std::isfinite(w)) return 0;
      return w * phi(std::span<const double>(full));
    };
    QuadResult res = chamber_integrate(job);
    res.value *= norm;
    res.error_estimate *= norm;
    return res;
  }

  /// Closed-form Laplace transform D(z)^{-kr}.
  cdouble laplace(const std::vector<cdouble>& z) const {
    cdouble p = 1;
    for (const auto& c : z) p *= std::pow(c, -mu());
    return p;
  }

 private:
  int n_;
  double k_;
  int r_;
};

enum class WallachKind {
  positive_measure_continuous,
  positive_measure_discrete,
  not_positive_measure,
  not_a_measure_candidate,
};

inline std::string to_string(WallachKind v) {
  switch (v) {
    case WallachKind::positive_measure_continuous: return "positive_measure_continuous";
    case WallachKind::positive_measure_discrete: return "positive_measure_discrete";
    case WallachKind::not_positive_measure: return "not_positive_measure";
    case WallachKind::not_a_measure_candidate: return "not_a_measure_candidate";
  }
  return "unknown";
}

/// Status of the necessary condition for R_mu to be a complex measure.
enum class ComplexMeasureStatus {
  excluded,      // fails the necessary condition
  measure,       // known to be a (possibly complex) measure
  undetermined,  // survives the necessary condition, not settled by the classification
};

inline std::string to_string(ComplexMeasureStatus s) {
  switch (s) {
    case ComplexMeasureStatus::excluded: return "excluded";
    case ComplexMeasureStatus::measure: return "measure";
    case ComplexMeasureStatus::undetermined: return "undetermined";
  }
  return "unknown";
}

struct WallachVerdict {
  WallachKind verdict = WallachKind::not_positive_measure;
  int r = -1;  // discrete index, or the gap index with mu in (k(r-1), kr)
  std::optional<Partition> witness;
  std::optional<std::string> pochhammer_value;  // [mu]_witness
  bool candidate_complex_measure = false;
  ComplexMeasureStatus complex_measure = ComplexMeasureStatus::excluded;
  bool tolerance_tagged = false;
  std::vector<std::string> notes;

  std::string label() const {
    if (verdict == WallachKind::positive_measure_discrete) return to_string(verdict) + "(" + std::to_string(r) + ")";
    return to_string(verdict);
  }
};

struct SignWitnessReport {
  std::optional<Partition> witness;
  std::optional<Rational> value;
  bool all_nonnegative = true;  // over the scanned partitions
  int scanned_degree = 0;
  long scanned = 0;
};

namespace detail {

/// mu in {k j - m : j = 0..n-1, m in N_0} and mu >= 0, exactly.
inline bool in_shifted_finite_set(const Rational& mu, int n, const Rational& k) {
  if (mu < 0) return false;
  for (int j = 0; j < n; ++j) {
    Rational d = k * j - mu;
    if (d >= 0 && d.get_den() == 1) return true;
  }
  return false;
}

inline bool in_shifted_finite_set(double mu, int n, double k, double tol) {
  if (mu < -tol) return false;
  for (int j = 0; j < n; ++j) {
    double d = k * j - mu;
    if (d >= -tol && std::abs(d - std::round(d)) <= tol) return true;
  }
  return false;
}

}  // namespace detail

/// [mu]_lambda over |lambda| <= max_degree, l(lambda) <= n. For mu in a gap
/// (k(r-1), kr) the witness is (1^{r+1}); outside [0, inf) it is (1).
inline SignWitnessReport sign_witness(const Rational& mu, int n, const Rational& k, int max_degree) {
  if (!(k > 0)) throw DomainError("sign witness requires k > 0");
  SignWitnessReport rep;
  rep.scanned_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    for (const auto& lam : enumerate_partitions(m, n)) {
      ++rep.scanned;
      if (gpochhammer(mu, lam, k) < 0) rep.all_nonnegative = false;
    }
  }
  const Rational mu0 = k * (n - 1);
  if (mu > mu0) return rep;
  if (mu < 0) {
    rep.witness = Partition({1});
    rep.value = mu;
    return rep;
  }
  for (int r = 1; r <= n - 1; ++r) {
    if (mu > k * (r - 1) && mu < k * r) {
      Partition lam = Partition::ones(r + 1);
      Rational v = gpochhammer(mu, lam, k);
      if (!(v < 0)) throw InternalError("gap witness has nonnegative Pochhammer value");
      rep.witness = lam;
      rep.value = v;
      return rep;
    }
  }
  return rep;
}

/// Classification of R_mu against the generalized Wallach set
/// {0, k, ..., k(n-1)} u (k(n-1), inf).
inline WallachVerdict wallach_classify(const ScalarValue& mu, int n, const Multiplicity& k) {
  if (n < 1) throw DomainError("wallach_classify requires n >= 1");
  if (!(k.value() > 0)) throw DomainError("wallach_classify requires k > 0");
  WallachVerdict v;
  if (mu.is_exact() && k.is_exact()) {
    const Rational& m = mu.exact();
    const Rational& kk = k.exact();
    const Rational mu0 = kk * (n - 1);
    v.candidate_complex_measure = m > mu0 || detail::in_shifted_finite_set(m, n, kk);
    if (m > mu0) {
      v.verdict = WallachKind::positive_measure_continuous;
      v.complex_measure = ComplexMeasureStatus::measure;
      return v;
    }
    for (int r = 0; r <= n - 1; ++r) {
      if (m == kk * r) {
        v.verdict = WallachKind::positive_measure_discrete;
        v.r = r;
        v.complex_measure = ComplexMeasureStatus::measure;
        return v;
      }
    }
    if (m < 0) {
      v.verdict = WallachKind::not_a_measure_candidate;
      v.notes.push_back("negative mu: [mu]_(1) = " + m.get_str() + " < 0");
      return v;
    }
    auto sw = sign_witness(m, n, kk, 0);
    v.verdict = WallachKind::not_positive_measure;
    v.witness = sw.witness;
    if (sw.value) v.pochhammer_value = sw.value->get_str();
    for (int r = 1; r <= n - 1; ++r)
      if (m > kk * (r - 1) && m < kk * r) v.r = r;
    v.complex_measure = v.candidate_complex_measure ? ComplexMeasureStatus::undetermined : ComplexMeasureStatus::excluded;
    return v;
  }

  constexpr double tol = 1e-12;
  const cdouble z = mu.to_complex();
  const double kk = k.value();
  const double mu0 = kk * (n - 1);
  v.tolerance_tagged = true;
  v.notes.push_back("floating classification, tolerance 1e-12");
  const bool real = std::abs(z.imag()) <= tol;
  if (!real) {
    if (z.real() > mu0) {
      v.verdict = WallachKind::not_positive_measure;
      v.candidate_complex_measure = true;
      v.complex_measure = ComplexMeasureStatus::measure;
    } else {
      v.verdict = WallachKind::not_a_measure_candidate;
    }
    return v;
  }
  const double m = z.real();
  v.candidate_complex_measure = m > mu0 + tol || detail::in_shifted_finite_set(m, n, kk, tol);
  for (int r = 0; r <= n - 1; ++r) {
    if (std::abs(m - kk * r) <= tol) {
      v.verdict = WallachKind::positive_measure_discrete;
      v.r = r;
      v.complex_measure = ComplexMeasureStatus::measure;
      return v;
    }
  }
  if (m > mu0) {
    v.verdict = WallachKind::positive_measure_continuous;
    v.complex_measure = ComplexMeasureStatus::measure;
    return v;
  }
  if (m < 0) {
    v.verdict = WallachKind::not_a_measure_candidate;
    return v;
  }
  v.verdict = WallachKind::not_positive_measure;
  for (int r = 1; r <= n - 1; ++r) {
    if (m > kk * (r - 1) && m < kk * r) {
      v.r = r;
      Partition lam = Partition::ones(r + 1);
      v.witness = lam;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", gpochhammer<double>(m, lam, kk));
      v.pochhammer_value = buf;
    }
  }
  v.complex_measure = v.candidate_complex_measure ? ComplexMeasureStatus::undetermined : ComplexMeasureStatus::excluded;
  return v;
}

/// (1/(d_r Gamma_r(kn))) int_{R_+^r} J((x',0), -z) D(x')^{k(n-r+1)-1} omega_k(x') dx' = D(z)^{-kr}.
inline IdentityReport discrete_wallach_laplace_check(int n, int r, const Multiplicity& k, const std::vector<cdouble>& z,
                                                     double rel_tol, int threads = 1) {
  if (r < 1 || r > n - 1) throw DomainError("discrete Wallach check requires 1 <= r <= n-1");
  if (static_cast<int>(z.size()) != n) throw DimensionMismatch("z must have n coordinates");
  for (const auto& c : z)
    if (!(c.real() > 0)) throw DomainError("discrete Wallach check requires Re z_i > 0");
  const double kk = k.value();
  IdentityReport rep;
  rep.target = "discrete-wallach";
  rep.inputs = {{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"k", k.to_string()}, {"z", format_vector(z)}};
  rep.tolerance = rel_tol;
  DiscreteWallachMeasure measure(n, k, r);

  std::vector<cdouble> w;
  for (const auto& c : z) w.push_back(-c);
  KernelTolerance tol = kernel_tolerance(rel_tol);
  BesselOptions bo;
  bo.rel_tol = tol.rel;
  BesselKernel kernel(w, kk, bo);
  const double exponent = kk * (n - r + 1) - 1;
  QuadOptions qo;
  qo.rel_tol = rel_tol * 0.1;
  qo.threads = threads;
  // the series absolute tolerance is scaled by the local weight, recomputed here
  auto phi = [&](std::span<const double> x) -> cdouble {
    std::span<const double> xr = x.first(static_cast<std::size_t>(r));
    double aw = std::pow(coord_product(xr), exponent) * weight_omega(xr, kk);
    std::vector<cdouble> xc(x.begin(), x.end());
    SeriesEval j = kernel.eval(std::span<const cdouble>(xc), tol.rel, tol.eps_abs / std::max(aw, 1e-300));
    return j.value;
  };
  rep.quad = measure.pair(phi, qo);
  rep.computed = rep.quad.value;
  rep.reference = measure.laplace(z);
  rep.notes = rep.quad.warnings;
  rep.finish();
  return rep;
}

/// Exact series form: sum over l(lambda) <= r of [kr]_lambda C_lambda(-z)/|lambda|!
/// against prod_i (1 + z_i)^{-kr}, per degree.
inline BinomialReport discrete_wallach_series_check(int n, int r, const Rational& k, int max_degree) {
  if (r < 0 || r > n - 1) throw DomainError("discrete Wallach index r must lie in {0, ..., n-1}");
  if (!(k > 0)) throw DomainError("discrete Wallach series requires k > 0");
  auto table = cached_jack_table(n, Rational(1 / k), max_degree);
  return binomial_check(Rational(k * r), *table, max_degree, r, true);
}

}  // namespace dunkl
