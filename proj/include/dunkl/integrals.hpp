#pragma once

// Numerical checks of the integral formulas: Mehta, Macdonald, Kadell, the
// Laplace transform of D(x)^{mu - mu0 - 1}, and its shift property.

#include <charconv>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dunkl/bessel.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

struct IdentityReport {
  std::string target;
  std::map<std::string, std::string> inputs;
  cdouble computed;
  cdouble reference;
  double abs_err = 0;
  double rel_err = 0;
  double tolerance = 0;
  bool pass = false;
  QuadResult quad;
  std::vector<std::string> notes;

  void finish() {
    abs_err = std::abs(computed - reference);
    rel_err = abs_err / std::abs(reference);
    pass = rel_err <= tolerance;
  }
};

inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Shortest round-trip form, "a" or "a+bi".
inline std::string format_complex(cdouble z) {
  if (z.imag() == 0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i";
}

inline std::string format_vector(const std::vector<cdouble>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_complex(v[i]);
  return s;
}

/// Series tolerances inside an integrand: the relative part tracks the
/// quadrature target, the absolute part is divided by the local weight so the
/// integrated truncation error stays below about eps_abs.
struct KernelTolerance {
  double rel;
  double eps_abs;
};

inline KernelTolerance kernel_tolerance(double quad_rel_tol) { return {quad_rel_tol * 1e-3, quad_rel_tol * 1e-4}; }

/// C_lambda(x) / C_lambda(1) with alpha = 1/k, from the floating table.
class NormalizedJack {
 public:
  NormalizedJack(int n, double k, const Partition& lam) : lam_(lam) {
    if (!(k > 0)) throw DomainError("normalized Jack polynomial requires k > 0");
    if (lam.length() > n) throw DomainError("partition longer than the variable count");
    table_ = cached_numeric_table(n, 1.0 / k);
    const auto& d = table_->degree(lam.weight());
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      if (d.parts[i] != lam) continue;
      row_ = i;
      inv_ones_ = 1.0 / d.at_ones[i];
    }
    deg_ = &d;
  }

  double operator()(std::span<const double> x) const {
    const auto& d = *deg_;
    double s = 0;
    for (std::size_t j = row_; j < d.parts.size(); ++j) {
      double c = d.c[row_][j - row_];
      if (c == 0) continue;
      double mono = 0;
      for (const auto& e : d.arrangements[j]) {
        double t = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
          for (int r = 0; r < e[i]; ++r) t *= x[i];
        mono += t;
      }
      s += c * mono;
    }
    return s * inv_ones_;
  }

 private:
  Partition lam_;
  std::shared_ptr<const NumericJackTable<double>> table_;
  const NumericJackTable<double>::Degree* deg_ = nullptr;
  std::size_t row_ = 0;
  double inv_ones_ = 1;
};

/// Power with the principal branch, real base > 0.
inline cdouble real_power(double base, cdouble exponent) { return std::exp(exponent * std::log(base)); }

/// int_{R^n} e^{-|x|^2/2} omega_k(x) dx = (2 pi)^{n/2} d_n(k).
inline IdentityReport mehta_check(int n, const Multiplicity& k, double rel_tol, int threads = 1) {
  IdentityReport rep;
  rep.target = "mehta";
  rep.inputs = {{"n", std::to_string(n)}, {"k", k.to_string()}, {"tol", format_complex(rel_tol)}};
  rep.tolerance = rel_tol;
  const double kk = k.value();
  QuadratureJob job;
  job.n = n;
  job.domain = Domain::real_space;
  job.options.rel_tol = rel_tol * 0.1;
  job.options.threads = threads;
  job.integrand = [kk](std::span<const double> x) -> cdouble {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    return std::exp(-r2 / 2) * weight_omega(x, kk);
  };
  rep.quad = chamber_integrate(job);
  rep.computed = rep.quad.value;
  rep.reference = normalization_constants(n, k, 30).c_kn.convert_to<double>();
  rep.notes = rep.quad.warnings;
  rep.finish();
  return rep;
}

/// int_{R_+^n} C~_lambda(x) e^{-<x,1>} D(x)^{mu-mu0-1} omega_k(x) dx = d_n Gamma_n(mu) [mu]_lambda.
inline IdentityReport macdonald_check(int n, const Multiplicity& k, cdouble mu, const Partition& lam, double rel_tol,
                                      int threads = 1) {
  const double kk = k.value();
  const double mu0 = kk * (n - 1);
  if (!(mu.real() > mu0)) throw DomainError("Macdonald integral requires Re mu > k(n-1)");
  IdentityReport rep;
  rep.target = "macdonald";
  rep.inputs = {{"n", std::to_string(n)}, {"k", k.to_string()}, {"mu", format_complex(mu)}, {"lambda", lam.to_string()}};
  rep.tolerance = rel_tol;
  NormalizedJack jack(n, kk, lam);
  const cdouble beta = mu - mu0 - 1.0;
  QuadratureJob job;
  job.n = n;
  job.domain = Domain::positive_orthant;
  job.options.rel_tol = rel_tol * 0.1;
  job.options.threads = threads;
  job.integrand = [&](std::span<const double> x) -> cdouble {
    double s = 0;
    for (double v : x) s += v;
    double e = std::exp(-s);
    if (e == 0) return 0;
    return jack(x) * e * real_power(coord_product(x), beta) * weight_omega(x, kk);
  };
  rep.quad = chamber_integrate(job);
  rep.computed = rep.quad.value;
  rep.reference = d_n_value(n, kk) * gamma_n_value(mu, n, kk) * gpochhammer<cdouble>(mu, lam, kk);
  rep.notes = rep.quad.warnings;
  rep.finish();
  return rep;
}

/// int_{[0,1]^n} C~_lambda D(y)^{mu-mu0-1} D(1-y)^{nu-mu0-1} omega_k dy
///   = d_n Gamma_n(mu) Gamma_n(nu) / Gamma_n(mu+nu) * [mu]_lambda / [mu+nu]_lambda.
inline IdentityReport kadell_check(int n, const Multiplicity& k, double mu, double nu, const Partition& lam, double rel_tol,
                                   int threads = 1) {
  const double kk = k.value();
  const double mu0 = kk * (n - 1);
  if (!(mu > mu0) || !(nu > mu0)) throw DomainError("Kadell integral requires mu, nu > k(n-1)");
  IdentityReport rep;
  rep.target = "kadell";
  rep.inputs = {{"n", std::to_string(n)},
                {"k", k.to_string()},
                {"mu", format_complex(mu)},
                {"nu", format_complex(nu)},
                {"lambda", lam.to_string()}};
  rep.tolerance = rel_tol;
  NormalizedJack jack(n, kk, lam);
  QuadratureJob job;
  job.n = n;
  job.domain = Domain::unit_cube;
  job.options.rel_tol = rel_tol * 0.1;
  job.options.threads = threads;
  job.integrand = [&](std::span<const double> y) -> cdouble {
    double d1 = 1, d2 = 1;
    for (double v : y) {
      d1 *= v;
      d2 *= 1 - v;
    }
    return jack(y) * std::pow(d1, mu - mu0 - 1) * std::pow(d2, nu - mu0 - 1) * weight_omega(y, kk);
  };
  rep.quad = chamber_integrate(job);
  rep.computed = rep.quad.value;
  auto poch = [&](double a) { return gpochhammer<double>(a, lam, kk); };
  cdouble g = gamma_n_value(mu, n, kk) * gamma_n_value(nu, n, kk) / gamma_n_value(mu + nu, n, kk);
  rep.reference = d_n_value(n, kk) * g * (poch(mu) / poch(mu + nu));
  rep.notes = rep.quad.warnings;
  rep.finish();
  return rep;
}

namespace detail {

/// int_{R_+^n} damping(x) J(-x, z) D(x)^{mu-mu0-1} omega_k(x) dx.
inline QuadResult laplace_power_integral(int n, double k, cdouble mu, const std::vector<cdouble>& z, double s,
                                         double rel_tol, int threads) {
  const double mu0 = k * (n - 1);
  const cdouble beta = mu - mu0 - 1.0;
  std::vector<cdouble> w;
  for (const auto& c : z) w.push_back(-c);
  BesselOptions bo;
  KernelTolerance tol = kernel_tolerance(rel_tol);
  bo.rel_tol = tol.rel;
  BesselKernel kernel(w, k, bo);
  QuadratureJob job;
  job.n = n;
  job.domain = Domain::positive_orthant;
  job.options.rel_tol = rel_tol * 0.1;
  job.options.threads = threads;
  job.integrand = [&, beta, s, tol](std::span<const double> x) -> cdouble {
    double sum = 0;
    for (double v : x) sum += v;
    cdouble weight = real_power(coord_product(x), beta) * weight_omega(x, k) * std::exp(-s * sum);
    double aw = std::abs(weight);
    if (aw == 0 || !std::isfinite(aw)) return 0;
    std::vector<cdouble> xc(x.begin(), x.end());
    SeriesEval j = kernel.eval(std::span<const cdouble>(xc), tol.rel, tol.eps_abs / std::max(aw, 1e-300));
    return weight * j.value;
  };
  return chamber_integrate(job);
}

}  // namespace detail

/// int_{R_+^n} J(-x, z) D(x)^{mu-mu0-1} omega_k(x) dx = d_n Gamma_n(mu) D(z)^{-mu},
/// with D(z)^{-mu} = prod_i z_i^{-mu} on the principal branch.
inline IdentityReport laplace_power_check(int n, const Multiplicity& k, cdouble mu, const std::vector<cdouble>& z,
                                          double rel_tol, int threads = 1) {
  const double kk = k.value();
  if (static_cast<int>(z.size()) != n) throw DimensionMismatch("z must have n coordinates");
  if (!(mu.real() > kk * (n - 1))) throw DomainError("Laplace power identity requires Re mu > k(n-1)");
  for (const auto& c : z)
    if (!(c.real() > 0)) throw DomainError("Laplace power identity requires Re z_i > 0");
  IdentityReport rep;
  rep.target = "laplace-power";
  rep.inputs = {{"n", std::to_string(n)}, {"k", k.to_string()}, {"mu", format_complex(mu)}, {"z", format_vector(z)}};
  rep.tolerance = rel_tol;
  rep.quad = detail::laplace_power_integral(n, kk, mu, z, 0.0, rel_tol, threads);
  rep.computed = rep.quad.value;
  cdouble dz = 1;
  for (const auto& c : z) dz *= std::pow(c, -mu);
  rep.reference = d_n_value(n, kk) * gamma_n_value(mu, n, kk) * dz;
  rep.notes = rep.quad.warnings;
  rep.finish();
  return rep;
}

/// L(e^{-<x, s1>} f)(z) against L(f)(z + s1) for f = D(x)^{mu-mu0-1}, by two
/// quadratures. The closed form at z + s1 is reported in the notes.
inline IdentityReport laplace_shift_check(int n, const Multiplicity& k, cdouble mu, double s, const std::vector<cdouble>& z,
                                          double rel_tol, int threads = 1) {
  const double kk = k.value();
  if (static_cast<int>(z.size()) != n) throw DimensionMismatch("z must have n coordinates");
  if (!(s >= 0)) throw DomainError("shift s must be nonnegative");
  IdentityReport rep;
  rep.target = "laplace-shift";
  rep.inputs = {{"n", std::to_string(n)},
                {"k", k.to_string()},
                {"mu", format_complex(mu)},
                {"s", format_complex(s)},
                {"z", format_vector(z)}};
  rep.tolerance = rel_tol;
  rep.quad = detail::laplace_power_integral(n, kk, mu, z, s, rel_tol, threads);
  rep.computed = rep.quad.value;
  std::vector<cdouble> zs = z;
  for (auto& c : zs) c += s;
  cdouble dz = 1;
  for (const auto& c : zs) dz *= std::pow(c, -mu);
  rep.reference = d_n_value(n, kk) * gamma_n_value(mu, n, kk) * dz;
  QuadResult direct = detail::laplace_power_integral(n, kk, mu, zs, 0.0, rel_tol, threads);
  rep.notes.push_back("unshifted quadrature at z+s: " + format_complex(direct.value));
  rep.finish();
  return rep;
}

}  // namespace dunkl
