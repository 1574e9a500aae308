#pragma once

// Type-A Bessel function J_k(x, w) from its 0F0 Jack series
//   J_k(x, w) = sum_lambda C_lambda(x) C_lambda(w) / (|lambda|! C_lambda(1)),  alpha = 1/k,
// with a certified truncation bound, and the exact per-degree check of the
// 1F0 binomial formula.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/jack.hpp"

namespace dunkl {

using cdouble = std::complex<double>;

struct BesselOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_degree = -1;  // -1: the table cap
  // Evaluate at (x - mean(x), w - mean(w)) and restore the exponential
  // factor; keeps the centered series free of large cancelling terms.
  bool centered = true;
};

struct SeriesEval {
  cdouble value;
  int truncation_degree = 0;  // -1 when the early exit on a negligible bound fires
  double tail_bound = 0.0;    // absolute, includes the exponential prefactor
};

namespace detail {

/// log of sum_{m > M} t^m / m!, bounded by the first omitted term over
/// (1 - t/(M+2)); requires M + 2 > t.
inline double log_exp_tail(double t, int M) {
  if (t == 0.0) return -INFINITY;
  double log_first = (M + 1) * std::log(t) - std::lgamma(M + 2.0);
  return log_first - std::log1p(-t / (M + 2.0));
}

inline double sup_norm(std::span<const cdouble> v) {
  double s = 0;
  for (const auto& c : v) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace detail

/// J_k(., w) for a fixed second argument. The per-degree coefficients
///   b_mu = sum_lambda c_{lambda mu} C_lambda(w) / (m! C_lambda(1))
/// are built lazily, so every later evaluation is a dot product against the
/// monomial symmetric functions of x.
class BesselKernel {
 public:
  BesselKernel(std::vector<cdouble> w, double k, BesselOptions opt = {},
               std::shared_ptr<const NumericJackTable<double>> table = nullptr)
      : opt_(opt), n_(static_cast<int>(w.size())) {
    if (n_ < 1) throw DimensionMismatch("Bessel kernel needs at least one variable");
    if (!(k > 0.0)) throw DomainError("Bessel kernel requires k > 0");
    if (!(opt.rel_tol >= 0.0) || !(opt.abs_tol >= 0.0)) throw DomainError("Bessel tolerances must be nonnegative");
    table_ = table ? table : cached_numeric_table(n_, 1.0 / k);
    if (table_->n() != n_) throw DimensionMismatch("Jack table variable count differs from the argument");
    if (std::abs(table_->alpha() * k - 1.0) > 1e-14) throw DomainError("Jack table alpha must equal 1/k");
    cap_ = opt.max_degree < 0 ? table_->degree_cap() : std::min(opt.max_degree, table_->degree_cap());
    w_sum_ = 0;
    for (const auto& c : w) {
      w_sum_ += c;
      w_re_sorted_.push_back(c.real());
    }
    std::sort(w_re_sorted_.begin(), w_re_sorted_.end());
    if (opt.centered)
      for (auto& c : w) c -= w_sum_ / double(n_);
    w_ = std::move(w);
    w_norm_ = detail::sup_norm(w_);
  }

  int n() const { return n_; }
  const BesselOptions& options() const { return opt_; }

  SeriesEval operator()(std::span<const cdouble> x) const { return eval(x, opt_.rel_tol, opt_.abs_tol); }

  SeriesEval eval(std::span<const cdouble> x, double rel_tol, double abs_tol) const {
    if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("Bessel argument has wrong dimension");
    std::vector<cdouble> xc(x.begin(), x.end());
    cdouble log_pref = 0;
    if (opt_.centered) {
      cdouble xs = 0;
      for (const auto& c : xc) xs += c;
      for (auto& c : xc) c -= xs / double(n_);
      log_pref = xs * w_sum_ / double(n_);
    }
    const double t = n_ * detail::sup_norm(xc) * w_norm_;
    const double log_abs_pref = log_pref.real();
    if (abs_tol > 0) {
      // For real x, |J(x, w)| <= exp(max over permutations of <sigma x, Re w>); the max pairs sorted orders.
      double log_bound = log_abs_pref + t;
      if (std::all_of(x.begin(), x.end(), [](const cdouble& c) { return c.imag() == 0.0; })) {
        std::vector<double> xr(x.size());
        std::transform(x.begin(), x.end(), xr.begin(), [](const cdouble& c) { return c.real(); });
        std::sort(xr.begin(), xr.end());
        log_bound = std::min(log_bound, std::inner_product(xr.begin(), xr.end(), w_re_sorted_.begin(), 0.0));
      }
      if (log_bound < std::log(abs_tol)) return {cdouble(0), -1, std::exp(log_bound)};
    }
    // powers[i][e] = xc_i^e
    std::vector<std::vector<cdouble>> powers(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) powers[static_cast<std::size_t>(i)].assign(1, cdouble(1));

    cdouble sum = 0;
    for (int m = 0; m <= cap_; ++m) {
      for (int i = 0; i < n_; ++i) {
        auto& p = powers[static_cast<std::size_t>(i)];
        p.push_back(p.back() * xc[static_cast<std::size_t>(i)]);
      }
      const Coeffs& c = coeffs(m);
      cdouble deg_sum = 0;
      for (std::size_t j = 0; j < c.b.size(); ++j) {
        if (c.b[j] == cdouble(0)) continue;
        cdouble mono = 0;
        for (const auto& e : (*c.arrangements)[j]) {
          cdouble term = 1;
          for (int i = 0; i < n_; ++i) term *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
          mono += term;
        }
        deg_sum += c.b[j] * mono;
      }
      sum += deg_sum;
      if (t == 0.0) return {std::exp(log_pref) * sum, m, 0.0};
      if (m + 2 > t) {
        double tail = std::exp(log_abs_pref + detail::log_exp_tail(t, m));
        cdouble value = std::exp(log_pref) * sum;
        if (tail <= std::max(rel_tol * std::abs(value), abs_tol)) return {value, m, tail};
      }
    }
    double bound = cap_ + 2 > t ? std::exp(log_abs_pref + detail::log_exp_tail(t, cap_)) : INFINITY;
    throw TruncationError("Bessel series did not reach tolerance by degree " + std::to_string(cap_), bound, cap_);
  }

 private:
  struct Coeffs {
    std::vector<cdouble> b;
    const std::vector<std::vector<Exponents>>* arrangements = nullptr;
  };

  const Coeffs& coeffs(int m) const {
    std::lock_guard lock(mu_);
    while (static_cast<int>(coeffs_.size()) <= m) coeffs_.push_back(std::make_unique<const Coeffs>(build(static_cast<int>(coeffs_.size()))));
    return *coeffs_[static_cast<std::size_t>(m)];
  }

  Coeffs build(int m) const {
    const auto& d = table_->degree(m);
    const std::size_t p = d.parts.size();
    // m_nu(w) for every nu of weight m
    std::vector<cdouble> mw(p, cdouble(0));
    for (std::size_t j = 0; j < p; ++j) {
      for (const auto& e : d.arrangements[j]) {
        cdouble term = 1;
        for (int i = 0; i < n_; ++i)
          for (int r = 0; r < e[static_cast<std::size_t>(i)]; ++r) term *= w_[static_cast<std::size_t>(i)];
        mw[j] += term;
      }
    }
    const double inv_fact = std::exp(-std::lgamma(m + 1.0));
    Coeffs c;
    c.b.assign(p, cdouble(0));
    for (std::size_t i = 0; i < p; ++i) {
      cdouble cw = 0;
      for (std::size_t j = i; j < p; ++j) cw += d.c[i][j - i] * mw[j];
      cdouble scale = cw * inv_fact / d.at_ones[i];
      for (std::size_t j = i; j < p; ++j) c.b[j] += d.c[i][j - i] * scale;
    }
    c.arrangements = &d.arrangements;
    return c;
  }

  BesselOptions opt_;
  int n_;
  int cap_ = 0;
  std::shared_ptr<const NumericJackTable<double>> table_;
  std::vector<cdouble> w_;
  std::vector<double> w_re_sorted_;
  cdouble w_sum_;
  double w_norm_ = 0;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<const Coeffs>> coeffs_;
};

/// One-shot evaluation of J_k(x, z).
inline SeriesEval bessel_J(std::span<const cdouble> x, std::span<const cdouble> z, double k, const BesselOptions& opt = {}) {
  if (x.size() != z.size()) throw DimensionMismatch("Bessel arguments differ in dimension");
  BesselKernel kernel(std::vector<cdouble>(z.begin(), z.end()), k, opt);
  return kernel(x);
}

inline SeriesEval bessel_J(const std::vector<double>& x, const std::vector<cdouble>& z, double k, const BesselOptions& opt = {}) {
  std::vector<cdouble> xc(x.begin(), x.end());
  return bessel_J(std::span<const cdouble>(xc), std::span<const cdouble>(z), k, opt);
}

struct BinomialDegree {
  int degree = 0;
  MultiPoly lhs;  // sum_{|lambda| = m, l(lambda) <= max_length} [a]_lambda C_lambda / m!
  MultiPoly rhs;  // degree-m part of prod_i (1 - z_i)^{-a}
  bool equal = false;
  bool dropped_vanish = true;  // every omitted lambda had [a]_lambda = 0
};

struct BinomialReport {
  Rational a;
  int n = 0;
  Rational alpha;
  std::vector<BinomialDegree> degrees;
  bool all_equal() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const BinomialDegree& d) { return d.equal; });
  }
};

/// Exact check, degree by degree, of
///   sum_lambda [a]_lambda^k C_lambda(z) / |lambda|! = prod_i (1 - z_i)^{-a},  k = 1/alpha.
/// With max_length < n only partitions of at most that length enter the left
/// side. With negate the identity is taken at -z, i.e. against prod_i (1 + z_i)^{-a}.
inline BinomialReport binomial_check(const Rational& a, const JackTable& table, int max_degree, int max_length = -1,
                                     bool negate = false) {
  if (max_degree > table.max_degree()) throw DomainError("binomial_check: table too shallow");
  const int n = table.n();
  if (max_length < 0) max_length = n;
  const Rational k = 1 / table.alpha();
  BinomialReport rep;
  rep.a = a;
  rep.n = n;
  rep.alpha = table.alpha();
  // (1 -+ z_i)^{-a} truncated: sum_j (a)_j (+-z_i)^j / j!
  std::vector<Rational> coef(static_cast<std::size_t>(max_degree) + 1);
  {
    Rational r(1);
    for (int j = 0; j <= max_degree; ++j) {
      coef[static_cast<std::size_t>(j)] = r * ((negate && j % 2) ? -1 : 1);
      r = r * (a + j) / (j + 1);
    }
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<MultiPoly> product_by_degree;
  {
    std::vector<MultiPoly> cur(static_cast<std::size_t>(max_degree) + 1, MultiPoly(nn));
    cur[0] = MultiPoly::constant(nn, Rational(1));
    for (std::size_t i = 0; i < nn; ++i) {
      std::vector<MultiPoly> next(static_cast<std::size_t>(max_degree) + 1, MultiPoly(nn));
      for (int d = 0; d <= max_degree; ++d) {
        if (cur[static_cast<std::size_t>(d)].is_zero()) continue;
        for (int j = 0; d + j <= max_degree; ++j) {
          Exponents e(nn, 0);
          e[i] = j;
          next[static_cast<std::size_t>(d + j)] += cur[static_cast<std::size_t>(d)] * MultiPoly::monomial(e, coef[static_cast<std::size_t>(j)]);
        }
      }
      cur = std::move(next);
    }
    product_by_degree = std::move(cur);
  }
  mpz_class fact = 1;
  for (int m = 0; m <= max_degree; ++m) {
    if (m > 0) fact *= m;
    BinomialDegree d;
    d.degree = m;
    d.lhs = MultiPoly(nn);
    for (const auto& lam : table.partitions(m)) {
      Rational poch = gpochhammer(a, lam, k);
      if (lam.length() > max_length) {
        if (poch != 0) d.dropped_vanish = false;
        continue;
      }
      if (poch == 0) continue;
      Rational c = poch / Rational(fact);
      if (negate && m % 2) c = -c;
      d.lhs += table.c_poly(lam) * c;
    }
    d.rhs = product_by_degree[static_cast<std::size_t>(m)];
    d.equal = d.lhs == d.rhs;
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

struct PairCheck {
  cdouble lhs;
  cdouble rhs;
  double diff = 0;
  double tolerance = 0;
  bool pass = false;
};

/// J(x, z + s1) against e^{s sum x} J(x, z), both from the raw series.
/// The centered evaluation would build the identity in, so it is not used here.
inline PairCheck shift_factorization_check(std::span<const cdouble> x, std::span<const cdouble> z, double s, double k,
                                           double tol) {
  BesselOptions opt;
  opt.rel_tol = tol * 1e-3;
  opt.centered = false;
  std::vector<cdouble> zs(z.begin(), z.end());
  for (auto& c : zs) c += s;
  SeriesEval a = bessel_J(x, std::span<const cdouble>(zs), k, opt);
  SeriesEval b = bessel_J(x, z, k, opt);
  cdouble xs = 0;
  for (const auto& c : x) xs += c;
  cdouble e = std::exp(s * xs);
  PairCheck r;
  r.lhs = a.value;
  r.rhs = e * b.value;
  r.diff = std::abs(r.lhs - r.rhs);
  r.tolerance = tol * std::max(std::abs(r.lhs), std::abs(r.rhs)) + a.tail_bound + std::abs(e) * b.tail_bound;
  r.pass = r.diff <= r.tolerance;
  return r;
}

/// |J(-x, z)| <= e^{-s |x|_1} for x >= 0 and Re z_i >= s > 0.
inline PairCheck decay_bound_check(std::span<const double> x, std::span<const cdouble> z, double s, double k, double tol) {
  if (!(s > 0)) throw DomainError("decay bound requires s > 0");
  double l1 = 0;
  for (double v : x) {
    if (v < 0) throw DomainError("decay bound requires x in the closed positive orthant");
    l1 += v;
  }
  for (const auto& c : z)
    if (c.real() < s) throw DomainError("decay bound requires Re z_i >= s");
  std::vector<cdouble> mx;
  for (double v : x) mx.emplace_back(-v);
  BesselOptions opt;
  opt.rel_tol = tol * 1e-2;
  SeriesEval j = bessel_J(std::span<const cdouble>(mx), z, k, opt);
  PairCheck r;
  r.lhs = std::abs(j.value);
  r.rhs = std::exp(-s * l1);
  r.diff = r.lhs.real() - r.rhs.real();
  r.tolerance = tol * r.rhs.real() + j.tail_bound;
  r.pass = r.lhs.real() <= r.rhs.real() * (1 + tol) + j.tail_bound;
  return r;
}

}  // namespace dunkl
