#pragma once

// Jack polynomials in monomial-symmetric coordinates.
//
// The monic P-basis is the dominance-triangular eigenbasis of
//   D = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i
// acting on symmetric polynomials. In the m-basis,
//   D m_mu = e_mu m_mu + sum_{nu < mu} d_{nu mu} m_nu,
//   e_mu   = alpha * sum_i mu_i(mu_i - 1)/2 + sum_i (n - i) mu_i,
// and d_{nu mu} collects, over position pairs i < j of nu, the weights p - q
// of every "raise" (nu_i, nu_j) -> (p, q) with p > nu_i, p + q = nu_i + nu_j,
// that sorts to mu. All off-diagonal weights and all eigenvalue gaps are
// positive, so the recurrence is sign-stable in floating point as well.
//
// The C-normalization (sum over |lambda| = m of C_lambda = (x_1+...+x_n)^m)
// is obtained by a triangular solve in the exact table and by the closed
// hook-length scale in the floating table; the two are cross-checked in the
// tests.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/partitions.hpp"
#include "dunkl/polyring.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

namespace detail {

struct DegreeLayout {
  int n = 0;
  int m = 0;
  std::vector<Partition> parts;  // reverse-lexicographic
  std::unordered_map<Partition, int, PartitionHash> index;
  // raises[nu] = (mu, weight): contributions of D m_mu to the m_nu coefficient.
  std::vector<std::vector<std::pair<int, long>>> raises;
  std::vector<long> quad;  // sum_i part_i (part_i - 1) / 2
  std::vector<long> lin;   // sum_i (n - i) part_i, i 1-based
};

inline DegreeLayout make_layout(int n, int m) {
  DegreeLayout L;
  L.n = n;
  L.m = m;
  L.parts = enumerate_partitions(m, n);
  for (std::size_t i = 0; i < L.parts.size(); ++i) L.index.emplace(L.parts[i], static_cast<int>(i));
  L.raises.resize(L.parts.size());
  L.quad.resize(L.parts.size());
  L.lin.resize(L.parts.size());
  for (std::size_t v = 0; v < L.parts.size(); ++v) {
    std::vector<int> nu = L.parts[v].padded(n);
    long q = 0, l = 0;
    for (int i = 0; i < n; ++i) {
      q += static_cast<long>(nu[static_cast<std::size_t>(i)]) * (nu[static_cast<std::size_t>(i)] - 1) / 2;
      l += static_cast<long>(n - 1 - i) * nu[static_cast<std::size_t>(i)];
    }
    L.quad[v] = q;
    L.lin[v] = l;
    std::map<int, long> acc;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int a = nu[static_cast<std::size_t>(i)], b = nu[static_cast<std::size_t>(j)];
        int s = a + b;
        for (int p = a + 1; p <= s; ++p) {
          int qq = s - p;
          std::vector<int> mu = nu;
          mu[static_cast<std::size_t>(i)] = p;
          mu[static_cast<std::size_t>(j)] = qq;
          std::sort(mu.begin(), mu.end(), std::greater<>());
          acc[L.index.at(Partition(mu))] += p - qq;
        }
      }
    }
    L.raises[v].assign(acc.begin(), acc.end());
  }
  return L;
}

/// u[i][j - i] = coefficient of m_{parts[j]} in P_{parts[i]}, j >= i.
template <class F>
std::vector<std::vector<F>> p_basis(const DegreeLayout& L, const F& alpha) {
  const std::size_t p = L.parts.size();
  std::vector<std::vector<F>> u(p);
  for (std::size_t i = 0; i < p; ++i) {
    u[i].assign(p - i, F(0));
    u[i][0] = F(1);
    F e_top = alpha * F(L.quad[i]) + F(L.lin[i]);
    for (std::size_t j = i + 1; j < p; ++j) {
      if (!dominates(L.parts[i], L.parts[j])) continue;
      F sum(0);
      for (const auto& [mu, w] : L.raises[j]) {
        if (static_cast<std::size_t>(mu) < i) continue;
        const F& c = u[i][static_cast<std::size_t>(mu) - i];
        if (c != F(0)) sum += F(w) * c;
      }
      F gap = e_top - (alpha * F(L.quad[j]) + F(L.lin[j]));
      if (!(gap > F(0))) throw InternalError("Jack recurrence: nonpositive eigenvalue gap");
      u[i][j - i] = sum / gap;
    }
  }
  return u;
}

/// Number of monomials in m_nu(x_1..x_n): distinct arrangements of nu padded to n.
inline long arrangement_count(const Partition& nu, int n) {
  if (nu.length() > n) return 0;
  std::vector<int> v = nu.padded(n);
  // n! / prod(multiplicity!)
  long result = 1;
  int pos = 0;
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  // incremental multinomial to stay in range for small n
  for (const auto& [val, cnt] : mult) {
    for (int c = 1; c <= cnt; ++c) {
      ++pos;
      result = result * pos / c;
    }
  }
  return result;
}

inline std::vector<Exponents> distinct_arrangements(const Partition& nu, int n) {
  std::vector<int> v = nu.padded(n);
  std::sort(v.begin(), v.end());
  std::vector<Exponents> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Rational multinomial(const Partition& nu) {
  mpz_class num, den = 1, f;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(nu.weight()));
  for (int part : nu.parts()) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
    den *= f;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// alpha^m m! / prod_s (alpha (arm(s) + 1) + leg(s)).
template <class F>
F hook_scale(const Partition& lam, const F& alpha) {
  Partition conj = lam.conjugate();
  F num(1), den(1);
  int m = lam.weight();
  for (int i = 1; i <= m; ++i) num *= alpha * F(i);
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam[static_cast<std::size_t>(i)]; ++j) {
      int arm = lam[static_cast<std::size_t>(i)] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      den *= alpha * F(arm + 1) + F(leg);
    }
  }
  return num / den;
}

}  // namespace detail

/// m_nu(x_1, ..., x_n) as a polynomial.
inline MultiPoly monomial_symmetric(const Partition& nu, int n) {
  MultiPoly p(static_cast<std::size_t>(n));
  if (nu.length() > n) return p;
  for (const auto& e : detail::distinct_arrangements(nu, n)) p.add_term(e, Rational(1));
  return p;
}

/// Exact Jack polynomials for one (n, alpha), all degrees 0..max_degree.
class JackTable {
 public:
  JackTable(int n, Rational alpha, int max_degree) : n_(n), alpha_(std::move(alpha)), max_degree_(max_degree) {
    if (n < 1) throw DomainError("JackTable requires n >= 1");
    if (alpha_ <= 0) throw DomainError("JackTable requires alpha > 0");
    if (max_degree < 0) throw DomainError("JackTable requires max_degree >= 0");
    for (int m = 0; m <= max_degree; ++m) degrees_.push_back(build_degree(m));
  }

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }
  int max_degree() const { return max_degree_; }

  const std::vector<Partition>& partitions(int m) const { return degree(m).layout.parts; }

  bool contains(const Partition& lam) const {
    return lam.weight() <= max_degree_ && lam.length() <= n_;
  }

  /// Coefficient of m_nu in P_lambda.
  Rational p_coeff(const Partition& lam, const Partition& nu) const { return coeff(lam, nu, false); }
  /// Coefficient of m_nu in C_lambda.
  Rational c_coeff(const Partition& lam, const Partition& nu) const { return coeff(lam, nu, true); }

  /// C_lambda = scale(lambda) * P_lambda.
  const Rational& scale(const Partition& lam) const {
    const auto& d = degree_of(lam);
    return d.scale[static_cast<std::size_t>(d.layout.index.at(lam))];
  }

  /// Nonzero m-basis terms of C_lambda (or P_lambda), leading term first.
  std::vector<std::pair<Partition, Rational>> expansion(const Partition& lam, bool c_normalized = true) const {
    const auto& d = degree_of(lam);
    std::size_t i = static_cast<std::size_t>(d.layout.index.at(lam));
    std::vector<std::pair<Partition, Rational>> out;
    for (std::size_t j = i; j < d.layout.parts.size(); ++j) {
      const Rational& u = d.u[i][j - i];
      if (u == 0) continue;
      out.emplace_back(d.layout.parts[j], c_normalized ? Rational(u * d.scale[i]) : u);
    }
    return out;
  }

  MultiPoly c_poly(const Partition& lam) const { return to_poly(lam, true); }
  MultiPoly p_poly(const Partition& lam) const { return to_poly(lam, false); }

  /// C_lambda(1, ..., 1).
  const Rational& at_ones(const Partition& lam) const {
    const auto& d = degree_of(lam);
    return d.at_ones[static_cast<std::size_t>(d.layout.index.at(lam))];
  }

  /// C_lambda(1_r, 0_{n-r}).
  Rational at_ones(const Partition& lam, int r) const {
    if (r < 0 || r > n_) throw DomainError("at_ones: r must lie in [0, n]");
    Rational s(0);
    for (const auto& [nu, c] : expansion(lam)) s += c * detail::arrangement_count(nu, r);
    return s;
  }

  /// "m[2] + 2/3 m[1,1]"
  std::string m_basis_string(const Partition& lam, bool c_normalized = true) const {
    std::string out;
    for (const auto& [nu, c] : expansion(lam, c_normalized)) {
      if (!out.empty()) out += " + ";
      if (c != 1) out += c.get_str() + " ";
      std::string parts = nu.to_string();
      out += "m[" + parts.substr(1, parts.size() - 2) + "]";
    }
    return out.empty() ? "0" : out;
  }

 private:
  struct Degree {
    detail::DegreeLayout layout;
    std::vector<std::vector<Rational>> u;
    std::vector<Rational> scale;
    std::vector<Rational> at_ones;
  };

  Degree build_degree(int m) const {
    Degree d;
    d.layout = detail::make_layout(n_, m);
    d.u = detail::p_basis<Rational>(d.layout, alpha_);
    const std::size_t p = d.layout.parts.size();
    // (x_1 + ... + x_n)^m = sum_lambda b_lambda P_lambda, solved top-down.
    d.scale.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
      Rational rhs = detail::multinomial(d.layout.parts[j]);
      for (std::size_t i = 0; i < j; ++i) rhs -= d.scale[i] * d.u[i][j - i];
      if (rhs <= 0) throw InternalError("Jack C-normalization produced a nonpositive scale");
      d.scale[j] = rhs;
    }
    d.at_ones.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
      Rational s(0);
      for (std::size_t j = i; j < p; ++j) s += d.u[i][j - i] * detail::arrangement_count(d.layout.parts[j], n_);
      d.at_ones[i] = s * d.scale[i];
    }
    return d;
  }

  const Degree& degree(int m) const {
    if (m < 0 || m > max_degree_) throw DomainError("degree " + std::to_string(m) + " outside the Jack table");
    return degrees_[static_cast<std::size_t>(m)];
  }
  const Degree& degree_of(const Partition& lam) const {
    if (!contains(lam)) throw DomainError("partition " + lam.to_string() + " outside the Jack table");
    return degree(lam.weight());
  }

  Rational coeff(const Partition& lam, const Partition& nu, bool c_normalized) const {
    const auto& d = degree_of(lam);
    if (nu.weight() != lam.weight() || nu.length() > n_) return Rational(0);
    std::size_t i = static_cast<std::size_t>(d.layout.index.at(lam));
    std::size_t j = static_cast<std::size_t>(d.layout.index.at(nu));
    if (j < i) return Rational(0);
    return c_normalized ? Rational(d.u[i][j - i] * d.scale[i]) : d.u[i][j - i];
  }

  MultiPoly to_poly(const Partition& lam, bool c_normalized) const {
    MultiPoly p(static_cast<std::size_t>(n_));
    for (const auto& [nu, c] : expansion(lam, c_normalized)) p += monomial_symmetric(nu, n_) * c;
    return p;
  }

  int n_;
  Rational alpha_;
  int max_degree_;
  std::vector<Degree> degrees_;
};

/// Floating-point Jack table (C-normalized), deepened lazily up to a cap.
template <class Real = double>
class NumericJackTable {
 public:
  struct Degree {
    std::vector<Partition> parts;
    std::vector<std::vector<Real>> c;  // c[i][j - i]: coefficient of m_{parts[j]} in C_{parts[i]}
    std::vector<Real> at_ones;
    std::vector<std::vector<Exponents>> arrangements;  // monomials of m_{parts[j]}
  };

  NumericJackTable(int n, Real alpha, int degree_cap) : n_(n), alpha_(alpha), cap_(degree_cap) {
    if (n < 1) throw DomainError("NumericJackTable requires n >= 1");
    if (!(alpha > Real(0))) throw DomainError("NumericJackTable requires alpha > 0");
  }

  int n() const { return n_; }
  const Real& alpha() const { return alpha_; }
  int degree_cap() const { return cap_; }

  int built_degree() const {
    std::lock_guard lock(mu_);
    return static_cast<int>(degrees_.size()) - 1;
  }

  /// Completed data for degree m; builds missing degrees first.
  const Degree& degree(int m) const {
    if (m < 0 || m > cap_) throw DomainError("degree " + std::to_string(m) + " beyond the numeric Jack table cap");
    std::lock_guard lock(mu_);
    while (static_cast<int>(degrees_.size()) <= m) degrees_.push_back(std::make_unique<const Degree>(build(static_cast<int>(degrees_.size()))));
    return *degrees_[static_cast<std::size_t>(m)];
  }

 private:
  Degree build(int m) const {
    Degree d;
    detail::DegreeLayout L = detail::make_layout(n_, m);
    auto u = detail::p_basis<Real>(L, alpha_);
    const std::size_t p = L.parts.size();
    d.c.resize(p);
    d.at_ones.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
      Real b = detail::hook_scale(L.parts[i], alpha_);
      d.c[i].resize(p - i);
      Real s(0);
      for (std::size_t j = i; j < p; ++j) {
        d.c[i][j - i] = b * u[i][j - i];
        s += d.c[i][j - i] * Real(detail::arrangement_count(L.parts[j], n_));
      }
      d.at_ones[i] = s;
    }
    d.arrangements.reserve(p);
    for (const auto& nu : L.parts) d.arrangements.push_back(detail::distinct_arrangements(nu, n_));
    d.parts = std::move(L.parts);
    return d;
  }

  int n_;
  Real alpha_;
  int cap_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<const Degree>> degrees_;
};

/// Default degree caps for the floating tables, by variable count.
inline int default_numeric_degree_cap(int n) {
  if (n <= 2) return 120;
  if (n == 3) return 80;
  if (n == 4) return 40;
  return 24;
}

/// Process-wide caches; tables are immutable once returned.
inline std::shared_ptr<const JackTable> cached_jack_table(int n, const Rational& alpha, int max_degree) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::string, int>, std::shared_ptr<const JackTable>> cache;
  auto key = std::make_tuple(n, alpha.get_str(), max_degree);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const JackTable>(n, alpha, max_degree);
  std::lock_guard lock(mu);
  return cache.try_emplace(key, table).first->second;
}

inline std::shared_ptr<const NumericJackTable<double>> cached_numeric_table(int n, double alpha, int cap = -1) {
  static std::mutex mu;
  static std::map<std::tuple<int, double, int>, std::shared_ptr<const NumericJackTable<double>>> cache;
  if (cap < 0) cap = default_numeric_degree_cap(n);
  auto key = std::make_tuple(n, alpha, cap);
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_shared<const NumericJackTable<double>>(n, alpha, cap)).first;
  return it->second;
}

/// C_lambda(1_r, 0, ..., 0) from the table.
inline Rational jack_at_ones(const Partition& lam, int r, const JackTable& table) { return table.at_ones(lam, r); }

/// Compares C_lambda in n variables with x_{r+1} = ... = x_n = 0 against C_lambda
/// in r variables (or against 0 when l(lambda) > r). Exact.
inline bool jack_stability_check(const Partition& lam, const JackTable& table_n, const JackTable& table_r) {
  if (table_n.alpha() != table_r.alpha()) throw DomainError("stability check: tables use different alpha");
  if (table_r.n() >= table_n.n()) throw DomainError("stability check: requires r < n");
  if (!table_n.contains(lam)) throw DomainError("stability check: partition outside the n-variable table");
  MultiPoly restricted = table_n.c_poly(lam).restrict_leading(static_cast<std::size_t>(table_r.n()));
  if (lam.length() > table_r.n()) return restricted.is_zero();
  if (!table_r.contains(lam)) throw DomainError("stability check: partition outside the r-variable table");
  return restricted == table_r.c_poly(lam);
}

}  // namespace dunkl
