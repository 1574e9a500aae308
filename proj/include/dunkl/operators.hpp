#pragma once

// Type-A Dunkl operators acting exactly on polynomials.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dunkl/gamma.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/polyring.hpp"

namespace dunkl {

struct DunklContext {
  DunklContext(std::size_t n, Rational k) : n(n), k(std::move(k)) {
    if (n < 1) throw DomainError("DunklContext requires n >= 1");
    if (this->k < 0) throw DomainError("DunklContext requires k >= 0");
  }
  std::size_t n;
  Rational k;
};

/// T_i(k) p = d_i p + k sum_{j != i} (p - sigma_ij p) / (x_i - x_j), i 0-based.
inline MultiPoly dunkl_apply(const DunklContext& ctx, std::size_t i, const MultiPoly& p) {
  if (p.nvars() != ctx.n) throw DimensionMismatch("polynomial variable count differs from the Dunkl context");
  if (i >= ctx.n) throw IndexOutOfRange("Dunkl operator index out of range");
  MultiPoly r = p.derivative(i);
  if (ctx.k == 0) return r;
  MultiPoly diffs(ctx.n);
  for (std::size_t j = 0; j < ctx.n; ++j) {
    if (j == i) continue;
    if (i < j)
      diffs += divided_difference(p, i, j);
    else
      diffs -= divided_difference(p, j, i);
  }
  return r + diffs * ctx.k;
}

/// q(T_1, ..., T_n) p. Each monomial x^e of q acts as T_1^{e_1} first, then
/// T_2^{e_2}, and so on; intermediate images are shared between monomials.
inline MultiPoly operator_substitute(const DunklContext& ctx, const MultiPoly& q, const MultiPoly& p) {
  if (q.nvars() != ctx.n || p.nvars() != ctx.n) throw DimensionMismatch("operator substitution over mismatched variable counts");
  std::map<Exponents, MultiPoly> memo;
  memo.emplace(Exponents(ctx.n, 0), p);
  auto image = [&](auto&& self, const Exponents& e) -> const MultiPoly& {
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    std::size_t last = ctx.n;
    while (last-- > 0)
      if (e[last] > 0) break;
    Exponents prev = e;
    --prev[last];
    MultiPoly img = dunkl_apply(ctx, last, self(self, prev));
    return memo.emplace(e, std::move(img)).first->second;
  };
  MultiPoly out(ctx.n);
  for (const auto& [e, c] : q.terms()) out += image(image, e) * c;
  return out;
}

struct BernsteinReport {
  MultiPoly lhs;
  MultiPoly rhs;
  Rational factor;
  bool equal = false;
};

/// D(T(k)) D(x)^a against b_k(a) D(x)^{a-1}, with D(x) = x_1 ... x_n.
inline BernsteinReport bernstein_check(const DunklContext& ctx, int a) {
  if (a < 1) throw DomainError("bernstein_check requires a >= 1");
  MultiPoly d = coordinate_product(ctx.n);
  BernsteinReport rep;
  rep.lhs = operator_substitute(ctx, d, d.pow(a));
  rep.factor = bernstein_factor(Rational(a), static_cast<int>(ctx.n), ctx.k);
  rep.rhs = d.pow(a - 1) * rep.factor;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

/// T_i(D^{a-1} x_i ... x_n) = (a + k i) D^{a-1} x_{i+1} ... x_n for 0-based i.
inline bool induction_step_check(const DunklContext& ctx, int a, std::size_t i) {
  if (a < 1) throw DomainError("induction_step_check requires a >= 1");
  if (i >= ctx.n) throw IndexOutOfRange("induction step index out of range");
  MultiPoly base = coordinate_product(ctx.n).pow(a - 1);
  Exponents tail_i(ctx.n, 0), tail_next(ctx.n, 0);
  for (std::size_t j = i; j < ctx.n; ++j) tail_i[j] = 1;
  for (std::size_t j = i + 1; j < ctx.n; ++j) tail_next[j] = 1;
  MultiPoly lhs = dunkl_apply(ctx, i, base * MultiPoly::monomial(tail_i));
  MultiPoly rhs = base * MultiPoly::monomial(tail_next) * Rational(Rational(a) + ctx.k * static_cast<long>(i));
  return lhs == rhs;
}

struct EvalPairingSample {
  Rational mu;
  Rational lhs;  // sum_nu [mu]_nu g_{lambda nu} / |nu|!
  Rational rhs;  // [mu]_lambda
  bool equal = false;
};

struct EvalPairingReport {
  Partition lambda;
  std::vector<std::pair<Partition, Rational>> g;  // g_{lambda nu}
  std::vector<EvalPairingSample> samples;
  bool all_equal() const {
    for (const auto& s : samples)
      if (!s.equal) return false;
    return true;
  }
};

/// Degree-|lambda| check of the evaluation formula
///   (C_lambda / C_lambda(1))(T(k)) D(1 - x)^{-mu} at x = 0 equals [mu]_lambda^k,
/// with D(1 - x)^{-mu} expanded as sum_nu [mu]_nu C_nu(x) / |nu|!.
inline EvalPairingReport eval_pairing_check(const JackTable& table, const Rational& k, const Partition& lam,
                                            const std::vector<Rational>& mu_samples) {
  if (k <= 0 || table.alpha() != 1 / k) throw DomainError("eval_pairing_check: table alpha must equal 1/k");
  if (!table.contains(lam)) throw DomainError("eval_pairing_check: table too shallow for " + lam.to_string());
  const int n = table.n();
  DunklContext ctx(static_cast<std::size_t>(n), k);
  MultiPoly op = table.c_poly(lam) * Rational(1 / table.at_ones(lam));
  EvalPairingReport rep;
  rep.lambda = lam;
  const int m = lam.weight();
  for (const auto& nu : table.partitions(m)) {
    MultiPoly img = operator_substitute(ctx, op, table.c_poly(nu));
    if (img.degree() > 0) throw InternalError("operator image of a same-degree polynomial is not constant");
    rep.g.emplace_back(nu, img.coeff(Exponents(static_cast<std::size_t>(n), 0)));
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
  for (const auto& mu : mu_samples) {
    EvalPairingSample s;
    s.mu = mu;
    for (const auto& [nu, g] : rep.g) s.lhs += gpochhammer(mu, nu, k) * g;
    s.lhs /= Rational(fact);
    s.rhs = gpochhammer(mu, lam, k);
    s.equal = s.lhs == s.rhs;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace dunkl
