#pragma once

// Adaptive tensor-product Gauss-Kronrod quadrature on the unit cube, and the
// chamber parametrizations that map S_n-invariant integrals over the
// positive orthant, the unit cube or R^n onto it.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <queue>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

using cdouble = std::complex<double>;

/// Integrand on (0,1)^d.
using CubeIntegrand = std::function<cdouble(std::span<const double>)>;

struct QuadOptions {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  int max_subdivisions = 4000;
  int threads = 1;
};

struct QuadResult {
  cdouble value;
  double error_estimate = 0.0;
  int subdivisions = 0;
  long evaluations = 0;
  std::vector<std::string> warnings;
};

namespace detail {

/// Nodes on [-1, 1] with Kronrod weights and the embedded Gauss weights
/// (zero off the Gauss nodes).
struct TensorRule {
  std::vector<double> nodes, wk, wg;
};

template <unsigned K, unsigned G>
TensorRule make_rule() {
  const auto& xk = boost::math::quadrature::gauss_kronrod<double, K>::abscissa();
  const auto& wk = boost::math::quadrature::gauss_kronrod<double, K>::weights();
  const auto& xg = boost::math::quadrature::gauss<double, G>::abscissa();
  const auto& wg = boost::math::quadrature::gauss<double, G>::weights();
  TensorRule r;
  auto gauss_weight = [&](double x) {
    for (std::size_t i = 0; i < xg.size(); ++i)
      if (std::abs(xg[i] - x) < 1e-12) return wg[i];
    return 0.0;
  };
  for (std::size_t i = xk.size(); i-- > 1;) {
    r.nodes.push_back(-xk[i]);
    r.wk.push_back(wk[i]);
    r.wg.push_back(gauss_weight(xk[i]));
  }
  for (std::size_t i = 0; i < xk.size(); ++i) {
    r.nodes.push_back(xk[i]);
    r.wk.push_back(wk[i]);
    r.wg.push_back(gauss_weight(xk[i]));
  }
  return r;
}

inline const TensorRule& rule_for_dimension(int d) {
  static const TensorRule gk15 = make_rule<15, 7>();
  static const TensorRule gk7 = make_rule<7, 3>();
  return d <= 2 ? gk15 : gk7;
}

struct Cell {
  std::vector<double> lo, hi;
  cdouble value;
  double error = 0.0;
  int split_axis = 0;
};

/// Evaluates f on every tensor node of every cell, in parallel when asked;
/// the reduction is sequential so results do not depend on the thread count.
inline void evaluate_cells(std::vector<Cell>& cells, int d, const CubeIntegrand& f, int threads, long& evaluations) {
  const TensorRule& rule = rule_for_dimension(d);
  const std::size_t q = rule.nodes.size();
  std::size_t per_cell = 1;
  for (int a = 0; a < d; ++a) per_cell *= q;
  std::vector<cdouble> values(per_cell * cells.size());
  auto point_of = [&](std::size_t flat, std::vector<double>& u) {
    std::size_t c = flat / per_cell, idx = flat % per_cell;
    for (int a = 0; a < d; ++a) {
      std::size_t j = idx % q;
      idx /= q;
      double mid = 0.5 * (cells[c].lo[static_cast<std::size_t>(a)] + cells[c].hi[static_cast<std::size_t>(a)]);
      double half = 0.5 * (cells[c].hi[static_cast<std::size_t>(a)] - cells[c].lo[static_cast<std::size_t>(a)]);
      u[static_cast<std::size_t>(a)] = mid + half * rule.nodes[j];
    }
  };
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<double> u(static_cast<std::size_t>(d));
    for (std::size_t i = begin; i < end; ++i) {
      point_of(i, u);
      values[i] = f(std::span<const double>(u));
    }
  };
  const std::size_t total = values.size();
  if (threads <= 1 || total < 64) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (total + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (std::size_t b = 0; b < total; b += chunk) pool.emplace_back(work, b, std::min(total, b + chunk));
    for (auto& t : pool) t.join();
  }
  evaluations += static_cast<long>(total);

  for (std::size_t c = 0; c < cells.size(); ++c) {
    double vol = 1;
    for (int a = 0; a < d; ++a) vol *= 0.5 * (cells[c].hi[static_cast<std::size_t>(a)] - cells[c].lo[static_cast<std::size_t>(a)]);
    cdouble k_sum = 0, g_sum = 0;
    std::vector<cdouble> g_axis(static_cast<std::size_t>(d), cdouble(0));
    for (std::size_t i = 0; i < per_cell; ++i) {
      std::size_t idx = i;
      double wk = 1, wg = 1;
      std::vector<double> wk_a(static_cast<std::size_t>(d)), wg_a(static_cast<std::size_t>(d));
      for (int a = 0; a < d; ++a) {
        std::size_t j = idx % q;
        idx /= q;
        wk_a[static_cast<std::size_t>(a)] = rule.wk[j];
        wg_a[static_cast<std::size_t>(a)] = rule.wg[j];
        wk *= rule.wk[j];
        wg *= rule.wg[j];
      }
      const cdouble v = values[c * per_cell + i];
      k_sum += wk * v;
      g_sum += wg * v;
      for (int a = 0; a < d; ++a) {
        if (wg_a[static_cast<std::size_t>(a)] == 0) continue;
        g_axis[static_cast<std::size_t>(a)] += (wk / wk_a[static_cast<std::size_t>(a)]) * wg_a[static_cast<std::size_t>(a)] * v;
      }
    }
    cells[c].value = vol * k_sum;
    cells[c].error = vol * std::abs(k_sum - g_sum);
    if (!std::isfinite(cells[c].error)) cells[c].error = INFINITY;
    double worst = -1;
    for (int a = 0; a < d; ++a) {
      double e = std::abs(k_sum - g_axis[static_cast<std::size_t>(a)]);
      if (e > worst) {
        worst = e;
        cells[c].split_axis = a;
      }
    }
  }
}

}  // namespace detail

/// Adaptive integration over (0,1)^d. The cell with the largest error
/// estimate |K - G| is bisected along the axis where the one-axis Gauss
/// reduction differs most from Kronrod; ties go to the older cell. The final
/// sum runs over cells in creation order.
inline QuadResult integrate_cube(int d, const CubeIntegrand& f, const QuadOptions& opt) {
  if (d < 1) throw DomainError("integration dimension must be positive");
  if (!(opt.rel_tol > 0) && !(opt.abs_tol > 0)) throw DomainError("quadrature needs a positive tolerance");
  std::map<long, detail::Cell> live;
  using Entry = std::pair<double, long>;  // (error, -id)
  std::priority_queue<Entry> heap;
  QuadResult res;
  long next_id = 0;

  std::vector<detail::Cell> batch(1);
  batch[0].lo.assign(static_cast<std::size_t>(d), 0.0);
  batch[0].hi.assign(static_cast<std::size_t>(d), 1.0);
  detail::evaluate_cells(batch, d, f, opt.threads, res.evaluations);
  cdouble total = batch[0].value;
  double err = batch[0].error;
  heap.emplace(batch[0].error, -next_id);
  live.emplace(next_id++, std::move(batch[0]));

  auto converged = [&] { return err <= std::max(opt.rel_tol * std::abs(total), opt.abs_tol); };
  while (!converged()) {
    if (res.subdivisions >= opt.max_subdivisions) {
      cdouble best = 0;
      for (const auto& [id, c] : live) best += c.value;
      throw QuadratureError("quadrature did not converge within " + std::to_string(opt.max_subdivisions) + " subdivisions",
                            best, err);
    }
    long id = -heap.top().second;
    heap.pop();
    detail::Cell parent = std::move(live.at(id));
    live.erase(id);
    const std::size_t ax = static_cast<std::size_t>(parent.split_axis);
    double mid = 0.5 * (parent.lo[ax] + parent.hi[ax]);
    batch.assign(2, detail::Cell{});
    batch[0].lo = batch[1].lo = parent.lo;
    batch[0].hi = batch[1].hi = parent.hi;
    batch[0].hi[ax] = mid;
    batch[1].lo[ax] = mid;
    detail::evaluate_cells(batch, d, f, opt.threads, res.evaluations);
    total += batch[0].value + batch[1].value - parent.value;
    err += batch[0].error + batch[1].error - parent.error;
    for (auto& c : batch) {
      heap.emplace(c.error, -next_id);
      live.emplace(next_id++, std::move(c));
    }
    ++res.subdivisions;
    if (res.subdivisions % 64 == 0) {
      // refresh the running sums to keep drift out of the stopping test
      total = 0;
      err = 0;
      for (const auto& [cid, c] : live) {
        total += c.value;
        err += c.error;
      }
    }
  }
  res.value = 0;
  res.error_estimate = 0;
  for (const auto& [cid, c] : live) {
    res.value += c.value;
    res.error_estimate += c.error;
  }
  return res;
}

enum class Domain {
  positive_orthant,  // x_1 > ... > x_n > 0
  unit_cube,         // 1 > x_1 > ... > x_n > 0
  real_space,        // x_1 > ... > x_n
};

inline std::string to_string(Domain d) {
  switch (d) {
    case Domain::positive_orthant: return "positive_orthant";
    case Domain::unit_cube: return "unit_cube";
    case Domain::real_space: return "real_space";
  }
  return "unknown";
}

/// Integrand in the original coordinates x.
using ChamberIntegrand = std::function<cdouble(std::span<const double> x)>;

struct QuadratureJob {
  int n = 1;
  Domain domain = Domain::positive_orthant;
  ChamberIntegrand integrand;
  QuadOptions options;
};

/// Largest orthant dimension integrated without a cost warning.
inline constexpr int kOrthantDeskDimension = 3;

namespace detail {

/// Chamber point and Jacobian for cube coordinates u; false when the map
/// leaves the representable range.
inline bool chamber_map(Domain dom, std::span<const double> u, std::vector<double>& x, double& jac) {
  const std::size_t n = u.size();
  jac = 1;
  switch (dom) {
    case Domain::positive_orthant: {
      // x_n = s_n, x_i = x_{i+1} + s_i, s = u/(1-u)
      double acc = 0;
      for (std::size_t i = n; i-- > 0;) {
        double one_minus = 1 - u[i];
        acc += u[i] / one_minus;
        x[i] = acc;
        jac /= one_minus * one_minus;
      }
      break;
    }
    case Domain::unit_cube: {
      // x_1 = u_1, x_{i+1} = x_i u_{i+1}
      x[0] = u[0];
      for (std::size_t i = 1; i < n; ++i) {
        x[i] = x[i - 1] * u[i];
        jac *= x[i - 1];
      }
      break;
    }
    case Domain::real_space: {
      // x_n = w/(1-w^2) with w = 2u-1, then increments as on the orthant
      double w = 2 * u[n - 1] - 1;
      double den = 1 - w * w;
      double acc = w / den;
      x[n - 1] = acc;
      jac = 2 * (1 + w * w) / (den * den);
      for (std::size_t i = n - 1; i-- > 0;) {
        double one_minus = 1 - u[i];
        acc += u[i] / one_minus;
        x[i] = acc;
        jac /= one_minus * one_minus;
      }
      break;
    }
  }
  if (!std::isfinite(jac)) return false;
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace detail

/// Integral of an S_n-invariant integrand over the full domain: the ordered
/// chamber is mapped onto (0,1)^n and the result multiplied by n!.
inline QuadResult chamber_integrate(const QuadratureJob& job) {
  if (job.n < 1) throw DomainError("chamber integration requires n >= 1");
  if (!job.integrand) throw DomainError("quadrature job has no integrand");
  double nfact = std::tgamma(job.n + 1.0);
  QuadOptions opt = job.options;
  opt.abs_tol /= nfact;
  CubeIntegrand wrapped = [&job](std::span<const double> u) -> cdouble {
    thread_local std::vector<double> x;
    x.resize(u.size());
    double jac = 0;
    if (!detail::chamber_map(job.domain, u, x, jac)) return 0;
    cdouble v = job.integrand(std::span<const double>(x));
    if (v == cdouble(0)) return 0;
    return v * jac;
  };
  std::vector<std::string> warnings;
  if (job.n > kOrthantDeskDimension && job.domain != Domain::unit_cube)
    warnings.push_back("dimension " + std::to_string(job.n) + " exceeds the desk-scale cap of " +
                       std::to_string(kOrthantDeskDimension) + "; expect long runtimes");
  QuadResult r;
  try {
    r = integrate_cube(job.n, wrapped, opt);
  } catch (const QuadratureError& e) {
    throw QuadratureError(e.what(), e.best_estimate * nfact, e.error_estimate * nfact);
  }
  r.value *= nfact;
  r.error_estimate *= nfact;
  r.warnings = std::move(warnings);
  return r;
}

/// omega_k(x) = prod_{i<j} |x_i - x_j|^{2k}.
inline double weight_omega(std::span<const double> x, double k) {
  double w = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) w *= std::pow(std::abs(x[i] - x[j]), 2 * k);
  return w;
}

/// D(x) = x_1 ... x_n.
inline double coord_product(std::span<const double> x) {
  double p = 1;
  for (double v : x) p *= v;
  return p;
}

}  // namespace dunkl
