#pragma once

// Multivariate Gamma function, generalized Pochhammer symbols, the Bernstein
// factor and the Mehta/Macdonald normalization constants.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <complex>
#include <mutex>
#include <vector>

#include "dunkl/partitions.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

/// (a)_m = a (a+1) ... (a+m-1).
template <class T>
T rising_factorial(const T& a, int m) {
  T r(1);
  for (int i = 0; i < m; ++i) r *= a + T(i);
  return r;
}

/// [mu]_lambda^k = prod_j (mu - k (j-1))_{lambda_j}.
template <class T>
T gpochhammer(const T& mu, const Partition& lam, const T& k) {
  T r(1);
  for (int j = 0; j < lam.length(); ++j) r *= rising_factorial(T(mu - k * T(j)), lam[static_cast<std::size_t>(j)]);
  return r;
}

/// b_k(a) = prod_{i=1}^n (a + k (i-1)).
template <class T>
T bernstein_factor(const T& a, int n, const T& k) {
  if (n < 1) throw DomainError("bernstein_factor requires n >= 1");
  T r(1);
  for (int i = 0; i < n; ++i) r *= a + k * T(i);
  return r;
}

inline ScalarValue gpochhammer(const ScalarValue& mu, const Partition& lam, const Multiplicity& k) {
  if (mu.is_exact() && k.is_exact()) return gpochhammer(mu.exact(), lam, k.exact());
  BigComplex kk(k.big(), BigReal(0));
  return gpochhammer(mu.big(), lam, kk);
}

namespace detail {

// Even-index Bernoulli numbers B_0, B_2, B_4, ... as exact rationals
// (Akiyama-Tanigawa), cached.
inline const Rational& bernoulli_even(std::size_t j) {
  static std::mutex mu;
  static std::vector<Rational> cache;
  std::lock_guard lock(mu);
  if (cache.size() <= j) {
    std::size_t need = 2 * j + 1;
    std::vector<Rational> a(need + 1);
    std::vector<Rational> b(need + 1);
    for (std::size_t m = 0; m <= need; ++m) {
      a[m] = Rational(1, static_cast<unsigned long>(m + 1));
      for (std::size_t jj = m; jj >= 1; --jj) {
        a[jj - 1] = Rational(static_cast<long>(jj)) * (a[jj - 1] - a[jj]);
        a[jj - 1].canonicalize();
      }
      b[m] = a[0];
    }
    // Akiyama-Tanigawa yields B_1 = +1/2; only even indices are used.
    cache.clear();
    for (std::size_t i = 0; 2 * i <= need; ++i) cache.push_back(b[2 * i]);
  }
  return cache[j];
}

inline BigComplex complex_log_gamma_stirling(BigComplex z, unsigned digits) {
  const BigReal half("0.5");
  const BigReal two_pi = 2 * boost::math::constants::pi<BigReal>();
  BigComplex result = (z - half) * log(z) - z + half * log(two_pi);
  BigComplex zinv = BigReal(1) / z;
  BigComplex zinv2 = zinv * zinv;
  BigComplex power = zinv;
  std::size_t terms = digits / 2 + 10;
  for (std::size_t j = 1; j <= terms; ++j) {
    BigReal coeff = to_big(bernoulli_even(j)) / BigReal(static_cast<long>((2 * j) * (2 * j - 1)));
    result += coeff * power;
    power *= zinv2;
  }
  return result;
}

}  // namespace detail

/// Classical Gamma at arbitrary precision for complex arguments.
/// Poles (nonpositive integers) raise PoleError.
inline BigComplex complex_gamma(const BigComplex& z, unsigned digits = default_digits()) {
  PrecisionScope scope(digits + 10);
  const BigReal eps = pow(BigReal(10), -static_cast<int>(digits));
  if (z.imag() == 0) {
    BigReal x = z.real();
    if (x <= 0 && abs(x - round(x)) < eps) throw PoleError("Gamma has a pole at " + x.str(10));
    return BigComplex(boost::math::tgamma(x), BigReal(0));
  }
  BigComplex w = z;
  BigComplex prod(1);
  const BigReal shift(static_cast<long>(digits + 10));
  while (w.real() < shift) {
    prod *= w;
    w += BigReal(1);
  }
  return exp(detail::complex_log_gamma_stirling(w, digits)) / prod;
}

/// Gamma_n(mu; k) = prod_{j=1}^n Gamma(mu - k (j-1)) with exact pole detection.
inline BigReal gamma_n(const Rational& mu, int n, const Rational& k, unsigned digits = default_digits()) {
  if (n < 1) throw DomainError("gamma_n requires n >= 1");
  PrecisionScope scope(digits + 10);
  BigReal r(1);
  for (int j = 0; j < n; ++j) {
    Rational arg = mu - k * j;
    if (is_integer(arg) && arg <= 0)
      throw PoleError("Gamma_n(" + mu.get_str() + ") has a pole: factor Gamma(" + arg.get_str() + ")");
    r *= boost::math::tgamma(to_big(arg));
  }
  return r;
}

/// Floating flavor; poles detected to within 10^-digits.
inline BigComplex gamma_n(const BigComplex& mu, int n, const BigReal& k, unsigned digits = default_digits()) {
  if (n < 1) throw DomainError("gamma_n requires n >= 1");
  PrecisionScope scope(digits + 10);
  BigComplex r(1);
  for (int j = 0; j < n; ++j) r *= complex_gamma(mu - k * BigReal(j), digits);
  return r;
}

inline BigComplex gamma_n(const ScalarValue& mu, int n, const Multiplicity& k, unsigned digits = default_digits()) {
  if (mu.is_exact() && k.is_exact()) return BigComplex(gamma_n(mu.exact(), n, k.exact(), digits), BigReal(0));
  return gamma_n(mu.big(), n, k.big(), digits);
}

/// Double-precision convenience for quadrature references.
inline std::complex<double> gamma_n_value(std::complex<double> mu, int n, double k) {
  PrecisionScope scope(30);
  BigComplex g = gamma_n(BigComplex(BigReal(mu.real()), BigReal(mu.imag())), n, BigReal(k), 30);
  return {g.real().convert_to<double>(), g.imag().convert_to<double>()};
}

struct NormalizationConstants {
  BigReal d_n;   // prod_{j=1}^n Gamma(1+jk)/Gamma(1+k)
  BigReal c_kn;  // Mehta constant (2 pi)^{n/2} d_n
};

inline NormalizationConstants normalization_constants(int n, const Multiplicity& k, unsigned digits = default_digits()) {
  if (n < 1) throw DomainError("normalization_constants requires n >= 1");
  PrecisionScope scope(digits + 10);
  BigReal kk = k.big();
  BigReal g1k = boost::math::tgamma(BigReal(1) + kk);
  BigReal d(1);
  for (int j = 1; j <= n; ++j) d *= boost::math::tgamma(BigReal(1) + BigReal(j) * kk) / g1k;
  BigReal two_pi = 2 * boost::math::constants::pi<BigReal>();
  BigReal c = pow(two_pi, BigReal(n) / 2) * d;
  return {d, c};
}

inline double d_n_value(int n, double k) {
  return normalization_constants(n, Multiplicity(k), 30).d_n.convert_to<double>();
}

}  // namespace dunkl
