#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded reverse-lexicographic order, largest first: higher total degree
/// first; on ties the monomial with the smaller exponent in the last
/// differing variable is larger.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrevlexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : n_(nvars) {}

  static MultiPoly constant(std::size_t n, const Rational& c) {
    MultiPoly p(n);
    p.add_term(Exponents(n, 0), c);
    return p;
  }
  /// The coordinate x_i (0-based).
  static MultiPoly variable(std::size_t n, std::size_t i) {
    if (i >= n) throw IndexOutOfRange("variable index out of range");
    Exponents e(n, 0);
    e[i] = 1;
    MultiPoly p(n);
    p.add_term(e, Rational(1));
    return p;
  }
  static MultiPoly monomial(Exponents e, const Rational& c = Rational(1)) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != n_) throw DimensionMismatch("monomial length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) {
      it->second.canonicalize();
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator-(MultiPoly p) { return p *= Rational(-1); }
  friend MultiPoly operator*(MultiPoly p, const Rational& s) { return p *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly p) { return p *= s; }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    p.check_same(q);
    MultiPoly r(p.n_);
    Exponents e(p.n_);
    for (const auto& [ea, ca] : p.terms_) {
      for (const auto& [eb, cb] : q.terms_) {
        for (std::size_t i = 0; i < p.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  MultiPoly pow(int a) const {
    if (a < 0) throw DomainError("negative polynomial power");
    MultiPoly r = constant(n_, Rational(1));
    for (int i = 0; i < a; ++i) r = r * *this;
    return r;
  }

  template <class T>
  T eval(std::span<const T> point) const {
    if (point.size() != n_) throw DimensionMismatch("evaluation point has wrong dimension");
    T sum(0);
    for (const auto& [e, c] : terms_) {
      T term = coeff_as<T>(c);
      for (std::size_t i = 0; i < n_; ++i)
        for (int j = 0; j < e[i]; ++j) term *= point[i];
      sum += term;
    }
    return sum;
  }
  Rational eval(std::span<const Rational> point) const { return eval<Rational>(point); }

  /// Partial derivative in x_i.
  MultiPoly derivative(std::size_t i) const {
    if (i >= n_) throw IndexOutOfRange("derivative index out of range");
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      --f[i];
      r.add_term(f, c * e[i]);
    }
    return r;
  }

  /// Substitute x_i = 0 for every i >= r and drop those variables.
  MultiPoly restrict_leading(std::size_t r) const {
    if (r > n_) throw DimensionMismatch("restriction to more variables than present");
    MultiPoly out(r);
    for (const auto& [e, c] : terms_) {
      if (std::any_of(e.begin() + static_cast<std::ptrdiff_t>(r), e.end(), [](int v) { return v != 0; })) continue;
      out.add_term(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(r)), c);
    }
    return out;
  }

 private:
  template <class T>
  static T coeff_as(const Rational& c) {
    if constexpr (std::is_same_v<T, Rational>) {
      return c;
    } else if constexpr (std::is_same_v<T, BigReal> || std::is_same_v<T, BigComplex>) {
      return T(to_big(c));
    } else {
      return T(c.get_d());
    }
  }

  void check_same(const MultiPoly& q) const {
    if (q.n_ != n_) throw DimensionMismatch("polynomials over different variable counts");
  }

  std::size_t n_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };

inline MultiPoly poly_arith(PolyOp op, const MultiPoly& p, const MultiPoly& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  throw InternalError("unknown polynomial operation");
}

inline MultiPoly poly_scalar_mul(const MultiPoly& p, const Rational& s) { return p * s; }

namespace detail {
inline void check_pair(const MultiPoly& p, std::size_t i, std::size_t j) {
  if (i >= j || j >= p.nvars()) throw IndexOutOfRange("variable pair must satisfy i < j < n");
}
}  // namespace detail

/// sigma_ij p: exponents of x_i and x_j swapped in every monomial (0-based, i < j).
inline MultiPoly apply_transposition(const MultiPoly& p, std::size_t i, std::size_t j) {
  detail::check_pair(p, i, j);
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    std::swap(f[i], f[j]);
    r.add_term(f, c);
  }
  return r;
}

/// Exact division of p by (x_i - x_j), i != j, by repeated elimination of the
/// term of highest x_i-degree. Returns {quotient, remainder}; the remainder
/// is free of x_i.
inline std::pair<MultiPoly, MultiPoly> divide_by_difference(const MultiPoly& p, std::size_t i, std::size_t j) {
  if (i == j || i >= p.nvars() || j >= p.nvars()) throw IndexOutOfRange("bad variable pair");
  MultiPoly quotient(p.nvars());
  // Bucket by x_i-degree so elimination always picks the current maximum.
  std::map<int, MultiPoly, std::greater<>> work;
  for (const auto& [e, c] : p.terms()) work.try_emplace(e[i], p.nvars()).first->second.add_term(e, c);
  MultiPoly remainder(p.nvars());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    int a = node.key();
    MultiPoly& bucket = node.mapped();
    if (a == 0) {
      remainder += bucket;
      continue;
    }
    for (const auto& [e, c] : bucket.terms()) {
      // c x_i^a r = c x_i^{a-1} r (x_i - x_j) + c x_i^{a-1} x_j r
      Exponents q = e;
      --q[i];
      quotient.add_term(q, c);
      Exponents carry = q;
      ++carry[j];
      work.try_emplace(a - 1, p.nvars()).first->second.add_term(carry, c);
    }
  }
  return {quotient, remainder};
}

/// (p - sigma_ij p) / (x_i - x_j) for 0-based i < j, computed by exact division.
inline MultiPoly divided_difference(const MultiPoly& p, std::size_t i, std::size_t j) {
  detail::check_pair(p, i, j);
  auto [q, rem] = divide_by_difference(p - apply_transposition(p, i, j), i, j);
  if (!rem.is_zero()) throw InternalError("divided difference left a nonzero remainder");
  return q;
}

/// Text form: terms "c*x1^a*x2" (1-based variable names) joined by " + ",
/// graded reverse-lexicographic order, rationals as p/q. Zero is "0".
inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

/// Inverse of to_string for an n-variable ring.
inline MultiPoly parse_poly(std::string_view text, std::size_t n) {
  MultiPoly p(n);
  std::string s(detail::trim(text));
  if (s == "0") return p;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = std::string(detail::trim(std::string_view(s).substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
    if (term.empty()) throw ParseError("empty polynomial term");
    std::vector<std::string> factors;
    std::stringstream ss(term);
    std::string f;
    while (std::getline(ss, f, '*')) factors.push_back(f);
    Rational c = parse_rational(factors.at(0));
    Exponents e(n, 0);
    for (std::size_t k = 1; k < factors.size(); ++k) {
      const std::string& v = factors[k];
      if (v.size() < 2 || v[0] != 'x') throw ParseError("bad variable factor '" + v + "'");
      auto caret = v.find('^');
      std::size_t idx = std::stoul(v.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      int ex = caret == std::string::npos ? 1 : std::stoi(v.substr(caret + 1));
      if (idx < 1 || idx > n) throw ParseError("variable index out of range in '" + v + "'");
      e[idx - 1] += ex;
    }
    p.add_term(e, c);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return p;
}

/// prod_i x_i.
inline MultiPoly coordinate_product(std::size_t n) {
  return MultiPoly::monomial(Exponents(n, 1));
}

/// x_1 + ... + x_n.
inline MultiPoly coordinate_sum(std::size_t n) {
  MultiPoly p(n);
  for (std::size_t i = 0; i < n; ++i) p += MultiPoly::variable(n, i);
  return p;
}

}  // namespace dunkl
