#pragma once

// Scalar layer: exact rationals (GMP), arbitrary-precision floats (MPFR via
// Boost.Multiprecision), the multiplicity parameter and the tagged scalar
// used at API boundaries.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cctype>
#include <complex>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dunkl/errors.hpp"

namespace dunkl {

using Rational = mpq_class;
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;
using BigComplex = std::complex<BigReal>;

inline constexpr unsigned kDefaultDigits = 50;

/// Default significant digits for arbitrary-precision evaluation. The
/// environment variable DUNKL_PRECISION_DIGITS overrides the built-in 50.
inline unsigned default_digits() {
  if (const char* env = std::getenv("DUNKL_PRECISION_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 10 && v <= 10000) return static_cast<unsigned>(v);
  }
  return kDefaultDigits;
}

/// Sets the MPFR default precision for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(BigReal::default_precision()) {
    BigReal::default_precision(digits);
  }
  ~PrecisionScope() { BigReal::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline BigReal to_big(const Rational& q) {
  return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str());
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_int_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline double parse_double(std::string_view s) {
  std::string buf(trim(s));
  if (buf.empty() || buf == "+") return 1.0;
  if (buf == "-") return -1.0;
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) throw ParseError("not a number: '" + buf + "'");
  return v;
}

}  // namespace detail

/// Parses "p/q" or an integer literal. Returns nullopt for anything else
/// (decimals are deliberately not rational inputs).
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  auto s = detail::trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!detail::is_int_literal(num) || !detail::is_int_literal(den)) return std::nullopt;
  std::string n(num), d(den);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  if (!d.empty() && d.front() == '+') d.erase(0, 1);
  mpz_class zn(n), zd(d);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(std::string_view text) {
  auto q = try_parse_rational(text);
  if (!q) throw ParseError("expected an exact rational 'p/q', got '" + std::string(text) + "'");
  return *q;
}

/// Parses a complex literal: "1.5", "1/2", "1+0.5i", "-2i", "0.3-0.1i".
inline std::complex<double> parse_complex(std::string_view text) {
  auto s = detail::trim(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (auto q = try_parse_rational(s)) return {q->get_d(), 0.0};
  if (s.back() != 'i') return {detail::parse_double(s), 0.0};
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, detail::parse_double(s)};
  return {detail::parse_double(s.substr(0, split)), detail::parse_double(s.substr(split))};
}

/// The multiplicity parameter k >= 0, exact or floating.
class Multiplicity {
 public:
  Multiplicity() : exact_(0), value_(0.0) {}
  explicit Multiplicity(Rational k) : exact_(std::move(k)), value_(exact_->get_d()) {
    if (*exact_ < 0) throw DomainError("multiplicity must be nonnegative");
  }
  explicit Multiplicity(double k) : value_(k) {
    if (!(k >= 0)) throw DomainError("multiplicity must be nonnegative");
  }

  static Multiplicity parse(std::string_view text) {
    if (auto q = try_parse_rational(text)) return Multiplicity(*q);
    return Multiplicity(detail::parse_double(text));
  }

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact() const {
    if (!exact_) throw DomainError("exact multiplicity required, got a floating value");
    return *exact_;
  }
  double value() const { return value_; }
  BigReal big() const { return exact_ ? to_big(*exact_) : BigReal(value_); }

  /// alpha = 1/k, exact when k is.
  Rational alpha_exact() const {
    if (exact() == 0) throw DomainError("alpha = 1/k requires k > 0");
    return 1 / exact();
  }
  double alpha() const {
    if (value_ <= 0) throw DomainError("alpha = 1/k requires k > 0");
    return 1.0 / value_;
  }

  std::string to_string() const { return exact_ ? exact_->get_str() : std::to_string(value_); }

 private:
  std::optional<Rational> exact_;
  double value_;
};

/// A scalar at an API boundary: exact rational, or complex float.
class ScalarValue {
 public:
  ScalarValue(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  ScalarValue(BigComplex z) : v_(std::move(z)) {}  // NOLINT(google-explicit-constructor)
  ScalarValue(std::complex<double> z) : v_(BigComplex(BigReal(z.real()), BigReal(z.imag()))) {}  // NOLINT

  static ScalarValue parse(std::string_view text) {
    if (auto q = try_parse_rational(text)) return *q;
    return parse_complex(text);
  }

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact() const {
    if (!is_exact()) throw DomainError("exact scalar required");
    return std::get<Rational>(v_);
  }
  BigComplex big() const {
    if (is_exact()) return BigComplex(to_big(std::get<Rational>(v_)), BigReal(0));
    return std::get<BigComplex>(v_);
  }
  std::complex<double> to_complex() const {
    if (is_exact()) return {std::get<Rational>(v_).get_d(), 0.0};
    const auto& z = std::get<BigComplex>(v_);
    return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
  }
  bool is_real() const { return is_exact() || std::get<BigComplex>(v_).imag() == 0; }

  std::string to_string() const {
    if (is_exact()) return std::get<Rational>(v_).get_str();
    const auto& z = std::get<BigComplex>(v_);
    std::string re = z.real().str(20);
    if (z.imag() == 0) return re;
    std::string im = z.imag().str(20);
    return re + (z.imag() < 0 ? "" : "+") + im + "i";
  }

 private:
  std::variant<Rational, BigComplex> v_;
};

}  // namespace dunkl
