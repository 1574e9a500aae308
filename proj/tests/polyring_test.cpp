#include <gtest/gtest.h>

#include <random>

#include "dunkl/polyring.hpp"

using namespace dunkl;

namespace {

MultiPoly random_poly(std::mt19937& rng, std::size_t n, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-9, 9), d(1, 4);
  MultiPoly p(n);
  for (int t = 0; t < terms; ++t) {
    Exponents ex(n);
    for (auto& v : ex) v = e(rng);
    Rational r(c(rng), d(rng));
    r.canonicalize();
    p.add_term(ex, r);
  }
  return p;
}

// Naive product straight from the term lists, summed into a plain map.
std::map<Exponents, Rational> naive_product(const MultiPoly& a, const MultiPoly& b) {
  std::map<Exponents, Rational> out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// (x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j) = sign * sum over the geometric run.
MultiPoly closed_divided_difference(const Exponents& e, const Rational& c, std::size_t i, std::size_t j) {
  MultiPoly out(e.size());
  int a = e[i], b = e[j];
  if (a == b) return out;
  int lo = std::min(a, b), hi = std::max(a, b);
  Rational sign = a > b ? Rational(1) : Rational(-1);
  for (int t = 0; t < hi - lo; ++t) {
    Exponents f = e;
    f[i] = lo + t;
    f[j] = hi - 1 - t;
    out.add_term(f, c * sign);
  }
  return out;
}

}  // namespace

TEST(Poly, Arithmetic) {
  MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  MultiPoly p = (x1 + x2) * (x1 - x2);
  EXPECT_EQ(p, x1.pow(2) - x2.pow(2));
  EXPECT_EQ(poly_arith(PolyOp::sub, p, p), MultiPoly(2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(poly_scalar_mul(x1, Rational(3, 2)).coeff({1, 0}), Rational(3, 2));
  EXPECT_THROW(x1 + MultiPoly::variable(3, 0), DimensionMismatch);
  EXPECT_THROW(MultiPoly::variable(2, 2), IndexOutOfRange);
}

TEST(Poly, ProductMatchesNaive) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 4;
    MultiPoly a = random_poly(rng, n, 3, 5), b = random_poly(rng, n, 3, 5);
    auto naive = naive_product(a, b);
    MultiPoly prod = poly_arith(PolyOp::mul, a, b);
    ASSERT_EQ(prod.size(), naive.size());
    for (const auto& [e, c] : naive) EXPECT_EQ(prod.coeff(e), c);
  }
}

TEST(Poly, Evaluation) {
  MultiPoly p = parse_poly("3/2*x1^2*x2 + -1*x2 + 4", 2);
  std::vector<Rational> pt = {Rational(2), Rational(-1, 3)};
  EXPECT_EQ(p.eval(std::span<const Rational>(pt)), Rational(3, 2) * 4 * Rational(-1, 3) + Rational(1, 3) + 4);
  std::vector<double> pd = {2.0, -1.0 / 3};
  EXPECT_NEAR(p.eval<double>(std::span<const double>(pd)), p.eval(std::span<const Rational>(pt)).get_d(), 1e-14);
}

TEST(Poly, TranspositionIsInvolution) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p = random_poly(rng, 4, 3, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(apply_transposition(apply_transposition(p, i, j), i, j), p);
  }
  EXPECT_THROW(apply_transposition(MultiPoly(3), 2, 1), IndexOutOfRange);
}

TEST(Poly, DividedDifferenceAgainstClosedForm) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + trial % 3;
    MultiPoly p = random_poly(rng, n, 4, 6);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        MultiPoly expected(n);
        for (const auto& [e, c] : p.terms()) expected += closed_divided_difference(e, c, i, j);
        MultiPoly dd = divided_difference(p, i, j);
        EXPECT_EQ(dd, expected);
        // (x_i - x_j) dd + sigma p = p
        MultiPoly diff = MultiPoly::variable(n, i) - MultiPoly::variable(n, j);
        EXPECT_EQ(diff * dd + apply_transposition(p, i, j), p);
        if (!dd.is_zero()) EXPECT_LE(dd.degree(), p.degree() - 1);
      }
    }
  }
}

TEST(Poly, ExactDivisionRemainder) {
  MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  auto [qq, rem] = divide_by_difference(x1.pow(3) + x2, 0, 1);
  EXPECT_EQ(rem, x2.pow(3) + x2);
  EXPECT_EQ((x1 - x2) * qq + rem, x1.pow(3) + x2);
}

TEST(Poly, SerializationRoundTrip) {
  EXPECT_EQ(to_string(MultiPoly(3)), "0");
  MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  EXPECT_EQ(to_string(x1.pow(2) * x2 * Rational(3, 2) - x2), "3/2*x1^2*x2 + -1*x2");
  // graded reverse-lex: x1^2 > x1 x2 > x2^2
  EXPECT_EQ(to_string((x1 + x2).pow(2)), "1*x1^2 + 2*x1*x2 + 1*x2^2");
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    MultiPoly p = random_poly(rng, n, 4, 7);
    EXPECT_EQ(parse_poly(to_string(p), n), p);
  }
  EXPECT_THROW(parse_poly("1*y1", 2), ParseError);
  EXPECT_THROW(parse_poly("1*x3", 2), ParseError);
}

TEST(Poly, RestrictionAndDerivative) {
  MultiPoly p = parse_poly("2*x1*x2 + 5*x1^3 + 1*x3", 3);
  EXPECT_EQ(p.restrict_leading(1), parse_poly("5*x1^3", 1));
  EXPECT_EQ(p.derivative(0), parse_poly("2*x2 + 15*x1^2", 3));
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(coordinate_product(3).degree(), 3);
}
