#include <gtest/gtest.h>

#include <numbers>

#include "dunkl/integrals.hpp"

using namespace dunkl;

namespace {

Multiplicity kq(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return Multiplicity(r);
}

}  // namespace

TEST(Integrals, MehtaTwoVariables) {
  auto rep = mehta_check(2, kq(1), 1e-6);
  EXPECT_NEAR(rep.reference.real(), 4 * std::numbers::pi, 1e-12);
  EXPECT_TRUE(rep.pass) << rep.rel_err;
  auto half = mehta_check(2, kq(1, 2), 1e-6);
  EXPECT_TRUE(half.pass) << half.rel_err;
}

TEST(Integrals, MehtaOneVariableIsGaussian) {
  auto rep = mehta_check(1, kq(3), 1e-8);
  EXPECT_NEAR(rep.reference.real(), std::sqrt(2 * std::numbers::pi), 1e-12);
  EXPECT_TRUE(rep.pass);
}

TEST(Integrals, Macdonald) {
  for (const Partition& lam : {Partition{}, Partition({1}), Partition({2}), Partition({1, 1})}) {
    auto rep = macdonald_check(2, kq(1, 2), 2.0, lam, 1e-4);
    EXPECT_TRUE(rep.pass) << lam << " rel=" << rep.rel_err;
  }
  // empty partition at n = 1 is Gamma(mu)
  auto g = macdonald_check(1, kq(1), 3.5, Partition{}, 1e-8);
  EXPECT_NEAR(g.reference.real(), std::tgamma(3.5), 1e-12);
  EXPECT_TRUE(g.pass);
  EXPECT_THROW(macdonald_check(2, kq(1, 2), 0.4, Partition{}, 1e-4), DomainError);
}

TEST(Integrals, Kadell) {
  auto rep = kadell_check(2, kq(1, 2), 2, 2, Partition({1}), 1e-4);
  EXPECT_TRUE(rep.pass) << rep.rel_err;
  // n = 1 is the beta integral B(3, 2) = 1/12
  auto b = kadell_check(1, kq(1), 3, 2, Partition{}, 1e-10);
  EXPECT_NEAR(b.reference.real(), 1.0 / 12, 1e-14);
  EXPECT_TRUE(b.pass);
}

TEST(Integrals, LaplaceOfPower) {
  for (double mu : {1.7, 2.5}) {
    for (const std::vector<cdouble>& z : {std::vector<cdouble>{1, 2}, std::vector<cdouble>{{1, 0.5}, 2}}) {
      auto rep = laplace_power_check(2, kq(3, 4), mu, z, 1e-4);
      EXPECT_TRUE(rep.pass) << "mu=" << mu << " rel=" << rep.rel_err;
    }
  }
  EXPECT_THROW(laplace_power_check(2, kq(3, 4), 0.5, {1, 2}, 1e-4), DomainError);
  EXPECT_THROW(laplace_power_check(2, kq(3, 4), 2.0, {-1, 2}, 1e-4), DomainError);
}

TEST(Integrals, LaplaceShift) {
  auto rep = laplace_shift_check(2, kq(1, 2), 2.0, 0.5, {1, 1.5}, 1e-4);
  EXPECT_TRUE(rep.pass) << rep.rel_err;
  // Reference is the closed form d_n Gamma_n(mu) D(z+s)^{-mu}.
  double expect = d_n_value(2, 0.5) * gamma_n_value(cdouble(2.0), 2, 0.5).real() * std::pow(1.5 * 2.0, -2.0);
  EXPECT_NEAR(rep.reference.real(), expect, 1e-12 * expect);
  ASSERT_FALSE(rep.notes.empty());
}
