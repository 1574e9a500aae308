#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dunkl/integrals.hpp"

using namespace dunkl;

TEST(Quadrature, PolynomialOnUnitInterval) {
  QuadOptions opt;
  opt.rel_tol = 1e-13;
  auto r = integrate_cube(1, [](std::span<const double> u) { return cdouble(std::pow(u[0], 22)); }, opt);
  EXPECT_NEAR(r.value.real(), 1.0 / 23, 1e-15);
}

TEST(Quadrature, ProductOnCube) {
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  for (int d = 1; d <= 3; ++d) {
    auto r = integrate_cube(d, [](std::span<const double> u) {
      double p = 1;
      for (double v : u) p *= std::cos(v);
      return cdouble(p);
    }, opt);
    EXPECT_NEAR(r.value.real(), std::pow(std::sin(1.0), d), 1e-9) << d;
  }
}

TEST(Quadrature, ChamberDomains) {
  QuadratureJob job;
  job.n = 1;
  job.options.rel_tol = 1e-10;
  job.integrand = [](std::span<const double> x) { return cdouble(std::exp(-x[0])); };
  EXPECT_NEAR(chamber_integrate(job).value.real(), 1.0, 1e-9);

  // int_{R_+^2} e^{-x1-x2} = 1, over the half chamber times 2
  job.n = 2;
  job.integrand = [](std::span<const double> x) { return cdouble(std::exp(-x[0] - x[1])); };
  EXPECT_NEAR(chamber_integrate(job).value.real(), 1.0, 1e-9);

  job.domain = Domain::unit_cube;
  job.integrand = [](std::span<const double> x) { return cdouble(x[0] * x[1]); };
  EXPECT_NEAR(chamber_integrate(job).value.real(), 0.25, 1e-12);

  job.domain = Domain::real_space;
  job.integrand = [](std::span<const double> x) { return cdouble(std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2)); };
  EXPECT_NEAR(chamber_integrate(job).value.real(), 2 * std::numbers::pi, 1e-8);
}

TEST(Quadrature, WeightExamples) {
  std::vector<double> one = {3.0};
  EXPECT_EQ(weight_omega(std::span<const double>(one), 0.7), 1.0);
  std::vector<double> two = {2, 0};
  EXPECT_DOUBLE_EQ(weight_omega(std::span<const double>(two), 1), 4.0);
  std::vector<double> three = {1, 2, 4};
  EXPECT_DOUBLE_EQ(weight_omega(std::span<const double>(three), 0.5), 6.0);
  EXPECT_DOUBLE_EQ(coord_product(std::span<const double>(three)), 8.0);
}

TEST(Quadrature, DeterministicAcrossThreads) {
  QuadratureJob job;
  job.n = 2;
  job.options.rel_tol = 1e-8;
  job.integrand = [](std::span<const double> x) {
    return cdouble(std::exp(-x[0] - 2 * x[1]) * std::sqrt(x[0] - x[1]));
  };
  auto a = chamber_integrate(job);
  job.options.threads = 3;
  auto b = chamber_integrate(job);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Quadrature, BudgetExhaustion) {
  QuadOptions opt;
  opt.rel_tol = 1e-14;
  opt.max_subdivisions = 3;
  try {
    integrate_cube(2, [](std::span<const double> u) { return cdouble(1 / std::sqrt(u[0] + u[1])); }, opt);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_GT(e.best_estimate.real(), 0);
    EXPECT_GT(e.error_estimate, 0);
  }
}

TEST(Quadrature, HighDimensionWarns) {
  QuadratureJob job;
  job.n = 4;
  job.options.rel_tol = 1e-3;
  job.integrand = [](std::span<const double> x) {
    double s = 0;
    for (double v : x) s += v;
    return cdouble(std::exp(-s));
  };
  auto r = chamber_integrate(job);
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NEAR(r.value.real(), 1.0, 1e-2);
}
