#include <gtest/gtest.h>

#include "dunkl/riesz.hpp"

using namespace dunkl;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

bool in_wallach_set(const Rational& mu, int n, const Rational& k) {
  if (mu > k * (n - 1)) return true;
  for (int r = 0; r < n; ++r)
    if (mu == k * r) return true;
  return false;
}

}  // namespace

TEST(Riesz, DensityExamples) {
  RieszDensity one(1, Multiplicity(q(1)), 1.0);
  std::vector<double> x1 = {2.5};
  EXPECT_NEAR(std::abs(one(std::span<const double>(x1)) - 1.0), 0, 1e-14);

  RieszDensity two(2, Multiplicity(q(1, 2)), 2.0);
  std::vector<double> ones = {1, 1};
  double expected = 1 / (d_n_value(2, 0.5) * gamma_n_value(2.0, 2, 0.5).real());
  EXPECT_NEAR(two(std::span<const double>(ones)).real(), expected, 1e-14);
  // exponent 1/2
  std::vector<double> x = {4, 1};
  EXPECT_NEAR(two(std::span<const double>(x)).real(), 2 * expected, 1e-13);

  RieszDensity edge(2, Multiplicity(q(1, 2)), 0.5);
  EXPECT_FALSE(edge.function_regime());
  EXPECT_THROW(edge(std::span<const double>(ones)), DistributionOnly);
  std::vector<double> boundary = {1, 0};
  EXPECT_THROW(two(std::span<const double>(boundary)), DomainError);
}

TEST(Riesz, ClassifierExamples) {
  auto zero = wallach_classify(q(0), 3, Multiplicity(q(1, 2)));
  EXPECT_EQ(zero.verdict, WallachKind::positive_measure_discrete);
  EXPECT_EQ(zero.r, 0);
  EXPECT_EQ(zero.label(), "positive_measure_discrete(0)");

  auto gap = wallach_classify(q(3, 4), 3, Multiplicity(q(1, 2)));
  EXPECT_EQ(gap.verdict, WallachKind::not_positive_measure);
  ASSERT_TRUE(gap.witness);
  EXPECT_EQ(*gap.witness, Partition({1, 1, 1}));
  EXPECT_EQ(*gap.pochhammer_value, "-3/64");

  auto neg = wallach_classify(q(-1, 4), 2, Multiplicity(q(3, 4)));
  EXPECT_EQ(neg.verdict, WallachKind::not_a_measure_candidate);
  EXPECT_FALSE(neg.witness);
  EXPECT_FALSE(neg.candidate_complex_measure);

  auto cont = wallach_classify(q(5, 2), 3, Multiplicity(q(1)));
  EXPECT_EQ(cont.verdict, WallachKind::positive_measure_continuous);
  EXPECT_EQ(cont.complex_measure, ComplexMeasureStatus::measure);

  EXPECT_THROW(wallach_classify(q(1), 2, Multiplicity(q(0))), DomainError);
}

TEST(Riesz, CandidateSetBelowThreshold) {
  // n = 3, k = 3/2: finite set {0, 3/2, 3} - N_0 meets [0, 3) in {0, 1/2, 1, 3/2, 2}
  Multiplicity k(q(3, 2));
  auto half = wallach_classify(q(1, 2), 3, k);
  EXPECT_EQ(half.verdict, WallachKind::not_positive_measure);
  EXPECT_TRUE(half.candidate_complex_measure);
  EXPECT_EQ(half.complex_measure, ComplexMeasureStatus::undetermined);
  auto third = wallach_classify(q(1, 3), 3, k);
  EXPECT_FALSE(third.candidate_complex_measure);
  EXPECT_EQ(third.complex_measure, ComplexMeasureStatus::excluded);
}

TEST(Riesz, FloatAndComplexInputs) {
  auto f = wallach_classify(ScalarValue(cdouble(0.5)), 3, Multiplicity(0.5));
  EXPECT_TRUE(f.tolerance_tagged);
  EXPECT_EQ(f.verdict, WallachKind::positive_measure_discrete);
  EXPECT_EQ(f.r, 1);
  auto g = wallach_classify(ScalarValue(cdouble(0.75)), 3, Multiplicity(0.5));
  EXPECT_EQ(*g.witness, Partition({1, 1, 1}));
  auto c = wallach_classify(ScalarValue(cdouble(2, 1)), 3, Multiplicity(q(1, 2)));
  EXPECT_EQ(c.verdict, WallachKind::not_positive_measure);
  EXPECT_FALSE(c.witness);
  EXPECT_TRUE(c.candidate_complex_measure);
  auto d = wallach_classify(ScalarValue(cdouble(0.5, 1)), 3, Multiplicity(q(1, 2)));
  EXPECT_EQ(d.verdict, WallachKind::not_a_measure_candidate);
}

TEST(Riesz, SignWitnessExamples) {
  for (const Rational& k : {q(1, 3), q(1, 2), q(2)}) {
    for (int n = 2; n <= 4; ++n) {
      auto above = sign_witness(k * (n - 1) + 1, n, k, n + 2);
      EXPECT_FALSE(above.witness);
      EXPECT_TRUE(above.all_nonnegative);
      auto half = sign_witness(k / 2, n, k, 2);
      ASSERT_TRUE(half.witness);
      EXPECT_EQ(*half.witness, Partition({1, 1}));
      EXPECT_EQ(*half.value, -(k / 2) * (k / 2));
      for (int r = 0; r < n; ++r) EXPECT_FALSE(sign_witness(k * r, n, k, n + 1).witness);
    }
  }
}

TEST(Riesz, IffSignPropertyOnGrid) {
  for (const Rational& k : {q(1, 3), q(1, 2), q(2)}) {
    for (int n = 2; n <= 4; ++n) {
      for (Rational mu = -k; mu <= k * (n + 1); mu += k / 4) {
        mu.canonicalize();
        auto sw = sign_witness(mu, n, k, n + 1);
        EXPECT_EQ(sw.all_nonnegative, in_wallach_set(mu, n, k)) << "mu=" << mu << " n=" << n << " k=" << k;
        // refining the scan depth never changes the verdict
        EXPECT_EQ(sign_witness(mu, n, k, n + 3).all_nonnegative, sw.all_nonnegative);
      }
    }
  }
}

TEST(Riesz, DiscreteMeasures) {
  DiscreteWallachMeasure delta(3, Multiplicity(q(1, 2)), 0);
  std::vector<cdouble> z = {1, 1.5, 2};
  EXPECT_EQ(delta.laplace(z), cdouble(1));
  auto p = delta.pair([](std::span<const double> x) { return cdouble(std::exp(-x[0]) + 2); }, {});
  EXPECT_EQ(p.value, cdouble(3));
  EXPECT_THROW(DiscreteWallachMeasure(3, Multiplicity(q(1, 2)), 3), DomainError);
}

TEST(Riesz, DiscreteLaplaceTwoVariables) {
  for (const Rational& k : {q(1, 2), q(1)}) {
    auto rep = discrete_wallach_laplace_check(2, 1, Multiplicity(k), {1, 2}, 1e-4);
    EXPECT_TRUE(rep.pass) << "k=" << k << " rel=" << rep.rel_err;
  }
  auto ref = discrete_wallach_laplace_check(2, 1, Multiplicity(q(1, 2)), {1, 2}, 1e-4);
  EXPECT_NEAR(ref.reference.real(), std::pow(2.0, -0.5), 1e-15);
}

TEST(Riesz, DiscreteLaplaceThreeVariables) {
  auto rep = discrete_wallach_laplace_check(3, 1, Multiplicity(q(1, 2)), {2, 2, 2}, 1e-3);
  EXPECT_NEAR(rep.reference.real(), std::pow(8.0, -0.5), 1e-15);
  EXPECT_TRUE(rep.pass) << rep.rel_err;
}

TEST(Riesz, DiscreteLaplaceUnequalArguments) {
  for (int r = 1; r <= 2; ++r) {
    auto rep = discrete_wallach_laplace_check(3, r, Multiplicity(q(1, 2)), {1, 2, 3}, 1e-3);
    EXPECT_NEAR(rep.reference.real(), std::pow(6.0, -0.5 * r), 1e-14);
    EXPECT_TRUE(rep.pass) << r << " " << rep.rel_err;
  }
}

TEST(Riesz, DiscreteSeries) {
  for (int r = 0; r <= 2; ++r) {
    auto rep = discrete_wallach_series_check(3, r, q(1, 2), 5);
    EXPECT_TRUE(rep.all_equal()) << r;
    for (const auto& d : rep.degrees) EXPECT_TRUE(d.dropped_vanish);
  }
}
