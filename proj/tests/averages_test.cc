#include "tauberian/averages.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "tauberian/systems.h"
#include "test_support.h"

namespace tauberian {
namespace {

PiecewiseTrace TraceOfB(double s) {
  return PaperTrace(ProcessDescriptor::B(s));
}


TEST(TimeAverageTest, Examples) {
  EXPECT_DOUBLE_EQ(TimeAverage(TraceOfB(1.0), 4.0).value, 0.75);
  for (double horizon : {0.1, 1.0, 37.0}) {
    EXPECT_EQ(TimeAverage(PiecewiseTrace::Constant(1.0), horizon).value, 1.0);
  }
  EXPECT_DOUBLE_EQ(TimeAverage(TraceOfB(2.0), 1.0).value, 0.5);
  const AverageValue v = TimeAverage(TraceOfB(2.0), 1.0);
  EXPECT_EQ(v.method, AverageMethod::kExact);
  EXPECT_EQ(v.abs_error_bound, 0.0);
}

TEST(TimeAverageTest, RejectsNonPositiveHorizon) {
  EXPECT_THROW(TimeAverage(TraceOfB(1.0), 0.0), DomainError);
  EXPECT_THROW(TimeAverage(TraceOfB(1.0), -2.0), DomainError);
}

TEST(DiscountedAverageTest, Examples) {
  for (double s : {0.01, 0.5, 1.0, 3.0, 200.0}) {
    for (double lambda : {0.001, 0.3, 1.0, 10.0}) {
      EXPECT_NEAR(DiscountedAverage(TraceOfB(s), lambda).value,
                  1.0 - (std::exp(-lambda / s) - std::exp(-2 * lambda / s)),
                  1e-14);
    }
  }
  EXPECT_NEAR(DiscountedAverage(TraceOfB(1.0 / std::log(2.0)), 1.0).value,
              0.75, 1e-15);
  for (double c : {0.0, 0.3, 1.0}) {
    EXPECT_NEAR(DiscountedAverage(PiecewiseTrace::Constant(c), 0.7).value, c,
                1e-15);
  }
}

TEST(DiscountedAverageTest, RejectsNonPositiveRate) {
  EXPECT_THROW(DiscountedAverage(TraceOfB(1.0), 0.0), DomainError);
  EXPECT_THROW(DiscountedAverage(TraceOfB(1.0), -1.0), DomainError);
}

TEST(QuadratureTest, MatchesExactOnBlackBoxTrace) {
  const PiecewiseTrace trace = TraceOfB(1.0);
  const AverageValue q = DiscountedAverageQuadrature(
      [&](double t) { return trace.At(t); }, 1.0, 1e-8);
  EXPECT_EQ(q.method, AverageMethod::kQuadrature);
  EXPECT_LE(q.abs_error_bound, 1e-8);
  EXPECT_NEAR(q.value, 1.0 - (std::exp(-1.0) - std::exp(-2.0)), 1e-8);
}

TEST(QuadratureTest, ZeroAndUnitCosts) {
  EXPECT_EQ(
      DiscountedAverageQuadrature([](double) { return 0.0; }, 1.0, 1e-6).value,
      0.0);
  EXPECT_NEAR(
      DiscountedAverageQuadrature([](double) { return 1.0; }, 0.1, 1e-6).value,
      1.0, 1e-6);
}

TEST(QuadratureTest, Errors) {
  auto one = [](double) { return 1.0; };
  EXPECT_THROW(DiscountedAverageQuadrature(one, 0.0, 1e-6), DomainError);
  EXPECT_THROW(DiscountedAverageQuadrature(one, 1.0, 0.0), DomainError);
  EXPECT_THROW(DiscountedAverageQuadrature(one, 1.0, 1.0), DomainError);
  EXPECT_THROW(DiscountedAverageQuadrature([](double) { return 1.5; }, 1.0,
                                           1e-6),
               ContractViolation);
}

TEST(QuadratureTest, UnresolvableJumpReportsPanel) {
  // A unit jump needs panels far below 2^-40 of the range to meet 1e-15.
  try {
    DiscountedAverageQuadrature([](double t) { return t < 0.3 ? 1.0 : 0.0; },
                                1.0, 1e-15);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_LE(e.lo(), 0.3);
    EXPECT_GE(e.hi(), 0.3);
  }
}

class AverageProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
  std::uniform_real_distribution<double> unit{0.0, 1.0};
};

TEST_F(AverageProperties, BoundsHold) {
  for (int i = 0; i < 300; ++i) {
    const PiecewiseTrace t = testing::RandomTrace(rng);
    const double v = TimeAverage(t, 0.01 + 20 * unit(rng)).value;
    const double w = DiscountedAverage(t, 0.001 + 10 * unit(rng)).value;
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_GE(w, 0.0);
    EXPECT_LE(w, 1.0);
  }
}

TEST_F(AverageProperties, MonotoneUnderPointwiseDominance) {
  for (int i = 0; i < 200; ++i) {
    const PiecewiseTrace upper = testing::RandomTrace(rng);
    const PiecewiseTrace lower = testing::DominatedBy(rng, upper);
    const double horizon = 0.01 + 20 * unit(rng);
    const double lambda = 0.001 + 10 * unit(rng);
    EXPECT_LE(TimeAverage(lower, horizon).value,
              TimeAverage(upper, horizon).value + 1e-15);
    EXPECT_LE(DiscountedAverage(lower, lambda).value,
              DiscountedAverage(upper, lambda).value + 1e-15);
  }
}

TEST_F(AverageProperties, SpliceIdentities) {
  for (int i = 0; i < 200; ++i) {
    const PiecewiseTrace z = testing::RandomTrace(rng);
    const PiecewiseTrace z2 = testing::RandomTrace(rng);
    const double h = 0.05 + 8 * unit(rng);
    const double horizon = h + 0.05 + 10 * unit(rng);
    const double lambda = 0.01 + 5 * unit(rng);
    const PiecewiseTrace joined = z.Spliced(h, z2);
    EXPECT_NEAR(horizon * TimeAverage(joined, horizon).value,
                h * TimeAverage(z, h).value +
                    (horizon - h) * TimeAverage(z2, horizon - h).value,
                1e-12);
    EXPECT_NEAR(DiscountedAverage(joined, lambda).value,
                testing::DiscountedHead(z, lambda, h) +
                    std::exp(-lambda * h) * DiscountedAverage(z2, lambda).value,
                1e-12);
  }
}

TEST_F(AverageProperties, QuadratureMatchesExact) {
  for (int i = 0; i < 100; ++i) {
    const PiecewiseTrace t = testing::RandomTrace(rng);
    for (double lambda : {0.01, 0.1, 1.0, 10.0}) {
      const double eps = 1e-7;
      const AverageValue q = DiscountedAverageQuadrature(
          [&](double s) { return t.At(s); }, lambda, eps, t.breakpoints());
      EXPECT_NEAR(q.value, DiscountedAverage(t, lambda).value, eps);
      EXPECT_LE(q.abs_error_bound, eps);
    }
  }
}

}  // namespace
}  // namespace tauberian
