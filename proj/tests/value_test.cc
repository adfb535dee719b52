#include "tauberian/value.h"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "tauberian/averages.h"
#include "tauberian/systems.h"
#include "test_support.h"

namespace tauberian {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

ProcessFamily FamilyB() { return PaperSystem().feasible({0, 0, 0})[1]; }
ProcessFamily FamilyBA() { return PaperSystem().feasible({0, 0, 0})[2]; }

Objective DiscountedOn(const ProcessFamily& f, double lambda) {
  return [f, lambda](const Parameter& p) {
    return DiscountedAverage(f.Build(p).trace(), lambda).value;
  };
}

Objective TimeOn(const ProcessFamily& f, double horizon) {
  return [f, horizon](const Parameter& p) {
    return TimeAverage(f.Build(p).trace(), horizon).value;
  };
}

TEST(ScanGridTest, Shapes) {
  const auto ray = ScanGrid(Axis{0.0, kInf}, kScanPoints1d);
  ASSERT_EQ(ray.size(), kScanPoints1d);
  EXPECT_EQ(ray.front(), 0.0);
  EXPECT_DOUBLE_EQ(ray[1], 1e-6);
  EXPECT_NEAR(ray.back(), 1e6, 1e-3);
  EXPECT_TRUE(std::is_sorted(ray.begin(), ray.end()));
  const auto open = ScanGrid(Axis{0.0, kInf, true}, 65);
  EXPECT_GT(open.front(), 0.0);
  const auto interval = ScanGrid(Axis{1.0, 3.0}, 5);
  EXPECT_EQ(interval, (std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0}));
  EXPECT_EQ(ScanGrid(Axis{2.0, 2.0}, 129), std::vector<double>{2.0});
}

TEST(MinimizeOverFamilyTest, DiscountedOnRay) {
  const ProcessFamily b = FamilyB();
  const ValueResult r = MinimizeOverFamily(DiscountedOn(b, 1.0), b, 1e-8);
  EXPECT_NEAR(r.value, 0.75, 1e-12);
  ASSERT_EQ(r.minimizer.size(), 1u);
  EXPECT_NEAR(r.minimizer[0], 1.0 / kLn2, 1e-4);
  EXPECT_EQ(r.family_label, "b");
  EXPECT_GT(r.evaluations, kScanPoints1d);
}

TEST(MinimizeOverFamilyTest, SingletonEvaluatesOnce) {
  const ProcessFamily a = PaperSystem().feasible({0, 0, 0})[0];
  const ValueResult r = MinimizeOverFamily(TimeOn(a, 3.0), a, 1e-8);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.evaluations, 1u);
  EXPECT_TRUE(r.minimizer.empty());
}

TEST(MinimizeOverFamilyTest, TimeOnRayMatchesBruteForce) {
  const ProcessFamily b = FamilyB();
  const ValueResult r = MinimizeOverFamily(TimeOn(b, 1.0), b, 1e-8);
  EXPECT_NEAR(r.value, 0.5, 1e-8);
  // Independent oracle: closed-form interval overlap scanned on 10^6 points.
  const double oracle = testing::BruteForceArgmin(
      [](double s) { return testing::TimeAverageOfB(s, 1.0); }, 1e-3, 1e3,
      1000000);
  EXPECT_NEAR(oracle, 2.0, 2e-5);
  EXPECT_NEAR(r.minimizer[0], oracle, 1e-4);
}

TEST(MinimizeOverFamilyTest, ObjectiveOutOfRangeIsAContractViolation) {
  const ProcessFamily b = FamilyB();
  EXPECT_THROW(
      MinimizeOverFamily([](const Parameter&) { return 1.5; }, b, 1e-8),
      ContractViolation);
  EXPECT_THROW(
      MinimizeOverFamily([](const Parameter&) { return -1e-6; }, b, 1e-8),
      ContractViolation);
  // Within the 1e-9 slack the value is clamped.
  const ValueResult r =
      MinimizeOverFamily([](const Parameter&) { return -1e-10; }, b, 1e-8);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_THROW(MinimizeOverFamily(DiscountedOn(b, 1.0), b, 0.0), DomainError);
}

TEST(MinimizeOverFamilyTest, TiesGoToSmallestParameter) {
  ProcessFamily flat;
  flat.label = "flat";
  flat.axes = {Axis{1.0, 5.0}};
  const ValueResult r =
      MinimizeOverFamily([](const Parameter&) { return 0.5; }, flat, 1e-6);
  EXPECT_EQ(r.minimizer[0], 1.0);
}

TEST(MinimizeOverFamilyTest, FindsGlobalMinimumOfBimodalObjective) {
  ProcessFamily f;
  f.label = "bimodal";
  f.axes = {Axis{0.0, 10.0}};
  // Shallow local minimum at 2, global at 8.
  auto objective = [](const Parameter& p) {
    const double x = p[0];
    return std::min(0.6 + 0.01 * (x - 2) * (x - 2),
                    0.2 + 0.05 * (x - 8) * (x - 8)) /
           2.0;
  };
  const ValueResult r = MinimizeOverFamily(objective, f, 1e-9);
  EXPECT_NEAR(r.minimizer[0], 8.0, 1e-4);
  EXPECT_NEAR(r.value, 0.1, 1e-12);
}

TEST(MinimizeOverFamilyTest, TwoDimensionalQuadratic) {
  ProcessFamily f;
  f.label = "bowl";
  f.axes = {Axis{0.0, 4.0}, Axis{0.0, 4.0}};
  auto objective = [](const Parameter& p) {
    return 0.1 + 0.02 * ((p[0] - 1.3) * (p[0] - 1.3) +
                         (p[1] - 2.7) * (p[1] - 2.7));
  };
  const ValueResult r = MinimizeOverFamily(objective, f, 1e-9);
  EXPECT_NEAR(r.minimizer[0], 1.3, 1e-4);
  EXPECT_NEAR(r.minimizer[1], 2.7, 1e-4);
  EXPECT_NEAR(r.value, 0.1, 1e-10);
}

TEST(ValueTest, OriginTimeValues) {
  const ControlSystem sys = PaperSystem();
  for (double horizon : {1.0, 100.0}) {
    const ValueResult r = ValueTime(sys, {0, 0, 0}, horizon, 1e-8);
    EXPECT_NEAR(r.value, 0.5, 1e-8) << "T=" << horizon;
    EXPECT_EQ(r.family_label, "b");
    EXPECT_NEAR(r.minimizer[0], 2.0 / horizon, 1e-6 * 2.0 / horizon);
  }
}

TEST(ValueTest, OriginDiscountedValues) {
  const ControlSystem sys = PaperSystem();
  for (double lambda : {1.0, 0.01}) {
    const ValueResult r = ValueDiscounted(sys, {0, 0, 0}, lambda, 1e-8);
    EXPECT_NEAR(r.value, 0.75, 1e-12);
    EXPECT_NEAR(r.minimizer[0] / (lambda / kLn2), 1.0, 1e-4);
    EXPECT_EQ(r.family_index, 1u);
  }
}

TEST(ValueTest, OffOriginValuesAreOne) {
  const ControlSystem sys = PaperSystem();
  for (double x : {0.5, 1.0, 7.0}) {
    EXPECT_EQ(ValueTime(sys, {1, 1, 1}, x, 1e-8).value, 1.0);
    EXPECT_EQ(ValueDiscounted(sys, {1, 1, 1}, x, 1e-8).value, 1.0);
  }
  const ValueResult r = ValueDiscounted(sys, {5, 0, 0}, 1.0, 1e-8);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.family_label, "a");
}

TEST(ValueTest, Errors) {
  const ControlSystem sys = PaperSystem();
  EXPECT_THROW(ValueTime(sys, {0, 0, 0}, 0.0, 1e-8), DomainError);
  EXPECT_THROW(ValueDiscounted(sys, {0, 0, 0}, -1.0, 1e-8), DomainError);
  EXPECT_THROW(ValueTime(sys, {0, 0}, 1.0, 1e-8), DomainError);
  ControlSystem empty = sys;
  empty.feasible = [](const State&) { return std::vector<ProcessFamily>{}; };
  EXPECT_THROW(ValueTime(empty, {0, 0, 0}, 1.0, 1e-8), DomainError);
}

TEST(ValueTest, LowerBoundCertificate) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_s(std::log(1e-4), std::log(1e4));
  for (double lambda : {0.01, 0.1, 1.0}) {
    for (int i = 0; i < 1000; ++i) {
      const double s = std::exp(log_s(rng));
      EXPECT_GE(
          DiscountedAverage(PaperTrace(ProcessDescriptor::B(s)), lambda).value,
          0.75 - 1e-12);
    }
  }
}

TEST(ValueTest, ConstantAlongSchedules) {
  const ControlSystem sys = PaperSystem();
  const double tol = 1e-8;
  const double v0 = ValueTime(sys, {0, 0, 0}, 0.5, tol).value;
  for (double horizon : {1.0, 10.0, 100.0}) {
    EXPECT_NEAR(ValueTime(sys, {0, 0, 0}, horizon, tol).value, v0, 2 * tol);
  }
  const double w0 = ValueDiscounted(sys, {0, 0, 0}, 10.0, tol).value;
  for (double lambda : {1.0, 0.1, 0.01}) {
    EXPECT_NEAR(ValueDiscounted(sys, {0, 0, 0}, lambda, tol).value, w0,
                2 * tol);
  }
}

TEST(ValueTest, ConcatenationFamilyNeverBeatsB) {
  const double tol = 1e-8;
  const ProcessFamily b = FamilyB();
  const ProcessFamily ba = FamilyBA();
  for (double lambda : {0.1, 1.0, 10.0}) {
    EXPECT_GE(MinimizeOverFamily(DiscountedOn(ba, lambda), ba, tol).value,
              MinimizeOverFamily(DiscountedOn(b, lambda), b, tol).value - tol);
  }
  for (double horizon : {0.5, 3.0, 40.0}) {
    EXPECT_GE(MinimizeOverFamily(TimeOn(ba, horizon), ba, tol).value,
              MinimizeOverFamily(TimeOn(b, horizon), b, tol).value - tol);
  }
}

TEST(ValueTest, AgreesWithDenseScan) {
  const ProcessFamily b = FamilyB();
  for (double lambda : {0.05, 2.0}) {
    const double oracle_s = testing::BruteForceArgmin(
        [&](double s) { return testing::DiscountedAverageOfB(s, lambda); },
        1e-4, 1e4, 1000000);
    const double oracle_v = testing::DiscountedAverageOfB(oracle_s, lambda);
    EXPECT_NEAR(MinimizeOverFamily(DiscountedOn(b, lambda), b, 1e-8).value,
                oracle_v, 1e-6);
  }
  for (double horizon : {0.7, 25.0}) {
    // v_T(b_s) = 1 for s <= 1/T and increases beyond 2/T, so [1/T, 16/T]
    // holds the minimum; the narrow window keeps the scan's kink error small.
    const double oracle_s = testing::BruteForceArgmin(
        [&](double s) { return testing::TimeAverageOfB(s, horizon); },
        1.0 / horizon, 16.0 / horizon, 1000000);
    const double oracle_v = testing::TimeAverageOfB(oracle_s, horizon);
    EXPECT_NEAR(MinimizeOverFamily(TimeOn(b, horizon), b, 1e-8).value,
                oracle_v, 1e-6);
  }
}

}  // namespace
}  // namespace tauberian
