#include "tauberian/value.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <fmt/format.h>

#include "tauberian/averages.h"

namespace tauberian {
namespace {

constexpr double kRangeSlack = 1e-9;
constexpr double kRayFloor = 1e-6;
constexpr double kRayCeiling = 1e6;
constexpr int kMaxGoldenIterations = 400;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

// Objective wrapper that checks the range, counts evaluations and keeps the
// best probe (ties to the lexicographically smallest parameter).
class Tracker {
 public:
  explicit Tracker(const Objective& objective) : objective_(objective) {}

  double operator()(const Parameter& p) {
    const double v = objective_(p);
    ++evaluations_;
    if (std::isnan(v) || v < -kRangeSlack || v > 1.0 + kRangeSlack) {
      throw ContractViolation(
          fmt::format("objective returned {} outside [0,1]", v));
    }
    const double clamped = std::clamp(v, 0.0, 1.0);
    if (!has_best_ || clamped < best_value_ ||
        (clamped == best_value_ && p < best_)) {
      has_best_ = true;
      best_value_ = clamped;
      best_ = p;
    }
    return clamped;
  }

  double best_value() const { return best_value_; }
  const Parameter& best() const { return best_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const Objective& objective_;
  bool has_best_ = false;
  double best_value_ = std::numeric_limits<double>::infinity();
  Parameter best_;
  std::size_t evaluations_ = 0;
};

// Golden-section search of coordinate `axis` of `base` over the parameter
// bracket [lo, hi]. Works in log space when the bracket stays away from 0 on
// a ray, so the stopping width is relative there. Returns the final bracket
// width in parameter units.
double GoldenRefine(Tracker& f, Parameter base, std::size_t axis, double lo,
                    double hi, bool logarithmic, double tol) {
  if (!(hi > lo)) return 0.0;
  auto to_param = [&](double c) { return logarithmic ? std::exp(c) : c; };
  double a = logarithmic ? std::log(lo) : lo;
  double b = logarithmic ? std::log(hi) : hi;
  auto probe = [&](double c) {
    // Keep the probe inside the original bracket despite exp/log rounding.
    base[axis] = std::clamp(to_param(c), lo, hi);
    return f(base);
  };
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = probe(c);
  double fd = probe(d);
  for (int it = 0; it < kMaxGoldenIterations && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = probe(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = probe(d);
    }
  }
  return to_param(b) - to_param(a);
}

struct Bracket {
  double lo;
  double hi;
  bool logarithmic;
};

// Bracket of grid neighbours around p.
Bracket BracketAround(const std::vector<double>& grid, const Axis& axis,
                      double p) {
  const auto it = std::upper_bound(grid.begin(), grid.end(), p);
  std::size_t i = it == grid.begin()
                      ? 0
                      : static_cast<std::size_t>(it - grid.begin()) - 1;
  if (i + 1 < grid.size() && grid[i] != p) {
    // p sits strictly between grid[i] and grid[i+1].
    return {grid[i], grid[i + 1], axis.is_ray() && grid[i] > 0.0};
  }
  const double lo = grid[i == 0 ? 0 : i - 1];
  const double hi = grid[std::min(i + 1, grid.size() - 1)];
  return {lo, hi, axis.is_ray() && lo > 0.0};
}

ValueResult Finish(const Tracker& f, const ProcessFamily& family,
                   double achieved) {
  ValueResult r;
  r.value = f.best_value();
  r.minimizer = f.best();
  r.family_label = family.label;
  r.evaluations = f.evaluations();
  r.achieved_tol = achieved;
  return r;
}

ValueResult Minimize1d(const Objective& objective, const ProcessFamily& family,
                       double tol) {
  const Axis& axis = family.axes[0];
  const std::vector<double> grid = ScanGrid(axis, kScanPoints1d);
  Tracker f(objective);
  for (double p : grid) f(Parameter{p});
  const double best = f.best()[0];
  const Bracket br = BracketAround(grid, axis, best);
  const double width =
      GoldenRefine(f, Parameter{best}, 0, br.lo, br.hi, br.logarithmic, tol);
  return Finish(f, family, width);
}

ValueResult Minimize2d(const Objective& objective, const ProcessFamily& family,
                       double tol) {
  const std::vector<double> g0 = ScanGrid(family.axes[0], kScanPoints2d);
  const std::vector<double> g1 = ScanGrid(family.axes[1], kScanPoints2d);
  Tracker f(objective);
  for (double p0 : g0) {
    for (double p1 : g1) f(Parameter{p0, p1});
  }
  const std::vector<double>* grids[2] = {&g0, &g1};
  double width = 0.0;
  for (int round = 0; round < kCoordinateRounds; ++round) {
    width = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      const Parameter base = f.best();
      const Bracket br = BracketAround(*grids[k], family.axes[k], base[k]);
      width = std::max(
          width, GoldenRefine(f, base, k, br.lo, br.hi, br.logarithmic, tol));
    }
  }
  return Finish(f, family, width);
}

void CheckPositive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(fmt::format("{} must be finite and > 0, got {}", what, v));
  }
}

template <typename Average>
ValueResult MinimizeOverGamma(const ControlSystem& system, const State& omega,
                              double tol, Average average) {
  system.CheckState(omega);
  const std::vector<ProcessFamily> families = system.feasible(omega);
  if (families.empty()) {
    throw DomainError(fmt::format("Gamma{} is empty in system '{}'",
                                  omega.ToString(), system.name));
  }
  ValueResult best;
  std::size_t evaluations = 0;
  for (std::size_t k = 0; k < families.size(); ++k) {
    const ProcessFamily& family = families[k];
    ValueResult r = MinimizeOverFamily(
        [&](const Parameter& p) { return average(family.Build(p).trace()); },
        family, tol);
    evaluations += r.evaluations;
    r.family_index = k;
    // Families that reach the same infimum (b<>a contains b's traces) differ
    // only by refinement noise; within tol the earlier family is kept.
    if (k == 0 || r.value < best.value - tol) best = std::move(r);
  }
  best.evaluations = evaluations;
  return best;
}

}  // namespace

std::vector<double> ScanGrid(const Axis& axis, std::size_t count) {
  if (count == 0) return {};
  std::vector<double> grid;
  if (!axis.is_ray()) {
    if (axis.hi == axis.lo) return {axis.lo};
    const double step = (axis.hi - axis.lo) /
                        static_cast<double>(axis.lo_open ? count : count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      const double k = static_cast<double>(axis.lo_open ? i + 1 : i);
      grid.push_back(i + 1 == count ? axis.hi : axis.lo + k * step);
    }
    return grid;
  }
  double lower = axis.lo > 0.0 ? axis.lo : kRayFloor;
  const double upper =
      axis.lo > 0.0 ? std::max(axis.lo * 1e12, kRayCeiling) : kRayCeiling;
  std::size_t log_points = count;
  if (axis.lo == 0.0 && !axis.lo_open) {
    grid.push_back(0.0);
    --log_points;
  } else if (axis.lo > 0.0 && axis.lo_open) {
    lower = std::nextafter(axis.lo, upper);
  }
  const double log_lo = std::log(lower);
  const double log_hi = std::log(upper);
  for (std::size_t i = 0; i < log_points; ++i) {
    const double frac = log_points == 1
                            ? 0.0
                            : static_cast<double>(i) /
                                  static_cast<double>(log_points - 1);
    grid.push_back(i == 0 ? lower : std::exp(log_lo + frac * (log_hi - log_lo)));
  }
  return grid;
}

ValueResult MinimizeOverFamily(const Objective& objective,
                               const ProcessFamily& family, double tol) {
  CheckPositive(tol, "tolerance");
  switch (family.axes.size()) {
    case 0: {
      Tracker f(objective);
      f(Parameter{});
      return Finish(f, family, 0.0);
    }
    case 1:
      return Minimize1d(objective, family, tol);
    case 2:
      return Minimize2d(objective, family, tol);
    default:
      throw DomainError(fmt::format(
          "family '{}' has {} parameters; at most 2 are supported",
          family.label, family.axes.size()));
  }
}

ValueResult ValueTime(const ControlSystem& system, const State& omega,
                      double horizon, double tol) {
  CheckPositive(horizon, "horizon T");
  CheckPositive(tol, "tolerance");
  return MinimizeOverGamma(system, omega, tol,
                           [horizon](const PiecewiseTrace& trace) {
                             return TimeAverage(trace, horizon).value;
                           });
}

ValueResult ValueDiscounted(const ControlSystem& system, const State& omega,
                            double lambda, double tol) {
  CheckPositive(lambda, "discount lambda");
  CheckPositive(tol, "tolerance");
  return MinimizeOverGamma(system, omega, tol,
                           [lambda](const PiecewiseTrace& trace) {
                             return DiscountedAverage(trace, lambda).value;
                           });
}

}  // namespace tauberian
