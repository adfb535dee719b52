#ifndef TAUBERIAN_SWEEP_H_
#define TAUBERIAN_SWEEP_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tauberian/core.h"

namespace tauberian {

enum class ScheduleKind { kTime, kDiscount };

// Horizons T (increasing) or discount rates lambda (decreasing): at least 4
// positive points, consecutive points at least a factor 2 apart.
class Schedule {
 public:
  static constexpr std::size_t kMinPoints = 4;
  static constexpr double kMinRatio = 2.0;

  // Throws DomainError if the invariants fail.
  Schedule(ScheduleKind kind, std::vector<double> points);

  // start, start * ratio, ..., count points.
  static Schedule Geometric(ScheduleKind kind, double start, double ratio,
                            std::size_t count);

  ScheduleKind kind() const { return kind_; }
  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  ScheduleKind kind_;
  std::vector<double> points_;
};

struct LimitEstimate {
  double limit = 0.0;
  // Largest pairwise distance among the trailing window.
  double residual = 0.0;
};

inline constexpr std::size_t kLimitWindow = 3;

// Trailing-window estimate: the last value, and the spread of the last three.
// Throws DomainError for fewer than 4 values.
LimitEstimate EstimateLimit(std::span<const double> values);

struct Coincide {
  std::vector<double> profile;  // per-state shared limit
  double sup_limit = 0.0;
};

struct Gap {
  std::vector<double> v_profile;
  std::vector<double> w_profile;
  double v_sup = 0.0;
  double w_sup = 0.0;
  double max_gap = 0.0;
  std::size_t worst_state = 0;
};

struct Inconclusive {};

using Verdict = std::variant<Coincide, Gap, Inconclusive>;

struct TauberianReport {
  std::vector<State> states;
  Schedule t_schedule;
  Schedule lambda_schedule;
  // [state][schedule point]
  std::vector<std::vector<double>> v_values{};
  std::vector<std::vector<double>> w_values{};
  std::vector<double> v_limit{};
  std::vector<double> w_limit{};
  std::vector<double> v_residual{};
  std::vector<double> w_residual{};
  double uniformity_v = 0.0;
  double uniformity_w = 0.0;
  // max over states of |v_limit - w_limit|, and where it occurs.
  double max_gap = 0.0;
  std::size_t worst_state = 0;
  double verdict_tol = 0.0;
  Verdict verdict = Inconclusive{};
};

// Inconclusive unless both uniformity residuals are <= eps; then Coincide if
// every per-state gap is <= eps, Gap otherwise.
Verdict RenderVerdict(const TauberianReport& report, double eps);

std::string VerdictName(const Verdict& v);

// Raised (with the underlying error nested) when a value evaluation inside a
// sweep fails.
class SweepError : public std::runtime_error {
 public:
  SweepError(const State& state, ScheduleKind kind, double point,
             const std::string& cause);
};

// Evaluates V[v_T] and V[w_lambda] at every state and schedule point,
// estimates limits and uniformity, and renders the verdict at tolerance
// 10 * tol. Rows are evaluated on up to `threads` threads; the report does
// not depend on the thread count.
TauberianReport Sweep(const ControlSystem& system,
                      const std::vector<State>& states, const Schedule& ts,
                      const Schedule& lambdas, double tol,
                      unsigned threads = 1);

}  // namespace tauberian

#endif  // TAUBERIAN_SWEEP_H_
