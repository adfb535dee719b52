#include "tauberian/sweep.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <utility>

#include <fmt/format.h>

#include "tauberian/value.h"

namespace tauberian {
namespace {

// Relative slack on the spacing check so that grids generated as
// start * ratio^k with ratio exactly 2 are accepted.
constexpr double kRatioSlack = 1e-12;

struct Row {
  std::vector<double> v;
  std::vector<double> w;
};

Row EvaluateRow(const ControlSystem& system, const State& omega,
                const Schedule& ts, const Schedule& lambdas, double tol) {
  Row row;
  for (double t : ts.points()) {
    try {
      row.v.push_back(ValueTime(system, omega, t, tol).value);
    } catch (const std::exception& e) {
      std::throw_with_nested(SweepError(omega, ScheduleKind::kTime, t, e.what()));
    }
  }
  for (double l : lambdas.points()) {
    try {
      row.w.push_back(ValueDiscounted(system, omega, l, tol).value);
    } catch (const std::exception& e) {
      std::throw_with_nested(
          SweepError(omega, ScheduleKind::kDiscount, l, e.what()));
    }
  }
  return row;
}

}  // namespace

Schedule::Schedule(ScheduleKind kind, std::vector<double> points)
    : kind_(kind), points_(std::move(points)) {
  if (points_.size() < kMinPoints) {
    throw DomainError(fmt::format("schedule needs at least {} points, got {}",
                                  kMinPoints, points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!(points_[i] > 0.0) || !std::isfinite(points_[i])) {
      throw DomainError(
          fmt::format("schedule points must be finite and > 0, got {}",
                      points_[i]));
    }
    if (i == 0) continue;
    const double ratio = kind_ == ScheduleKind::kTime
                             ? points_[i] / points_[i - 1]
                             : points_[i - 1] / points_[i];
    if (ratio < kMinRatio * (1.0 - kRatioSlack)) {
      throw DomainError(fmt::format(
          "{} schedule must {} by a factor >= {} per step ({} -> {})",
          kind_ == ScheduleKind::kTime ? "time" : "discount",
          kind_ == ScheduleKind::kTime ? "grow" : "shrink", kMinRatio,
          points_[i - 1], points_[i]));
    }
  }
}

Schedule Schedule::Geometric(ScheduleKind kind, double start, double ratio,
                             std::size_t count) {
  std::vector<double> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(start * std::pow(ratio, static_cast<double>(i)));
  }
  return Schedule(kind, std::move(points));
}

LimitEstimate EstimateLimit(std::span<const double> values) {
  if (values.size() < Schedule::kMinPoints) {
    throw DomainError(fmt::format("limit estimation needs >= {} values, got {}",
                                  Schedule::kMinPoints, values.size()));
  }
  const auto window = values.last(kLimitWindow);
  const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
  return {values.back(), *hi - *lo};
}

Verdict RenderVerdict(const TauberianReport& report, double eps) {
  if (report.uniformity_v > eps || report.uniformity_w > eps) {
    return Inconclusive{};
  }
  if (report.max_gap <= eps) {
    return Coincide{report.v_limit, *std::max_element(report.v_limit.begin(),
                                                      report.v_limit.end())};
  }
  Gap gap;
  gap.v_profile = report.v_limit;
  gap.w_profile = report.w_limit;
  gap.v_sup = *std::max_element(report.v_limit.begin(), report.v_limit.end());
  gap.w_sup = *std::max_element(report.w_limit.begin(), report.w_limit.end());
  gap.max_gap = report.max_gap;
  gap.worst_state = report.worst_state;
  return gap;
}

std::string VerdictName(const Verdict& v) {
  if (std::holds_alternative<Coincide>(v)) return "coincide";
  if (std::holds_alternative<Gap>(v)) return "gap";
  return "inconclusive";
}

SweepError::SweepError(const State& state, ScheduleKind kind, double point,
                       const std::string& cause)
    : std::runtime_error(fmt::format(
          "value evaluation failed at state {} with {} = {}: {}",
          state.ToString(), kind == ScheduleKind::kTime ? "T" : "lambda",
          point, cause)) {}

TauberianReport Sweep(const ControlSystem& system,
                      const std::vector<State>& states, const Schedule& ts,
                      const Schedule& lambdas, double tol, unsigned threads) {
  if (states.empty()) throw DomainError("sweep needs at least one state");
  if (ts.kind() != ScheduleKind::kTime ||
      lambdas.kind() != ScheduleKind::kDiscount) {
    throw DomainError("sweep needs a time schedule and a discount schedule");
  }
  if (!(tol > 0.0)) {
    throw DomainError(fmt::format("tolerance must be > 0, got {}", tol));
  }

  std::vector<Row> rows(states.size());
  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, states.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      rows[i] = EvaluateRow(system, states[i], ts, lambdas, tol);
    }
  } else {
    // Static striping; each row is written by exactly one task.
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < states.size(); i += workers) {
          rows[i] = EvaluateRow(system, states[i], ts, lambdas, tol);
        }
      }));
    }
    for (auto& t : tasks) t.wait();
    for (auto& t : tasks) t.get();
  }

  TauberianReport report{
      .states = states, .t_schedule = ts, .lambda_schedule = lambdas};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const LimitEstimate v = EstimateLimit(rows[i].v);
    const LimitEstimate w = EstimateLimit(rows[i].w);
    report.v_values.push_back(std::move(rows[i].v));
    report.w_values.push_back(std::move(rows[i].w));
    report.v_limit.push_back(v.limit);
    report.w_limit.push_back(w.limit);
    report.v_residual.push_back(v.residual);
    report.w_residual.push_back(w.residual);
    report.uniformity_v = std::max(report.uniformity_v, v.residual);
    report.uniformity_w = std::max(report.uniformity_w, w.residual);
    const double gap = std::abs(v.limit - w.limit);
    if (gap > report.max_gap) {
      report.max_gap = gap;
      report.worst_state = i;
    }
  }
  report.verdict_tol = 10.0 * tol;
  report.verdict = RenderVerdict(report, report.verdict_tol);
  return report;
}

}  // namespace tauberian
