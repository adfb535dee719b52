#include "tauberian/averages.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <fmt/format.h>

namespace tauberian {
namespace {

constexpr double kClampSlack = 1e-12;
constexpr int kSeedDepth = 8;
constexpr int kMaxDepth = 40;

double ClampUnit(double v) {
  if (v < -kClampSlack || v > 1.0 + kClampSlack || std::isnan(v)) {
    throw NumericalError(fmt::format("average {} escaped [0,1]", v), 0.0, 1.0);
  }
  return std::clamp(v, 0.0, 1.0);
}

struct Panel {
  double a, b;
  double fa, fq1, fm, fq3, fb;
  double coarse;  // Simpson on [a,b]
  double fine;    // composite Simpson on the two halves
  int depth;

  double error() const { return std::abs(fine - coarse); }
  bool operator<(const Panel& other) const { return error() < other.error(); }
};

}  // namespace

AverageValue TimeAverage(const PiecewiseTrace& trace, double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError(
        fmt::format("time-average horizon must be finite and > 0, got {}",
                    horizon));
  }
  const auto bp = trace.breakpoints();
  const auto val = trace.values();
  double integral = 0.0;
  for (std::size_t i = 0; i < bp.size() && bp[i] < horizon; ++i) {
    const double end =
        i + 1 < bp.size() ? std::min(bp[i + 1], horizon) : horizon;
    integral += val[i] * (end - bp[i]);
  }
  return {ClampUnit(integral / horizon), AverageMethod::kExact, 0.0};
}

AverageValue DiscountedAverage(const PiecewiseTrace& trace, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError(
        fmt::format("discount rate must be finite and > 0, got {}", lambda));
  }
  const auto bp = trace.breakpoints();
  const auto val = trace.values();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    if (val[i] == 0.0) continue;
    // exp(-l a) - exp(-l b) without cancellation for narrow pieces.
    total += val[i] * -std::exp(-lambda * bp[i]) *
             std::expm1(-lambda * (bp[i + 1] - bp[i]));
  }
  total += trace.tail_value() * std::exp(-lambda * trace.tail_start());
  return {ClampUnit(total), AverageMethod::kExact, 0.0};
}

AverageValue DiscountedAverageQuadrature(
    const std::function<double(double)>& cost, double lambda, double eps,
    std::span<const double> breakpoints) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError(
        fmt::format("discount rate must be finite and > 0, got {}", lambda));
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError(fmt::format("quadrature eps must lie in (0,1), got {}",
                                  eps));
  }
  const double t_max = std::log(2.0 / eps) / lambda;
  const double budget = eps / 2.0;

  auto f = [&](double t) {
    const double c = cost(t);
    if (!(c >= 0.0 && c <= 1.0)) {
      throw ContractViolation(
          fmt::format("cost {} at t = {} is outside [0,1]", c, t));
    }
    return c == 0.0 ? 0.0 : lambda * std::exp(-lambda * t) * c;
  };
  auto make_panel = [&](double a, double b, double fa, double fm, double fb,
                        int depth) {
    Panel p{a, b, fa, f(a + 0.25 * (b - a)), fm, f(a + 0.75 * (b - a)), fb,
            0.0, 0.0, depth};
    const double h = b - a;
    p.coarse = h / 6.0 * (fa + 4.0 * fm + fb);
    p.fine = h / 12.0 * (fa + 4.0 * p.fq1 + 2.0 * fm + 4.0 * p.fq3 + fb);
    return p;
  };

  std::vector<double> cuts;
  const int seeds = 1 << kSeedDepth;
  for (int i = 0; i <= seeds; ++i) cuts.push_back(t_max * i / seeds);
  for (double t : breakpoints) {
    if (t > 0.0 && t < t_max) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> queue;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    // Right endpoint taken as a left limit so a panel seeded at a known
    // discontinuity only sees the piece it covers.
    queue.push(make_panel(a, b, f(a), f(0.5 * (a + b)),
                          f(std::nextafter(b, a)), kSeedDepth));
  }

  auto total_error = [&] {
    double e = 0.0;
    std::priority_queue<Panel> copy = queue;
    while (!copy.empty()) {
      e += copy.top().error();
      copy.pop();
    }
    return e;
  };
  double err = total_error();
  std::size_t splits = 0;
  while (err > budget && !queue.empty()) {
    Panel p = queue.top();
    queue.pop();
    if (p.depth >= kMaxDepth) {
      throw NumericalError(
          fmt::format("adaptive Simpson did not converge on [{}, {}]", p.a,
                      p.b),
          p.a, p.b);
    }
    const double mid = 0.5 * (p.a + p.b);
    Panel left = make_panel(p.a, mid, p.fa, p.fq1, p.fm, p.depth + 1);
    Panel right = make_panel(mid, p.b, p.fm, p.fq3, p.fb, p.depth + 1);
    err += left.error() + right.error() - p.error();
    queue.push(left);
    queue.push(right);
    // Resynchronize the running sum now and then.
    if (++splits % 1024 == 0) err = total_error();
    if (err <= budget) err = total_error();
  }

  double integral = 0.0;
  double estimate = 0.0;
  while (!queue.empty()) {
    integral += queue.top().fine;
    estimate += queue.top().error();
    queue.pop();
  }
  return {ClampUnit(integral), AverageMethod::kQuadrature, budget + estimate};
}

}  // namespace tauberian
