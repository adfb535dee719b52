#include "tauberian/core.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <optional>
#include <utility>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace tauberian {
namespace {

constexpr double kOpaqueEndpointTol = 1e-12;

void CheckTime(double t, const char* what) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(fmt::format("{} must be a finite time >= 0, got {}",
                                  what, t));
  }
}

State Advance(const State& omega, double t) {
  std::vector<double> c(omega.coords().begin(), omega.coords().end());
  c.back() += t;
  return State(std::move(c));
}

bool EndpointsMatch(const State& a, const State& b, bool exact) {
  if (a.dim() != b.dim()) return false;
  if (exact) return a == b;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a[i] - b[i]) > kOpaqueEndpointTol) return false;
  }
  return true;
}

// Closed algebra of the structural forms under concatenation. Returns
// nullopt when the result has no structural form.
std::optional<ProcessDescriptor> CanonicalConcat(const ProcessDescriptor& z,
                                                 double h,
                                                 const ProcessDescriptor& z2) {
  if (!z2.get_if<DescA>()) return std::nullopt;
  if (const auto* a = z.get_if<DescA>()) {
    return ProcessDescriptor::A(a->omega);
  }
  if (const auto* b = z.get_if<DescB>()) {
    return ProcessDescriptor::BConcatA(b->s, h);
  }
  if (const auto* ba = z.get_if<DescBConcatA>()) {
    // Splicing inside the b-part truncates it; after it the a-part absorbs.
    return ProcessDescriptor::BConcatA(ba->s, std::min(h, ba->tau));
  }
  return std::nullopt;
}

std::optional<ProcessDescriptor> CanonicalShift(const ProcessDescriptor& z,
                                                double tau) {
  if (const auto* a = z.get_if<DescA>()) {
    return ProcessDescriptor::A(Advance(a->omega, tau));
  }
  if (const auto* ba = z.get_if<DescBConcatA>(); ba && tau >= ba->tau) {
    return ProcessDescriptor::A(
        State{ba->s * ba->tau, ba->tau, tau - ba->tau});
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- State

State::State(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("state must have dimension >= 1");
  for (double c : coords_) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw DomainError(
          fmt::format("state coordinates must be finite and >= 0, got {}", c));
    }
  }
}

State::State(std::initializer_list<double> coords)
    : State(std::vector<double>(coords)) {}

bool State::IsOrigin() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](double c) { return c == 0.0; });
}

std::string State::ToString() const {
  return fmt::format("({})", fmt::join(coords_, ","));
}

// ------------------------------------------------------- PiecewiseTrace

PiecewiseTrace PiecewiseTrace::Constant(double c) {
  return PiecewiseTrace({0.0}, {c});
}

PiecewiseTrace::PiecewiseTrace(std::vector<double> breakpoints,
                               std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw DomainError("trace needs equally many (>= 1) breakpoints and values");
  }
  if (breakpoints_.front() != 0.0) {
    throw DomainError("trace breakpoints must start at 0");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i]) ||
        (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1]))) {
      throw DomainError("trace breakpoints must be finite, strictly increasing");
    }
    if (!(values_[i] >= 0.0 && values_[i] <= 1.0)) {
      throw DomainError(
          fmt::format("trace values must lie in [0,1], got {}", values_[i]));
    }
  }
  Canonicalize();
}

PiecewiseTrace::PiecewiseTrace(Unchecked, std::vector<double> breakpoints,
                               std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  Canonicalize();
}

void PiecewiseTrace::Canonicalize() {
  std::vector<double> bp = std::move(breakpoints_);
  std::vector<double> out_bp;
  std::vector<double> out_val;
  out_bp.reserve(bp.size());
  out_val.reserve(bp.size());
  for (std::size_t i = 0; i < bp.size(); ++i) {
    // A sliver piece hands its start over to the piece after it.
    if (i + 1 < bp.size() && bp[i + 1] - bp[i] < kMergeThreshold) {
      bp[i + 1] = bp[i];
      continue;
    }
    if (!out_val.empty() && out_val.back() == values_[i]) continue;
    out_bp.push_back(bp[i]);
    out_val.push_back(values_[i]);
  }
  breakpoints_ = std::move(out_bp);
  values_ = std::move(out_val);
}

double PiecewiseTrace::At(double t) const {
  CheckTime(t, "trace time");
  const auto it =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(
      std::distance(breakpoints_.begin(), it) - 1)];
}

PiecewiseTrace PiecewiseTrace::Shifted(double tau) const {
  CheckTime(tau, "shift");
  if (tau == 0.0) return *this;
  std::vector<double> bp{0.0};
  std::vector<double> val{At(tau)};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] > tau) {
      bp.push_back(breakpoints_[i] - tau);
      val.push_back(values_[i]);
    }
  }
  return PiecewiseTrace(Unchecked{}, std::move(bp), std::move(val));
}

PiecewiseTrace PiecewiseTrace::Spliced(double h,
                                       const PiecewiseTrace& next) const {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError(fmt::format("splice time must be > 0, got {}", h));
  }
  std::vector<double> bp;
  std::vector<double> val;
  for (std::size_t i = 0; i < breakpoints_.size() && breakpoints_[i] < h;
       ++i) {
    bp.push_back(breakpoints_[i]);
    val.push_back(values_[i]);
  }
  for (std::size_t i = 0; i < next.breakpoints_.size(); ++i) {
    bp.push_back(next.breakpoints_[i] + h);
    val.push_back(next.values_[i]);
  }
  return PiecewiseTrace(Unchecked{}, std::move(bp), std::move(val));
}

double PiecewiseTrace::MeasureOfLevel(double level, double horizon) const {
  CheckTime(horizon, "horizon");
  double total = 0.0;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (values_[i] != level || breakpoints_[i] >= horizon) continue;
    const double end = i + 1 < breakpoints_.size()
                           ? std::min(breakpoints_[i + 1], horizon)
                           : horizon;
    total += end - breakpoints_[i];
  }
  return total;
}

// -------------------------------------------------- ProcessDescriptor

ProcessDescriptor ProcessDescriptor::A(State omega) {
  return ProcessDescriptor(DescA{std::move(omega)});
}

ProcessDescriptor ProcessDescriptor::B(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw DomainError(fmt::format("b_s needs finite s >= 0, got {}", s));
  }
  return ProcessDescriptor(DescB{s});
}

ProcessDescriptor ProcessDescriptor::BConcatA(double s, double tau) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw DomainError(fmt::format("b_s needs finite s >= 0, got {}", s));
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError(
        fmt::format("splice time tau must be finite and > 0, got {}", tau));
  }
  return ProcessDescriptor(DescBConcatA{s, tau});
}

ProcessDescriptor ProcessDescriptor::Opaque(std::string id) {
  return ProcessDescriptor(DescOpaque{std::move(id)});
}

std::string ProcessDescriptor::ToString() const {
  struct Printer {
    std::string operator()(const DescA& d) const {
      return fmt::format("A(omega={})", d.omega.ToString());
    }
    std::string operator()(const DescB& d) const {
      return fmt::format("B(s={})", d.s);
    }
    std::string operator()(const DescBConcatA& d) const {
      return fmt::format("BConcatA(s={},tau={})", d.s, d.tau);
    }
    std::string operator()(const DescOpaque& d) const {
      return fmt::format("Opaque({})", d.id);
    }
  };
  return std::visit(Printer{}, form_);
}

Evaluator StructuralEvaluator(const ProcessDescriptor& d) {
  if (const auto* a = d.get_if<DescA>()) {
    return [omega = a->omega](double t) { return Advance(omega, t); };
  }
  if (const auto* b = d.get_if<DescB>()) {
    return [s = b->s](double t) { return State{s * t, t, 0.0}; };
  }
  if (const auto* ba = d.get_if<DescBConcatA>()) {
    return [s = ba->s, tau = ba->tau](double t) {
      if (t < tau) return State{s * t, t, 0.0};
      return State{s * tau, tau, t - tau};
    };
  }
  throw PreconditionError("opaque descriptor has no structural evaluator");
}

// -------------------------------------------------------------- Process

Process::Process(ProcessDescriptor descriptor, Evaluator eval,
                 PiecewiseTrace trace)
    : descriptor_(std::move(descriptor)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))),
      trace_(std::move(trace)) {}

State Process::At(double t) const {
  CheckTime(t, "process time");
  return (*eval_)(t);
}

EndpointMismatch::EndpointMismatch(State end, State start)
    : PreconditionError(fmt::format(
          "concatenation endpoint mismatch: z(h) = {} but z'(0) = {}",
          end.ToString(), start.ToString())),
      end_(std::move(end)),
      start_(std::move(start)) {}

Process Concatenate(const Process& z, double h, const Process& z2) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError(
        fmt::format("concatenation time must be finite and > 0, got {}", h));
  }
  const bool structural =
      !z.descriptor().is_opaque() && !z2.descriptor().is_opaque();
  State end = z.At(h);
  State start = z2.initial();
  if (!EndpointsMatch(end, start, structural)) {
    throw EndpointMismatch(std::move(end), std::move(start));
  }
  PiecewiseTrace trace = z.trace().Spliced(h, z2.trace());
  if (structural) {
    if (auto d = CanonicalConcat(z.descriptor(), h, z2.descriptor())) {
      Evaluator eval = StructuralEvaluator(*d);
      return Process(std::move(*d), std::move(eval), std::move(trace));
    }
  }
  ProcessDescriptor d = ProcessDescriptor::Opaque(
      fmt::format("concat({}, h={}, {})", z.descriptor().ToString(), h,
                  z2.descriptor().ToString()));
  Evaluator eval = [z, h, z2](double t) {
    return t < h ? z.At(t) : z2.At(t - h);
  };
  return Process(std::move(d), std::move(eval), std::move(trace));
}

Process Shift(const Process& z, double tau) {
  CheckTime(tau, "shift");
  if (tau == 0.0) return z;
  PiecewiseTrace trace = z.trace().Shifted(tau);
  if (auto d = CanonicalShift(z.descriptor(), tau)) {
    Evaluator eval = StructuralEvaluator(*d);
    return Process(std::move(*d), std::move(eval), std::move(trace));
  }
  ProcessDescriptor d = ProcessDescriptor::Opaque(
      fmt::format("shift({}, tau={})", z.descriptor().ToString(), tau));
  Evaluator eval = [z, tau](double t) { return z.At(t + tau); };
  return Process(std::move(d), std::move(eval), std::move(trace));
}

// ---------------------------------------------------- families, systems

bool Axis::is_ray() const { return std::isinf(hi); }

bool Axis::Contains(double p) const {
  if (std::isnan(p)) return false;
  if (lo_open ? !(p > lo) : !(p >= lo)) return false;
  return is_ray() ? std::isfinite(p) : p <= hi;
}

Process ProcessFamily::Build(const Parameter& p) const {
  if (p.size() != axes.size()) {
    throw DomainError(fmt::format("family '{}' takes {} parameters, got {}",
                                  label, axes.size(), p.size()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!axes[i].Contains(p[i])) {
      throw DomainError(fmt::format("parameter {} of family '{}' out of domain",
                                    p[i], label));
    }
  }
  Process z = build(p);
  if (z.initial() != anchor) {
    throw ContractViolation(fmt::format(
        "family '{}' built a process starting at {} instead of {}", label,
        z.initial().ToString(), anchor.ToString()));
  }
  return z;
}

void ControlSystem::CheckState(const State& omega) const {
  if (omega.dim() != state_dim) {
    throw DomainError(fmt::format("system '{}' has state dimension {}, got {}",
                                  name, state_dim, omega.dim()));
  }
}

double ControlSystem::Cost(const State& omega) const {
  CheckState(omega);
  const double c = cost(omega);
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ContractViolation(fmt::format(
        "running cost of '{}' left [0,1]: g{} = {}", name, omega.ToString(),
        c));
  }
  return c;
}

}  // namespace tauberian
