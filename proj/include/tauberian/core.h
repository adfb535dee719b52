#ifndef TAUBERIAN_CORE_H_
#define TAUBERIAN_CORE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tauberian/errors.h"

namespace tauberian {

// A point of the state space: a fixed-length vector of nonnegative reals.
class State {
 public:
  State() = default;
  explicit State(std::vector<double> coords);
  State(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  bool IsOrigin() const;

  bool operator==(const State&) const = default;

  // "(x,y,r)" with shortest round-trip formatting.
  std::string ToString() const;

 private:
  std::vector<double> coords_;
};

// Cost history t -> g(z(t)) as a piecewise-constant function. Piece i holds
// values[i] on [breakpoints[i], breakpoints[i+1]); the last piece extends to
// infinity. Stored in canonical form: adjacent pieces have distinct values and
// no piece is narrower than kMergeThreshold.
class PiecewiseTrace {
 public:
  static constexpr double kMergeThreshold = 1e-15;

  // Constant trace c on [0, inf).
  static PiecewiseTrace Constant(double c);

  // Throws DomainError unless breakpoints start at 0, strictly increase, are
  // finite, values lie in [0,1] and both lists have equal length.
  PiecewiseTrace(std::vector<double> breakpoints, std::vector<double> values);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  // Start of the infinite last piece.
  double tail_start() const { return breakpoints_.back(); }
  double tail_value() const { return values_.back(); }

  // Value at time t >= 0.
  double At(double t) const;

  // Trace with the first tau time units removed: t -> At(t + tau).
  PiecewiseTrace Shifted(double tau) const;

  // This trace on [0, h), then `next` restarted at h.
  PiecewiseTrace Spliced(double h, const PiecewiseTrace& next) const;

  // Lebesgue measure of {t in [0, horizon] : At(t) == level}.
  double MeasureOfLevel(double level, double horizon) const;

  bool operator==(const PiecewiseTrace&) const = default;

 private:
  struct Unchecked {};
  PiecewiseTrace(Unchecked, std::vector<double> breakpoints,
                 std::vector<double> values);
  void Canonicalize();

  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

// a_omega: last coordinate advances with time, t -> (x, y, r + t).
struct DescA {
  State omega;
  bool operator==(const DescA&) const = default;
};
// b_s: t -> (s t, t, 0).
struct DescB {
  double s = 0.0;
  bool operator==(const DescB&) const = default;
};
// b_s followed by a_{b_s(tau)} from time tau on.
struct DescBConcatA {
  double s = 0.0;
  double tau = 0.0;
  bool operator==(const DescBConcatA&) const = default;
};
// Anything without a structural form; id records provenance.
struct DescOpaque {
  std::string id;
  bool operator==(const DescOpaque&) const = default;
};

// Structural description of a trajectory. The A/B/BConcatA forms have fixed
// meaning independent of the owning system; B and BConcatA are 3-dimensional.
class ProcessDescriptor {
 public:
  using Variant = std::variant<DescA, DescB, DescBConcatA, DescOpaque>;

  // Throws DomainError on s < 0, tau <= 0 or non-finite parameters.
  static ProcessDescriptor A(State omega);
  static ProcessDescriptor B(double s);
  static ProcessDescriptor BConcatA(double s, double tau);
  static ProcessDescriptor Opaque(std::string id);

  const Variant& form() const { return form_; }
  bool is_opaque() const { return std::holds_alternative<DescOpaque>(form_); }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&form_);
  }

  std::string ToString() const;
  bool operator==(const ProcessDescriptor&) const = default;

 private:
  explicit ProcessDescriptor(Variant form) : form_(std::move(form)) {}
  Variant form_;
};

using Evaluator = std::function<State(double)>;

// Evaluator of a structural descriptor. Throws PreconditionError for Opaque.
Evaluator StructuralEvaluator(const ProcessDescriptor& d);

// A feasible trajectory together with its cost trace. Immutable; copies share
// the evaluator.
class Process {
 public:
  Process(ProcessDescriptor descriptor, Evaluator eval, PiecewiseTrace trace);

  const ProcessDescriptor& descriptor() const { return descriptor_; }
  const PiecewiseTrace& trace() const { return trace_; }
  State initial() const { return At(0.0); }

  // Throws DomainError for t < 0 or non-finite t.
  State At(double t) const;

 private:
  ProcessDescriptor descriptor_;
  std::shared_ptr<const Evaluator> eval_;
  PiecewiseTrace trace_;
};

// z on [0, h), then z2 restarted at h. Requires z(h) == z2(0): exactly when
// both are structural, within 1e-12 per coordinate otherwise. Throws
// DomainError for h <= 0 and EndpointMismatch on mismatch.
Process Concatenate(const Process& z, double h, const Process& z2);

// t -> z(t + tau). Throws DomainError for tau < 0.
Process Shift(const Process& z, double tau);

class EndpointMismatch : public PreconditionError {
 public:
  EndpointMismatch(State end, State start);
  const State& end() const { return end_; }
  const State& start() const { return start_; }

 private:
  State end_;
  State start_;
};

// One axis of a family's parameter domain: [lo, hi] or a ray [lo, inf) when
// hi is infinite. lo_open excludes lo itself.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;

  bool is_ray() const;
  bool Contains(double p) const;
};

using Parameter = std::vector<double>;

// A parameterized slice of Gamma(anchor). An empty axis list is a singleton
// family built from the empty parameter.
struct ProcessFamily {
  std::string label;
  State anchor;
  std::vector<Axis> axes;
  std::function<Process(const Parameter&)> build;

  // Builds and checks that the process starts at the anchor.
  Process Build(const Parameter& p) const;
};

// The triple (state space, feasible set, running cost) plus the hooks the
// closure checks need.
struct ControlSystem {
  std::string name;
  std::size_t state_dim = 0;
  std::function<double(const State&)> cost;
  std::function<std::vector<ProcessFamily>(const State&)> feasible;
  std::function<bool(const ProcessDescriptor&)> member;
  std::function<std::vector<Process>(std::uint64_t seed, std::size_t count)>
      sample_generators;

  // Throws DomainError if the state has the wrong dimension.
  void CheckState(const State& omega) const;
  // Cost with its [0,1] range enforced (ContractViolation otherwise).
  double Cost(const State& omega) const;
};

}  // namespace tauberian

#endif  // TAUBERIAN_CORE_H_
