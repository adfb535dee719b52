#include "tauberian/systems.h"

#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include <fmt/format.h>

namespace tauberian {
namespace {

double PaperCost(const State& w) {
  const double x = w[0];
  const double r = w[2];
  return (x >= 1.0 && x <= 2.0 && r == 0.0) ? 0.0 : 1.0;
}

double SanityCost(const State& w) { return w[0] < 1.0 ? 1.0 : 0.0; }

ProcessFamily Singleton(std::string label, State anchor,
                        std::function<Process()> make) {
  ProcessFamily f;
  f.label = std::move(label);
  f.anchor = std::move(anchor);
  f.build = [make = std::move(make)](const Parameter&) { return make(); };
  return f;
}

std::vector<ProcessFamily> PaperFeasible(const State& omega) {
  std::vector<ProcessFamily> families;
  families.push_back(Singleton("a", omega, [omega] {
    return PaperProcess(ProcessDescriptor::A(omega));
  }));
  if (!omega.IsOrigin()) return families;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  ProcessFamily b;
  b.label = "b";
  b.anchor = omega;
  b.axes = {Axis{0.0, kInf, false}};
  b.build = [](const Parameter& p) {
    return PaperProcess(ProcessDescriptor::B(p[0]));
  };
  families.push_back(std::move(b));

  ProcessFamily ba;
  ba.label = "b<>a";
  ba.anchor = omega;
  ba.axes = {Axis{0.0, kInf, false}, Axis{0.0, kInf, true}};
  ba.build = [](const Parameter& p) {
    return PaperProcess(ProcessDescriptor::BConcatA(p[0], p[1]));
  };
  families.push_back(std::move(ba));
  return families;
}

bool PaperMember(const ProcessDescriptor& d) {
  if (const auto* a = d.get_if<DescA>()) return a->omega.dim() == 3;
  // B and BConcatA enforce s >= 0 and tau > 0 on construction.
  return d.get_if<DescB>() != nullptr || d.get_if<DescBConcatA>() != nullptr;
}

double LogUniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

std::vector<Process> PaperGenerators(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 3.0);
  std::uniform_int_distribution<int> coin(0, 9);
  std::vector<Process> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 3) {
      case 0: {
        const double x = coord(rng);
        const double y = coord(rng);
        // Half of the a-generators sit on the r = 0 plane.
        const double r = coin(rng) < 5 ? 0.0 : coord(rng);
        out.push_back(PaperProcess(ProcessDescriptor::A(State{x, y, r})));
        break;
      }
      case 1: {
        const double s = coin(rng) == 0 ? 0.0 : LogUniform(rng, 1e-3, 1e3);
        out.push_back(PaperProcess(ProcessDescriptor::B(s)));
        break;
      }
      default: {
        const double s = coin(rng) == 0 ? 0.0 : LogUniform(rng, 1e-3, 1e3);
        const double tau = LogUniform(rng, 1e-3, 1e3);
        out.push_back(PaperProcess(ProcessDescriptor::BConcatA(s, tau)));
        break;
      }
    }
  }
  return out;
}

std::vector<Process> SanityGenerators(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 3.0);
  std::vector<Process> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(SanityProcess(coord(rng)));
  }
  return out;
}

}  // namespace

PiecewiseTrace PaperTrace(const ProcessDescriptor& d) {
  if (d.get_if<DescA>()) return PiecewiseTrace::Constant(1.0);
  if (const auto* b = d.get_if<DescB>()) {
    // g(b_s(t)) = 0 iff s t in [1,2], i.e. t in [1/s, 2/s].
    const double enter = 1.0 / b->s;
    const double leave = 2.0 / b->s;
    if (b->s == 0.0 || !std::isfinite(leave)) {
      return PiecewiseTrace::Constant(1.0);
    }
    return PiecewiseTrace({0.0, enter, leave}, {1.0, 0.0, 1.0});
  }
  if (const auto* ba = d.get_if<DescBConcatA>()) {
    return PaperTrace(ProcessDescriptor::B(ba->s))
        .Spliced(ba->tau, PiecewiseTrace::Constant(1.0));
  }
  throw PreconditionError(
      fmt::format("no paper-system trace for {}", d.ToString()));
}

Process PaperProcess(const ProcessDescriptor& d) {
  return Process(d, StructuralEvaluator(d), PaperTrace(d));
}

Process SanityProcess(double omega) {
  const ProcessDescriptor d = ProcessDescriptor::A(State{omega});
  PiecewiseTrace trace = omega < 1.0
                             ? PiecewiseTrace({0.0, 1.0 - omega}, {1.0, 0.0})
                             : PiecewiseTrace::Constant(0.0);
  return Process(d, StructuralEvaluator(d), std::move(trace));
}

ControlSystem PaperSystem() {
  ControlSystem sys;
  sys.name = "paper";
  sys.state_dim = 3;
  sys.cost = PaperCost;
  sys.feasible = PaperFeasible;
  sys.member = PaperMember;
  sys.sample_generators = PaperGenerators;
  return sys;
}

ControlSystem SanitySystem() {
  ControlSystem sys;
  sys.name = "sanity";
  sys.state_dim = 1;
  sys.cost = SanityCost;
  sys.feasible = [](const State& omega) {
    return std::vector<ProcessFamily>{
        Singleton("z", omega, [w = omega[0]] { return SanityProcess(w); })};
  };
  sys.member = [](const ProcessDescriptor& d) {
    const auto* a = d.get_if<DescA>();
    return a != nullptr && a->omega.dim() == 1;
  };
  sys.sample_generators = SanityGenerators;
  return sys;
}

std::optional<ControlSystem> SystemByName(std::string_view name) {
  if (name == "paper") return PaperSystem();
  if (name == "sanity") return SanitySystem();
  return std::nullopt;
}

std::vector<State> DefaultStates(const ControlSystem& system) {
  if (system.name == "paper") {
    return {State{0, 0, 0}, State{1, 1, 1}, State{1.5, 0, 0},
            State{0.5, 3, 0}};
  }
  if (system.name == "sanity") {
    return {State{0.0}, State{0.5}, State{1.0}, State{2.0}};
  }
  throw DomainError(
      fmt::format("no default states for system '{}'", system.name));
}

}  // namespace tauberian
