#include "tauberian/closure.h"

#include <cmath>
#include <random>
#include <utility>

#include <fmt/format.h>

namespace tauberian {
namespace {

// Splice/shift times use their own stream so that they do not depend on how
// many draws a system's generator sampler consumes.
constexpr std::uint64_t kTimeStreamSalt = 0x9e3779b97f4a7c15ULL;
constexpr int kDrawsPerFamily = 3;

double DrawTime(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(std::log(kMinProbeTime),
                                           std::log(kMaxProbeTime));
  return std::exp(u(rng));
}

double DrawOnAxis(std::mt19937_64& rng, const Axis& axis) {
  if (axis.is_ray()) {
    const double base = axis.lo > 0.0 ? axis.lo : 0.0;
    return base + DrawTime(rng);
  }
  std::uniform_real_distribution<double> u(axis.lo, axis.hi);
  const double p = u(rng);
  return axis.Contains(p) ? p : axis.hi;
}

// Processes of Gamma(omega) probed by the concatenation check: the whole
// family when it is a singleton, kDrawsPerFamily random members otherwise.
std::vector<Process> EnumerateFeasible(const ControlSystem& system,
                                       const State& omega,
                                       std::mt19937_64& rng) {
  std::vector<Process> out;
  for (const ProcessFamily& family : system.feasible(omega)) {
    if (family.axes.empty()) {
      out.push_back(family.Build({}));
      continue;
    }
    for (int k = 0; k < kDrawsPerFamily; ++k) {
      Parameter p;
      for (const Axis& axis : family.axes) p.push_back(DrawOnAxis(rng, axis));
      out.push_back(family.Build(p));
    }
  }
  return out;
}

void CheckCount(std::size_t n) {
  if (n == 0) throw DomainError("closure checks need at least one sample");
}

void Finalize(ClosureReport& report) {
  if (report.status == ClosureStatus::kPass) {
    report.note = fmt::format("no counterexample found in {} samples",
                              report.samples_checked);
  } else {
    report.note = fmt::format("counterexample found ({} witness{} kept)",
                              report.witnesses.size(),
                              report.witnesses.size() == 1 ? "" : "es");
  }
}

}  // namespace

bool StructuralMember(const ControlSystem& system, const ProcessDescriptor& d) {
  return system.member(d);
}

ClosureReport CheckConcatClosure(const ControlSystem& system,
                                 std::uint64_t seed, std::size_t n) {
  CheckCount(n);
  ClosureReport report{.property = ClosureProperty::kConcat};
  std::mt19937_64 rng(seed ^ kTimeStreamSalt);
  const std::vector<Process> generators = system.sample_generators(seed, n);
  for (const Process& z : generators) {
    const double h = DrawTime(rng);
    for (const Process& next : EnumerateFeasible(system, z.At(h), rng)) {
      const Process joined = Concatenate(z, h, next);
      if (StructuralMember(system, joined.descriptor())) continue;
      report.status = ClosureStatus::kFail;
      if (report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back(ClosureWitness{
            ClosureProperty::kConcat, z, next, h, joined.descriptor(),
            fmt::format("{} <>_{} {} gives {}, not in K",
                        z.descriptor().ToString(), h,
                        next.descriptor().ToString(),
                        joined.descriptor().ToString())});
      }
    }
    ++report.samples_checked;
  }
  Finalize(report);
  return report;
}

ClosureReport CheckShiftClosure(const ControlSystem& system,
                                std::uint64_t seed, std::size_t n) {
  CheckCount(n);
  ClosureReport report{.property = ClosureProperty::kShift};
  std::mt19937_64 rng(seed ^ kTimeStreamSalt);
  const std::vector<Process> generators = system.sample_generators(seed, n);
  for (const Process& z : generators) {
    const double tau = DrawTime(rng);
    const Process shifted = Shift(z, tau);
    ++report.samples_checked;
    if (StructuralMember(system, shifted.descriptor())) continue;
    report.status = ClosureStatus::kFail;
    if (report.witnesses.size() < kMaxWitnesses) {
      report.witnesses.push_back(ClosureWitness{
          ClosureProperty::kShift, z, std::nullopt, tau, shifted.descriptor(),
          fmt::format("{} shifted by tau={} gives {}, not in K",
                      z.descriptor().ToString(), tau,
                      shifted.descriptor().ToString())});
    }
  }
  Finalize(report);
  return report;
}

bool ReplayWitness(const ControlSystem& system, const ClosureWitness& w) {
  if (w.property == ClosureProperty::kShift) {
    return !StructuralMember(system, Shift(w.first, w.time).descriptor());
  }
  if (!w.second) return false;
  return !StructuralMember(system,
                           Concatenate(w.first, w.time, *w.second).descriptor());
}

std::string ToString(ClosureProperty p) {
  return p == ClosureProperty::kConcat ? "concat" : "shift";
}

std::string ToString(ClosureStatus s) {
  return s == ClosureStatus::kPass ? "pass" : "fail";
}

}  // namespace tauberian
