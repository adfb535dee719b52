#ifndef TAUBERIAN_SYSTEMS_H_
#define TAUBERIAN_SYSTEMS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "tauberian/core.h"

namespace tauberian {

// The counterexample: states (x, y, r), cost 0 iff x in [1,2] and r = 0,
// feasible set {a_omega} u {b_s} u {b_s <>_tau a_{b_s(tau)}}.
ControlSystem PaperSystem();

// One-dimensional system with z_omega(t) = omega + t and cost 1 on u < 1,
// 0 afterwards. Closed under both concatenation and shift.
ControlSystem SanitySystem();

// Lookup by CLI name ("paper", "sanity").
std::optional<ControlSystem> SystemByName(std::string_view name);

// Cost traces of the paper system's structural processes. a_omega is
// stored as constant 1 even when g(a_omega(0)) = 0: that dip is a single
// instant and does not change any integral.
PiecewiseTrace PaperTrace(const ProcessDescriptor& d);

// Built processes of the paper system.
Process PaperProcess(const ProcessDescriptor& d);

// Built process z_omega of the sanity system.
Process SanityProcess(double omega);

// Default witness states used by sweeps.
std::vector<State> DefaultStates(const ControlSystem& system);

}  // namespace tauberian

#endif  // TAUBERIAN_SYSTEMS_H_
