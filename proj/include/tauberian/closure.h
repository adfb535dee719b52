#ifndef TAUBERIAN_CLOSURE_H_
#define TAUBERIAN_CLOSURE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tauberian/core.h"

namespace tauberian {

enum class ClosureProperty { kConcat, kShift };
enum class ClosureStatus { kPass, kFail };

// A reproducible failure: `first` shifted by `time` (kShift), or `first`
// concatenated at `time` with `*second` (kConcat), is not in K.
struct ClosureWitness {
  ClosureProperty property;
  Process first;
  std::optional<Process> second;
  double time = 0.0;
  ProcessDescriptor result;
  std::string explanation;
};

struct ClosureReport {
  ClosureProperty property;
  ClosureStatus status = ClosureStatus::kPass;
  std::vector<ClosureWitness> witnesses{};
  std::size_t samples_checked = 0;
  // Human-readable summary; a pass reads "no counterexample found in n
  // samples" since sampling is not a proof.
  std::string note{};
};

inline constexpr std::size_t kMaxWitnesses = 10;
// Shift and splice times are drawn log-uniformly from this range.
inline constexpr double kMinProbeTime = 1e-3;
inline constexpr double kMaxProbeTime = 1e3;

bool StructuralMember(const ControlSystem& system, const ProcessDescriptor& d);

// Draws n generators with a splice time each and concatenates every
// enumerated process feasible from the splice state.
ClosureReport CheckConcatClosure(const ControlSystem& system,
                                 std::uint64_t seed, std::size_t n);

// Draws n generators with a shift time each and tests the shifted process.
ClosureReport CheckShiftClosure(const ControlSystem& system,
                                std::uint64_t seed, std::size_t n);

// Re-runs the operation recorded in the witness. True iff the result is
// still not a member.
bool ReplayWitness(const ControlSystem& system, const ClosureWitness& w);

std::string ToString(ClosureProperty p);
std::string ToString(ClosureStatus s);

}  // namespace tauberian

#endif  // TAUBERIAN_CLOSURE_H_
