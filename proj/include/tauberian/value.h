#ifndef TAUBERIAN_VALUE_H_
#define TAUBERIAN_VALUE_H_

#include <cstddef>
#include <functional>
#include <string>

#include "tauberian/core.h"

namespace tauberian {

struct ValueResult {
  double value = 1.0;
  Parameter minimizer;
  std::string family_label;
  std::size_t family_index = 0;
  std::size_t evaluations = 0;
  // Width of the final refinement bracket in parameter units (0 when the
  // family is a singleton).
  double achieved_tol = 0.0;
};

using Objective = std::function<double(const Parameter&)>;

// Number of coarse scan points per axis.
inline constexpr std::size_t kScanPoints1d = 129;
inline constexpr std::size_t kScanPoints2d = 65;
inline constexpr int kCoordinateRounds = 3;

// Scan points of one axis in increasing order: uniform on a finite interval,
// log-uniform over [1e-6, 1e6] (relative to lo when lo > 0) on a ray, always
// including lo unless the axis is open there.
std::vector<double> ScanGrid(const Axis& axis, std::size_t count);

// Best value of `objective` over the family's domain: coarse scan, then
// golden-section refinement of the best bracket down to width tol (relative
// width on rays away from 0). Ties go to the smallest parameter. Throws
// DomainError for tol <= 0 and ContractViolation if the objective leaves
// [0,1] by more than 1e-9.
ValueResult MinimizeOverFamily(const Objective& objective,
                               const ProcessFamily& family, double tol);

// inf over Gamma(omega) of the time average over [0, T]. Families are tried
// in order; a later family replaces the incumbent only when it is better by
// more than tol. Throws DomainError when Gamma(omega) is empty.
ValueResult ValueTime(const ControlSystem& system, const State& omega,
                      double horizon, double tol);

// inf over Gamma(omega) of the discounted average with rate lambda.
ValueResult ValueDiscounted(const ControlSystem& system, const State& omega,
                            double lambda, double tol);

}  // namespace tauberian

#endif  // TAUBERIAN_VALUE_H_
