#ifndef TAUBERIAN_AVERAGES_H_
#define TAUBERIAN_AVERAGES_H_

#include <functional>
#include <span>

#include "tauberian/core.h"

namespace tauberian {

enum class AverageMethod { kExact, kQuadrature };

struct AverageValue {
  double value = 0.0;
  AverageMethod method = AverageMethod::kExact;
  double abs_error_bound = 0.0;
};

// Time average (1/T) * integral_0^T trace(t) dt, computed exactly from the
// pieces. Throws DomainError for T <= 0.
AverageValue TimeAverage(const PiecewiseTrace& trace, double horizon);

// Discounted average lambda * integral_0^inf exp(-lambda t) trace(t) dt,
// computed exactly from the pieces. Throws DomainError for lambda <= 0.
AverageValue DiscountedAverage(const PiecewiseTrace& trace, double lambda);

// lambda * integral_0^inf exp(-lambda t) cost(t) dt for a general [0,1]-valued
// cost. The integral is truncated at ln(2/eps)/lambda (tail <= eps/2) and the
// rest is integrated by globally adaptive Simpson with budget eps/2. Known
// discontinuities may be passed in `breakpoints` to seed the panels.
//
// Throws DomainError unless lambda > 0 and 0 < eps < 1, ContractViolation if
// cost leaves [0,1], and NumericalError (carrying the offending panel) if a
// panel needs refinement beyond depth 40.
AverageValue DiscountedAverageQuadrature(
    const std::function<double(double)>& cost, double lambda, double eps,
    std::span<const double> breakpoints = {});

}  // namespace tauberian

#endif  // TAUBERIAN_AVERAGES_H_
