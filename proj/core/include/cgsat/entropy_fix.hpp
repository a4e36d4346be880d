#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cgsat/spatial.hpp"

namespace cgsat {

/// Below this value of sum (V_s - mean V)^2 the correction is switched off.
inline constexpr double kCorrectionDegeneracyThreshold = 1e-14;

/// Entropy correction of one element: r_s = alpha (V_s - mean V) with
/// alpha = E / sum (V_s - mean V)^2, so that sum r_s = 0 and
/// sum V_s r_s = E.
struct CorrectionReport {
  double entropy_error = 0.0;
  double alpha = 0.0;
  double mean_entropy_variable = 0.0;
  bool degenerate = false;
  std::vector<double> correction;
};

/// E = oint_{dK} g(V_h).n - sum_s V_s Phi_s, using the operator's entropy edge rule
/// for the entropy-flux trace. `residual` must belong to the same state.
double element_entropy_error(const SpatialOperator& op, std::size_t element, std::span<const double> state,
                             const ElementResidual& residual);

/// Builds r from the element's entropy variables and its entropy error.
CorrectionReport correction_term(std::span<const double> entropy_variables, double entropy_error);

/// Phi_hat_s = Phi_s + r_s.
std::vector<double> corrected_residual(const ElementResidual& residual, const CorrectionReport& correction);

/// Entropy variables of one element's coefficients.
std::vector<double> element_entropy_variables(const SpatialOperator& op, std::size_t element,
                                              std::span<const double> state);

}  // namespace cgsat
