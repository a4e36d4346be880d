#include "cgsat/entropy_fix.hpp"

#include "cgsat/errors.hpp"

namespace cgsat {

std::vector<double> element_entropy_variables(const SpatialOperator& op, std::size_t element,
                                              std::span<const double> state) {
  std::vector<double> v(op.basis().size());
  op.gather(element, state, v);
  for (auto& x : v) x = op.law().entropy_variable(x);
  return v;
}

double element_entropy_error(const SpatialOperator& op, std::size_t element, std::span<const double> state,
                             const ElementResidual& residual) {
  const auto v = element_entropy_variables(op, element, state);
  if (residual.per_dof.size() != v.size()) throw ValidationError("residual does not match element size");
  double production = 0.0;
  for (std::size_t s = 0; s < v.size(); ++s) production += v[s] * residual.per_dof[s];
  return op.boundary_entropy_flux(element, state) - production;
}

CorrectionReport correction_term(std::span<const double> entropy_variables, double entropy_error) {
  CorrectionReport rep;
  rep.entropy_error = entropy_error;
  const std::size_t n = entropy_variables.size();
  rep.correction.assign(n, 0.0);
  if (n == 0) {
    rep.degenerate = true;
    return rep;
  }
  double mean = 0.0;
  for (double v : entropy_variables) mean += v;
  mean /= static_cast<double>(n);
  rep.mean_entropy_variable = mean;

  // Deviations are re-centred once more so that their sum vanishes to rounding
  // even when alpha is large.
  std::vector<double> dev(n);
  double drift = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    dev[s] = entropy_variables[s] - mean;
    drift += dev[s];
  }
  drift /= static_cast<double>(n);
  double spread = 0.0;
  for (auto& d : dev) {
    d -= drift;
    spread += d * d;
  }
  if (spread < kCorrectionDegeneracyThreshold) {
    rep.degenerate = true;
    return rep;
  }
  rep.alpha = entropy_error / spread;
  for (std::size_t s = 0; s < n; ++s) rep.correction[s] = rep.alpha * dev[s];
  return rep;
}

std::vector<double> corrected_residual(const ElementResidual& residual, const CorrectionReport& correction) {
  if (residual.per_dof.size() != correction.correction.size()) {
    throw ValidationError("correction does not match element size");
  }
  std::vector<double> out(residual.per_dof);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] += correction.correction[s];
  return out;
}

}  // namespace cgsat
