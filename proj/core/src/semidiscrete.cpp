#include "cgsat/semidiscrete.hpp"

#include <cmath>
#include <string>

#include "cgsat/entropy_fix.hpp"
#include "cgsat/errors.hpp"

namespace cgsat {

SemiDiscretization::SemiDiscretization(const SpatialOperator& op, const MassSolver& mass, SchemeOptions options)
    : op_(&op), mass_(&mass), options_(options) {
  if (mass.size() != op.mesh().num_dofs()) throw ValidationError("mass matrix does not match the mesh");
  if (options_.sat) validate(*options_.sat);
}

std::vector<double> SemiDiscretization::residual(std::span<const double> state, CorrectionStats* stats) const {
  const auto& mesh = op_->mesh();
  std::vector<double> out(mesh.num_dofs(), 0.0);
  CorrectionStats local_stats;
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    auto res = op_->element_residual(k, state);
    if (options_.correction) {
      const double err = element_entropy_error(*op_, k, state, res);
      const auto rep = correction_term(element_entropy_variables(*op_, k, state), err);
      local_stats.max_abs_entropy_error = std::max(local_stats.max_abs_entropy_error, std::abs(err));
      if (rep.degenerate) ++local_stats.degenerate_elements;
      for (std::size_t s = 0; s < res.per_dof.size(); ++s) res.per_dof[s] += rep.correction[s];
    }
    const auto dofs = mesh.element_dofs(k);
    for (std::size_t s = 0; s < dofs.size(); ++s) {
      if (!std::isfinite(res.per_dof[s])) throw NumericalError("non-finite residual in element " + std::to_string(k));
      out[dofs[s]] -= res.per_dof[s];
    }
  }
  if (options_.sat) {
    const auto sat = sat_contribution(*op_, state, *options_.sat);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += sat[i];
  }
  if (stats) *stats = local_stats;
  return out;
}

void SemiDiscretization::operator()(std::span<const double> state, std::span<double> dudt) const {
  const auto r = residual(state);
  mass_->solve(r, dudt);
}

}  // namespace cgsat
