#include "cgsat/diagnostics.hpp"

#include <algorithm>

#include "cgsat/errors.hpp"
#include "cgsat/quadrature.hpp"

namespace cgsat {

double entropy_integral(const Mesh& mesh, const Basis& basis, const ConservationLaw& law,
                        std::span<const double> state, int order) {
  if (state.size() != mesh.num_dofs()) throw ValidationError("state length does not match the mesh");
  const auto& rule = triangle_rule(order);
  const Tabulation table(basis, rule.points);
  double total = 0.0;
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const auto dofs = mesh.element_dofs(k);
    const double jac = 2.0 * mesh.geometry(k).area();
    double element_sum = 0.0;
    for (std::size_t q = 0; q < table.num_points(); ++q) {
      const auto phi = table.values(q);
      double u = 0.0;
      for (std::size_t s = 0; s < dofs.size(); ++s) u += phi[s] * state[dofs[s]];
      element_sum += rule.weights[q] * law.entropy(u);
    }
    total += jac * element_sum;
  }
  return total;
}

double entropy_change(std::span<const double> state_t, std::span<const double> state_0, const Mesh& mesh,
                      const Basis& basis, const ConservationLaw& law, int order) {
  if (std::equal(state_t.begin(), state_t.end(), state_0.begin(), state_0.end())) return 0.0;
  return entropy_integral(mesh, basis, law, state_t, order) - entropy_integral(mesh, basis, law, state_0, order);
}

double mass_norm_squared(const MassMatrix& mass, std::span<const double> state) {
  const auto mu = multiply(mass, state);
  double sum = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) sum += state[i] * mu[i];
  return sum;
}

}  // namespace cgsat
