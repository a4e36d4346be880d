#include "cgsat/interpolation.hpp"

#include <Eigen/Dense>

#include "cgsat/errors.hpp"

namespace cgsat {
namespace {

void check(const Mesh& mesh, const Basis& basis) {
  if (mesh.degree() != basis.degree()) throw ConfigError("basis degree does not match mesh degree");
}

}  // namespace

std::vector<double> interpolate(const Mesh& mesh, const Basis& basis, const std::function<double(Vec2)>& f) {
  check(mesh, basis);
  const auto coords = mesh.dof_coordinates();
  std::vector<double> nodal(mesh.num_dofs());
  for (std::size_t i = 0; i < nodal.size(); ++i) nodal[i] = f(coords[i]);
  if (basis.family() == BasisFamily::lagrange) return nodal;

  const auto n = static_cast<Eigen::Index>(basis.size());
  const auto pts = basis.reference_points();
  Eigen::MatrixXd vandermonde(n, n);
  std::vector<double> row(basis.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    basis.eval(pts[static_cast<std::size_t>(i)], row);
    for (Eigen::Index j = 0; j < n; ++j) vandermonde(i, j) = row[static_cast<std::size_t>(j)];
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(vandermonde);

  std::vector<double> coeffs(mesh.num_dofs(), 0.0);
  std::vector<bool> done(mesh.num_dofs(), false);
  Eigen::VectorXd values(n);
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const auto dofs = mesh.element_dofs(k);
    for (Eigen::Index i = 0; i < n; ++i) values(i) = nodal[dofs[static_cast<std::size_t>(i)]];
    const Eigen::VectorXd c = lu.solve(values);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto g = dofs[static_cast<std::size_t>(i)];
      if (!done[g]) {
        coeffs[g] = c(i);
        done[g] = true;
      }
    }
  }
  return coeffs;
}

double evaluate(const Mesh& mesh, const Basis& basis, std::span<const double> state, std::size_t element,
                const Barycentric& point) {
  check(mesh, basis);
  const auto phi = eval_basis(basis, point);
  const auto dofs = mesh.element_dofs(element);
  double u = 0.0;
  for (std::size_t s = 0; s < dofs.size(); ++s) u += phi[s] * state[dofs[s]];
  return u;
}

std::vector<double> nodal_values(const Mesh& mesh, const Basis& basis, std::span<const double> state) {
  check(mesh, basis);
  if (basis.family() == BasisFamily::lagrange) return {state.begin(), state.end()};
  const Tabulation table(basis, basis.reference_points());
  std::vector<double> out(mesh.num_dofs(), 0.0);
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const auto dofs = mesh.element_dofs(k);
    for (std::size_t q = 0; q < table.num_points(); ++q) {
      const auto phi = table.values(q);
      double u = 0.0;
      for (std::size_t s = 0; s < dofs.size(); ++s) u += phi[s] * state[dofs[s]];
      out[dofs[q]] = u;
    }
  }
  return out;
}

}  // namespace cgsat
