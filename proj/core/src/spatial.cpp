#include "cgsat/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgsat/errors.hpp"
#include "cgsat/quadrature.hpp"

namespace cgsat {

namespace {

Tabulation edge_tabulation(const Basis& basis, const SegmentRule& rule, int edge) {
  std::vector<Barycentric> pts;
  pts.reserve(rule.points.size());
  for (double t : rule.points) pts.push_back(edge_point(edge, t));
  return Tabulation(basis, pts);
}

}  // namespace

QuadratureOrders default_quadrature_orders(int degree, const ConservationLaw& law) {
  const int order = law.polynomial_flux() ? 2 * degree + 1 : std::max(2 * degree + 1, 8);
  return {order, order};
}

SpatialOperator::SpatialOperator(const Mesh& mesh, const Basis& basis, const ConservationLaw& law,
                                 QuadratureOrders orders)
    : mesh_(&mesh), basis_(&basis), law_(&law), orders_(orders) {
  if (basis.degree() != mesh.degree()) {
    throw ConfigError("basis degree " + std::to_string(basis.degree()) + " does not match mesh degree " +
                      std::to_string(mesh.degree()));
  }
  volume_rule_ = &triangle_rule(orders.volume);
  edge_rule_ = &segment_rule(orders.edge);
  entropy_edge_rule_ = &segment_rule(std::min(kMaxQuadratureOrder, orders.edge + basis.degree()));
  volume_table_ = Tabulation(basis, volume_rule_->points);
  for (int e = 0; e < 3; ++e) {
    edge_tables_[static_cast<std::size_t>(e)] = edge_tabulation(basis, *edge_rule_, e);
    entropy_edge_tables_[static_cast<std::size_t>(e)] = edge_tabulation(basis, *entropy_edge_rule_, e);
  }
}

void SpatialOperator::gather(std::size_t element, std::span<const double> state, std::span<double> local) const {
  const auto dofs = mesh_->element_dofs(element);
  for (std::size_t s = 0; s < dofs.size(); ++s) local[s] = state[dofs[s]];
}

namespace {

double interpolate(std::span<const double> phi, std::span<const double> coeffs) {
  double u = 0.0;
  for (std::size_t s = 0; s < phi.size(); ++s) u += phi[s] * coeffs[s];
  return u;
}

}  // namespace

ElementResidual SpatialOperator::element_residual(std::size_t element, std::span<const double> state) const {
  const std::size_t n = basis_->size();
  std::vector<double> local(n);
  gather(element, state, local);

  const auto& geo = mesh_->geometry(element);
  const auto& grad_l = geo.grad_lambda();
  ElementResidual res;
  res.per_dof.assign(n, 0.0);

  const double jac = 2.0 * geo.area();
  for (std::size_t q = 0; q < volume_table_.num_points(); ++q) {
    const auto phi = volume_table_.values(q);
    const auto dphi = volume_table_.derivatives(q);
    const double u = interpolate(phi, local);
    const Vec2 f = law_->flux(u, geo.map(volume_rule_->points[q]));
    const double w = volume_rule_->weights[q] * jac;
    for (std::size_t s = 0; s < n; ++s) res.per_dof[s] -= w * dot(physical_gradient(dphi[s], grad_l), f);
  }

  for (int e = 0; e < 3; ++e) {
    const auto& table = edge_tables_[static_cast<std::size_t>(e)];
    const Vec2 normal = geo.outward_normal(e);
    const double len = geo.edge_length(e);
    for (std::size_t q = 0; q < table.num_points(); ++q) {
      const auto phi = table.values(q);
      const double u = interpolate(phi, local);
      const double fn = law_->normal_flux(u, normal, geo.map(edge_point(e, edge_rule_->points[q])));
      const double w = edge_rule_->weights[q] * len;
      res.total += w * fn;
      for (std::size_t s = 0; s < n; ++s) res.per_dof[s] += w * phi[s] * fn;
    }
  }
  return res;
}

std::vector<double> SpatialOperator::assemble_rhs(std::span<const double> state) const {
  std::vector<double> rhs(mesh_->num_dofs(), 0.0);
  for (std::size_t k = 0; k < mesh_->num_elements(); ++k) {
    const auto res = element_residual(k, state);
    const auto dofs = mesh_->element_dofs(k);
    for (std::size_t s = 0; s < dofs.size(); ++s) {
      if (!std::isfinite(res.per_dof[s])) {
        throw NumericalError("non-finite residual in element " + std::to_string(k));
      }
      rhs[dofs[s]] += res.per_dof[s];
    }
  }
  return rhs;
}

double SpatialOperator::boundary_flux(std::size_t element, std::span<const double> state) const {
  std::vector<double> local(basis_->size());
  gather(element, state, local);
  const auto& geo = mesh_->geometry(element);
  double sum = 0.0;
  for (int e = 0; e < 3; ++e) {
    const auto& table = edge_tables_[static_cast<std::size_t>(e)];
    const Vec2 normal = geo.outward_normal(e);
    const double len = geo.edge_length(e);
    for (std::size_t q = 0; q < table.num_points(); ++q) {
      const double u = interpolate(table.values(q), local);
      sum += edge_rule_->weights[q] * len *
             law_->normal_flux(u, normal, geo.map(edge_point(e, edge_rule_->points[q])));
    }
  }
  return sum;
}

double SpatialOperator::boundary_entropy_flux(std::size_t element, std::span<const double> state) const {
  const std::size_t n = basis_->size();
  std::vector<double> v(n);
  gather(element, state, v);
  for (auto& x : v) x = law_->entropy_variable(x);
  const auto& geo = mesh_->geometry(element);
  double sum = 0.0;
  for (int e = 0; e < 3; ++e) {
    const auto& table = entropy_edge_tables_[static_cast<std::size_t>(e)];
    const Vec2 normal = geo.outward_normal(e);
    const double len = geo.edge_length(e);
    for (std::size_t q = 0; q < table.num_points(); ++q) {
      const double u = law_->state_from_entropy_variable(interpolate(table.values(q), v));
      sum += entropy_edge_rule_->weights[q] * len *
             law_->normal_entropy_flux(u, normal, geo.map(edge_point(e, entropy_edge_rule_->points[q])));
    }
  }
  return sum;
}

ElementResidual element_residual(const SpatialOperator& op, std::size_t element, std::span<const double> state) {
  return op.element_residual(element, state);
}

std::vector<double> assemble_rhs(const SpatialOperator& op, std::span<const double> state) {
  return op.assemble_rhs(state);
}

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericalError(std::string("non-finite ") + what + " at index " + std::to_string(i));
    }
  }
}

}  // namespace cgsat
