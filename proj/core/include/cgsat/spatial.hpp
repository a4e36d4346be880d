#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cgsat/basis.hpp"
#include "cgsat/conservation_law.hpp"
#include "cgsat/mesh.hpp"
#include "cgsat/quadrature.hpp"

namespace cgsat {

struct QuadratureOrders {
  int volume = 3;
  int edge = 3;
};

/// 2p+1 on volume and edges; at least 8 for laws with a non-polynomial flux.
QuadratureOrders default_quadrature_orders(int degree, const ConservationLaw& law);

/// Galerkin sub-residuals of one element.
///
/// per_dof[s] = oint_{dK} phi_s f(u_h).n - int_K grad(phi_s).f(u_h), and
/// total = oint_{dK} f(u_h).n with the same edge quadrature, so that
/// sum(per_dof) == total up to rounding.
struct ElementResidual {
  std::vector<double> per_dof;
  double total = 0.0;
};

/// Continuous Galerkin discretisation of div f(u) on a fixed mesh/basis/law.
/// Holds references; the mesh, basis and law must outlive the operator.
class SpatialOperator {
 public:
  /// Throws ConfigError if the basis degree differs from the mesh degree or
  /// a quadrature order is unsupported.
  SpatialOperator(const Mesh& mesh, const Basis& basis, const ConservationLaw& law, QuadratureOrders orders);

  const Mesh& mesh() const { return *mesh_; }
  const Basis& basis() const { return *basis_; }
  const ConservationLaw& law() const { return *law_; }
  QuadratureOrders orders() const { return orders_; }

  const TriangleRule& volume_rule() const { return *volume_rule_; }
  const SegmentRule& edge_rule() const { return *edge_rule_; }
  const Tabulation& volume_table() const { return volume_table_; }
  const Tabulation& edge_table(int local_edge) const { return edge_tables_[static_cast<std::size_t>(local_edge)]; }
  /// Edge rule for entropy-flux traces, p orders above the flux edge rule
  /// since g carries one more factor of u_h than f.
  const SegmentRule& entropy_edge_rule() const { return *entropy_edge_rule_; }

  /// Copies the element's coefficients out of the global state.
  void gather(std::size_t element, std::span<const double> state, std::span<double> local) const;

  ElementResidual element_residual(std::size_t element, std::span<const double> state) const;

  /// F_s = sum over elements containing s of the element sub-residuals,
  /// accumulated in element-index order. Throws NumericalError naming the
  /// element if a residual is not finite.
  std::vector<double> assemble_rhs(std::span<const double> state) const;

  /// oint_{dK} f(u_h).n over the element boundary.
  double boundary_flux(std::size_t element, std::span<const double> state) const;

  /// oint_{dK} g(u(V_h)).n with V_h interpolating the nodal entropy variables.
  double boundary_entropy_flux(std::size_t element, std::span<const double> state) const;

 private:
  const Mesh* mesh_;
  const Basis* basis_;
  const ConservationLaw* law_;
  QuadratureOrders orders_;
  const TriangleRule* volume_rule_;
  const SegmentRule* edge_rule_;
  Tabulation volume_table_;
  std::array<Tabulation, 3> edge_tables_;
  const SegmentRule* entropy_edge_rule_;
  std::array<Tabulation, 3> entropy_edge_tables_;
};

ElementResidual element_residual(const SpatialOperator& op, std::size_t element, std::span<const double> state);
std::vector<double> assemble_rhs(const SpatialOperator& op, std::span<const double> state);

/// Throws NumericalError if any entry is NaN or infinite.
void require_finite(std::span<const double> values, const char* what);

}  // namespace cgsat
