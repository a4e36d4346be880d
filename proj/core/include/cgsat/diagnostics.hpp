#pragma once

#include <span>

#include "cgsat/basis.hpp"
#include "cgsat/conservation_law.hpp"
#include "cgsat/mass.hpp"
#include "cgsat/mesh.hpp"

namespace cgsat {

/// int_Omega eta(u_h) by volume quadrature of the given order.
double entropy_integral(const Mesh& mesh, const Basis& basis, const ConservationLaw& law,
                        std::span<const double> state, int order);

/// int eta(u_h(t)) - int eta(u_h(0)); exactly zero for identical states.
double entropy_change(std::span<const double> state_t, std::span<const double> state_0, const Mesh& mesh,
                      const Basis& basis, const ConservationLaw& law, int order);

/// u^T M u, i.e. int u_h^2 when M is exact.
double mass_norm_squared(const MassMatrix& mass, std::span<const double> state);

}  // namespace cgsat
