#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cgsat/conservation_law.hpp"
#include "cgsat/spatial.hpp"

namespace cgsat {

enum class BoundaryEval { closed_form, quadrature };

BoundaryEval parse_boundary_eval(std::string_view name);
std::string_view to_string(BoundaryEval mode);

/// How the boundary factor F(V) = int_0^1 t f'(tV).n dt is evaluated.
/// The boundary data is homogeneous (u = 0 imposed weakly) and the penalty is
/// Pi = min(F, 0).
struct BoundaryOperatorSpec {
  BoundaryEval mode = BoundaryEval::closed_form;
  /// Exactness degree of the segment rule in quadrature mode, in [2, 8].
  int order = 5;
};

/// Throws ConfigError if the spec's quadrature order is outside [2, 8].
void validate(const BoundaryOperatorSpec& spec);

/// F(V) at a boundary point with unit normal n. In entropy variables the
/// integrand uses df/dV = f'(u(V)) / eta''(u(V)).
/// Throws ConfigError when closed_form is requested for a law without one.
double eval_F(const ConservationLaw& law, double v, Vec2 n, const BoundaryOperatorSpec& spec, Vec2 x = {});

/// Pi = min(F, 0): zero where F >= 0, F itself where F < 0.
constexpr double clamp_Pi(double boundary_factor) { return boundary_factor < 0.0 ? boundary_factor : 0.0; }

/// SAT_s = oint_{dOmega} phi_s Pi(V_h) V_h, with Pi evaluated at every edge
/// quadrature point. Throws NumericalError for non-finite traces.
std::vector<double> sat_contribution(const SpatialOperator& op, std::span<const double> state,
                                     const BoundaryOperatorSpec& spec);

/// oint_{dOmega} Pi(V_h) V_h^2 with the same edge quadrature as sat_contribution.
double sat_boundary_entropy_rate(const SpatialOperator& op, std::span<const double> state,
                                 const BoundaryOperatorSpec& spec);

}  // namespace cgsat
