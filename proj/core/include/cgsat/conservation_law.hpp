#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "cgsat/geometry.hpp"

namespace cgsat {

/// Scalar 2D conservation law u_t + div f(u, x) = 0 together with a convex
/// entropy pair (eta, g) satisfying eta'(u) f'(u) = g'(u) componentwise.
///
/// The position argument only matters for laws with a spatially varying
/// coefficient (the rotation field). All built-in laws normalise g(0) = 0.
class ConservationLaw {
 public:
  virtual ~ConservationLaw() = default;

  virtual std::string name() const = 0;

  virtual Vec2 flux(double u, Vec2 x) const = 0;
  /// Componentwise derivative df/du.
  virtual Vec2 flux_jacobian(double u, Vec2 x) const = 0;

  virtual double entropy(double u) const = 0;
  virtual double entropy_hessian(double u) const = 0;
  virtual Vec2 entropy_flux(double u, Vec2 x) const = 0;

  /// V = eta'(u) and its inverse u(V).
  virtual double entropy_variable(double u) const = 0;
  virtual double state_from_entropy_variable(double v) const = 0;

  /// Theta(V) with Theta' = f(u(V)) and g = V f - Theta.
  virtual Vec2 flux_potential(double v, Vec2 x) const = 0;

  /// Closed form of int_0^1 t f'(tV).n dt in entropy variables, if the law has one.
  virtual std::optional<double> boundary_factor(double /*v*/, Vec2 /*n*/, Vec2 /*x*/) const { return std::nullopt; }

  /// True if all flux components are polynomial in u (quadrature can be exact).
  virtual bool polynomial_flux() const = 0;

  double normal_flux(double u, Vec2 n, Vec2 x = {}) const { return dot(flux(u, x), n); }
  double normal_entropy_flux(double u, Vec2 n, Vec2 x = {}) const { return dot(entropy_flux(u, x), n); }
};

/// Constant-coefficient advection, f = a u.
std::unique_ptr<ConservationLaw> make_advection(Vec2 speed);

/// Solid-body rotation f = a(x) u with a(x, y) = 2 pi (y, -x): one clockwise
/// revolution per unit time, div a = 0.
std::unique_ptr<ConservationLaw> make_rotation();

/// 2D Burgers, f = (u^2/2, u^2/2).
std::unique_ptr<ConservationLaw> make_burgers2d();

/// Burgers-type law f = (cos u, u).
std::unique_ptr<ConservationLaw> make_cosflux();

/// Built-in law by name: "advection" (speed (1,0)), "advection(a,b)",
/// "rotation", "burgers2d", "cosflux". Throws ConfigError otherwise.
std::unique_ptr<ConservationLaw> builtin_law(std::string_view name);

inline double normal_flux(const ConservationLaw& law, double u, Vec2 n, Vec2 x = {}) {
  return law.normal_flux(u, n, x);
}
inline double normal_entropy_flux(const ConservationLaw& law, double u, Vec2 n, Vec2 x = {}) {
  return law.normal_entropy_flux(u, n, x);
}

}  // namespace cgsat
