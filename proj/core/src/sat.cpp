#include "cgsat/sat.hpp"

#include <cmath>
#include <string>

#include "cgsat/errors.hpp"
#include "cgsat/quadrature.hpp"

namespace cgsat {

BoundaryEval parse_boundary_eval(std::string_view name) {
  if (name == "closed_form") return BoundaryEval::closed_form;
  if (name == "quadrature") return BoundaryEval::quadrature;
  throw ConfigError("unknown boundary evaluation mode '" + std::string(name) + "'");
}

std::string_view to_string(BoundaryEval mode) {
  return mode == BoundaryEval::closed_form ? "closed_form" : "quadrature";
}

void validate(const BoundaryOperatorSpec& spec) {
  if (spec.order < 2 || spec.order > 8) {
    throw ConfigError("boundary operator quadrature order " + std::to_string(spec.order) + " outside [2, 8]");
  }
}

double eval_F(const ConservationLaw& law, double v, Vec2 n, const BoundaryOperatorSpec& spec, Vec2 x) {
  if (spec.mode == BoundaryEval::closed_form) {
    if (const auto f = law.boundary_factor(v, n, x)) return *f;
    throw ConfigError("law '" + law.name() + "' has no closed-form boundary operator");
  }
  validate(spec);
  const auto& rule = segment_rule(spec.order);
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const double t = rule.points[q];
    const double u = law.state_from_entropy_variable(t * v);
    sum += rule.weights[q] * t * dot(law.flux_jacobian(u, x), n) / law.entropy_hessian(u);
  }
  return sum;
}

namespace {

// Visits every boundary quadrature point with (face, phi values, weight, V_h, Pi).
template <typename Visitor>
void for_each_boundary_point(const SpatialOperator& op, std::span<const double> state,
                             const BoundaryOperatorSpec& spec, Visitor&& visit) {
  const auto& mesh = op.mesh();
  const auto& law = op.law();
  const auto& rule = op.edge_rule();
  std::vector<double> v(op.basis().size());
  for (const auto& face : mesh.boundary_faces()) {
    op.gather(face.element, state, v);
    for (auto& x : v) x = law.entropy_variable(x);
    const auto& table = op.edge_table(face.local_edge);
    const auto& geo = mesh.geometry(face.element);
    for (std::size_t q = 0; q < table.num_points(); ++q) {
      const auto phi = table.values(q);
      double vh = 0.0;
      for (std::size_t s = 0; s < phi.size(); ++s) vh += phi[s] * v[s];
      if (!std::isfinite(vh)) {
        throw NumericalError("non-finite boundary trace on element " + std::to_string(face.element));
      }
      const Vec2 x = geo.map(edge_point(face.local_edge, rule.points[q]));
      const double pi = clamp_Pi(eval_F(law, vh, face.normal, spec, x));
      visit(face, phi, rule.weights[q] * face.length, vh, pi);
    }
  }
}

}  // namespace

std::vector<double> sat_contribution(const SpatialOperator& op, std::span<const double> state,
                                     const BoundaryOperatorSpec& spec) {
  std::vector<double> out(op.mesh().num_dofs(), 0.0);
  for_each_boundary_point(op, state, spec,
                          [&](const BoundaryFace& face, std::span<const double> phi, double w, double vh, double pi) {
                            const auto dofs = op.mesh().element_dofs(face.element);
                            const double value = w * pi * vh;
                            for (std::size_t s = 0; s < phi.size(); ++s) out[dofs[s]] += phi[s] * value;
                          });
  return out;
}

double sat_boundary_entropy_rate(const SpatialOperator& op, std::span<const double> state,
                                 const BoundaryOperatorSpec& spec) {
  double sum = 0.0;
  for_each_boundary_point(op, state, spec, [&](const BoundaryFace&, std::span<const double>, double w, double vh,
                                               double pi) { sum += w * pi * vh * vh; });
  return sum;
}

}  // namespace cgsat
