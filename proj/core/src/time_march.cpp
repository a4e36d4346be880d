#include "cgsat/time_march.hpp"

#include <algorithm>
#include <cmath>

#include "cgsat/errors.hpp"

namespace cgsat {

TimeSchemeKind parse_time_scheme(std::string_view name) {
  if (name == "ssprk33") return TimeSchemeKind::ssprk33;
  if (name == "ssprk54") return TimeSchemeKind::ssprk54;
  if (name == "rk44") return TimeSchemeKind::rk44;
  throw ConfigError("unknown time scheme '" + std::string(name) + "' (expected ssprk33, ssprk54 or rk44)");
}

std::string_view to_string(TimeSchemeKind kind) {
  switch (kind) {
    case TimeSchemeKind::ssprk33: return "ssprk33";
    case TimeSchemeKind::ssprk54: return "ssprk54";
    case TimeSchemeKind::rk44: return "rk44";
  }
  return "unknown";
}

TimeScheme make_time_scheme(TimeSchemeKind kind) {
  TimeScheme ts;
  ts.kind = kind;
  switch (kind) {
    case TimeSchemeKind::ssprk33:
      ts.order = 3;
      ts.alpha = {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}};
      ts.beta = {{1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}};
      break;
    case TimeSchemeKind::ssprk54:
      // Spiteri-Ruuth optimal SSP(5,4).
      ts.order = 4;
      ts.alpha = {{1.0},
                  {0.444370493651235, 0.555629506348765},
                  {0.620101851488403, 0.0, 0.379898148511597},
                  {0.178079954393132, 0.0, 0.0, 0.821920045606868},
                  {0.0, 0.0, 0.517231671970585, 0.096059710526147, 0.386708617503269}};
      ts.beta = {{0.391752226571890},
                 {0.0, 0.368410593050371},
                 {0.0, 0.0, 0.251891774271694},
                 {0.0, 0.0, 0.0, 0.544974750228521},
                 {0.0, 0.0, 0.0, 0.063692468666290, 0.226007483236906}};
      break;
    case TimeSchemeKind::rk44:
      ts.order = 4;
      ts.alpha = {{1.0}, {1.0, 0.0}, {1.0, 0.0, 0.0}, {-1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0}};
      ts.beta = {{0.5}, {0.0, 0.5}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0, 1.0 / 6.0}};
      break;
  }
  return ts;
}

double compute_dt(double cfl, const Mesh& mesh, std::span<const double> state, const ConservationLaw& law) {
  if (!(cfl > 0.0)) throw ConfigError("CFL number must be positive");
  const auto coords = mesh.dof_coordinates();
  double lambda = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) lambda = std::max(lambda, norm(law.flux_jacobian(state[i], coords[i])));
  lambda = std::max(lambda, 1e-12);
  return cfl * mesh.min_inradius_diameter() / lambda;
}

namespace detail {
void check_stage(std::span<const double> stage, std::size_t index) {
  for (double v : stage) {
    if (!std::isfinite(v)) throw NumericalError("non-finite state in Runge-Kutta stage " + std::to_string(index));
  }
}
}  // namespace detail

}  // namespace cgsat
