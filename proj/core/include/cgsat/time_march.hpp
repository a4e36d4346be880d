#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgsat/conservation_law.hpp"
#include "cgsat/mesh.hpp"

namespace cgsat {

enum class TimeSchemeKind { ssprk33, ssprk54, rk44 };

TimeSchemeKind parse_time_scheme(std::string_view name);
std::string_view to_string(TimeSchemeKind kind);

/// Explicit Runge-Kutta method in Shu-Osher form:
///   u(0) = u^n,
///   u(i) = sum_{j<i} alpha[i][j] u(j) + dt beta[i][j] L(u(j)),  i = 1..s,
///   u^{n+1} = u(s).
/// For the SSP schemes all coefficients are non-negative and each row of
/// alpha sums to one, so every stage is a convex combination of forward-Euler steps.
struct TimeScheme {
  TimeSchemeKind kind = TimeSchemeKind::ssprk33;
  int order = 3;
  std::vector<std::vector<double>> alpha;
  std::vector<std::vector<double>> beta;

  std::size_t stages() const { return alpha.size(); }
};

TimeScheme make_time_scheme(TimeSchemeKind kind);

/// dt = cfl * h_min / lambda_max with h_min the smallest inscribed-circle
/// diameter and lambda_max = max over DoFs of |f'(u_s, x_s)| (floored at 1e-12).
double compute_dt(double cfl, const Mesh& mesh, std::span<const double> state, const ConservationLaw& law);

template <typename F>
concept RhsEvaluator = requires(const F& f, std::span<const double> u, std::span<double> dudt) { f(u, dudt); };

/// One step of `scheme`. The rhs is evaluated once per stage on that stage's
/// state. Throws NumericalError if a stage state is not finite.
template <RhsEvaluator Rhs>
void step(const TimeScheme& scheme, std::vector<double>& state, double dt, const Rhs& rhs);

namespace detail {
void check_stage(std::span<const double> stage, std::size_t index);
}

template <RhsEvaluator Rhs>
void step(const TimeScheme& scheme, std::vector<double>& state, double dt, const Rhs& rhs) {
  // Stages are carried as increments d(i) = u(i) - u^n; since every row of
  // alpha sums to one, d(i) = sum_j alpha[i][j] d(j) + dt beta[i][j] L(u(j)).
  // A vanishing rhs therefore leaves the state bitwise unchanged.
  const std::size_t n = state.size();
  const std::size_t s = scheme.stages();
  std::vector<std::vector<double>> d(s + 1, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> l(s, std::vector<double>(n));
  std::vector<double> stage(state);
  for (std::size_t i = 1; i <= s; ++i) {
    const auto& a = scheme.alpha[i - 1];
    const auto& b = scheme.beta[i - 1];
    rhs(std::span<const double>(stage), std::span<double>(l[i - 1]));
    auto& di = d[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] != 0.0 && j > 0) {
        for (std::size_t k = 0; k < n; ++k) di[k] += a[j] * d[j][k];
      }
      if (b[j] != 0.0) {
        const double c = dt * b[j];
        for (std::size_t k = 0; k < n; ++k) di[k] += c * l[j][k];
      }
    }
    for (std::size_t k = 0; k < n; ++k) stage[k] = state[k] + di[k];
    detail::check_stage(stage, i);
  }
  state = std::move(stage);
}

}  // namespace cgsat
