#include "cgsat/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>

#include "cgsat/diagnostics.hpp"
#include "cgsat/errors.hpp"
#include "cgsat/interpolation.hpp"
#include "cgsat/quadrature.hpp"
#include "cgsat/scenarios.hpp"
#include "cgsat/time_march.hpp"

namespace cgsat {
namespace {

constexpr long kDefaultStepLimit = 10'000'000;

std::unique_ptr<Mesh> build_mesh(const SchemeConfig& c, const Scenario& s) {
  if (!c.mesh_file.empty()) return std::make_unique<Mesh>(load_mesh(c.mesh_file.string(), c.degree));
  const int n = c.mesh_n.value_or(s.default_mesh_n);
  if (s.domain == Domain::unit_disk) return std::make_unique<Mesh>(generate_disk_mesh(n, c.degree));
  return std::make_unique<Mesh>(generate_square_mesh(n, c.degree));
}

struct Extrema {
  double min = 0.0;
  double max = 0.0;
};

Extrema extrema(std::span<const double> nodal) {
  const auto [lo, hi] = std::minmax_element(nodal.begin(), nodal.end());
  return {*lo, *hi};
}

std::filesystem::path snapshot_path(const std::filesystem::path& dir, long step) {
  char name[32];
  std::snprintf(name, sizeof name, "u_%07ld.vtk", step);
  return dir / name;
}

}  // namespace

Simulation::Simulation(SchemeConfig config)
    : config_(std::move(config)), basis_(config_.basis, config_.degree) {
  validate(config_);
  const Scenario& scenario = find_scenario(config_.scenario);
  mesh_ = build_mesh(config_, scenario);
  law_ = builtin_law(scenario.law);

  QuadratureOrders orders = default_quadrature_orders(config_.degree, *law_);
  if (config_.volume_order) orders.volume = *config_.volume_order;
  if (config_.edge_order) orders.edge = *config_.edge_order;

  mass_ = assemble_mass(*mesh_, basis_, config_.mass_mode);
  solver_ = std::make_unique<MassSolver>(mass_);
  spatial_ = std::make_unique<SpatialOperator>(*mesh_, basis_, *law_, orders);

  SchemeOptions options;
  options.correction = config_.correction;
  if (config_.sat_mode) {
    options.sat = BoundaryOperatorSpec{*config_.sat_mode, config_.sat_order};
  } else {
    options.sat.reset();
  }
  semi_ = std::make_unique<SemiDiscretization>(*spatial_, *solver_, options);

  initial_ = interpolate(*mesh_, basis_, scenario.initial);
  t_end_ = config_.t_end.value_or(scenario.default_t_end);
  max_steps_ = config_.max_steps.value_or(kDefaultStepLimit);
  diagnostic_order_ = std::min(kMaxQuadratureOrder, std::max(2 * config_.degree, orders.volume));
}

Simulation::~Simulation() = default;

void Simulation::set_initial_state(std::vector<double> state) {
  if (state.size() != mesh_->num_dofs()) throw ValidationError("initial state length does not match the mesh");
  initial_ = std::move(state);
}

RunResult Simulation::run(const std::function<void(const StepInfo&)>& observer) const {
  const TimeScheme scheme = make_time_scheme(config_.time_scheme);
  const bool write = !config_.out_dir.empty();
  if (write) std::filesystem::create_directories(config_.out_dir);

  RunResult result;
  std::vector<double> state = initial_;
  const double entropy0 = entropy_integral(*mesh_, basis_, *law_, state, diagnostic_order_);

  const auto record = [&](double t, std::span<const double> u, long step) {
    const auto nodal = nodal_values(*mesh_, basis_, u);
    const auto [lo, hi] = extrema(nodal);
    const double entropy = step == 0 ? entropy0 : entropy_integral(*mesh_, basis_, *law_, u, diagnostic_order_);
    result.report.rows.push_back({t, entropy, step == 0 ? 0.0 : entropy - entropy0, lo, hi});
    if (write) {
      result.snapshots.push_back(snapshot_path(config_.out_dir, step));
      write_vtk(*mesh_, basis_, u, result.snapshots.back());
    }
  };

  {
    const auto [lo, hi] = extrema(nodal_values(*mesh_, basis_, state));
    result.peak_abs_u = std::max(std::abs(lo), std::abs(hi));
  }
  record(0.0, state, 0);

  const auto rhs = [this](std::span<const double> u, std::span<double> dudt) { (*semi_)(u, dudt); };
  double t = 0.0;
  long steps = 0;
  long last_recorded = 0;
  const double t_tol = 1e-12 * std::max(1.0, t_end_);
  std::vector<double> trial;
  while (steps < max_steps_ && t < t_end_ - t_tol) {
    double dt = compute_dt(config_.cfl, *mesh_, state, *law_);
    if (t + dt > t_end_) dt = t_end_ - t;
    trial = state;
    try {
      step(scheme, trial, dt, rhs);
    } catch (const NumericalError& e) {
      result.status = RunStatus::numerical_abort;
      result.message = "step " + std::to_string(steps + 1) + ": " + e.what();
      break;
    }
    state.swap(trial);
    t += dt;
    ++steps;
    const auto [lo, hi] = extrema(nodal_values(*mesh_, basis_, state));
    result.peak_abs_u = std::max({result.peak_abs_u, std::abs(lo), std::abs(hi)});
    if (observer) observer({steps, t, dt, state});
    if (steps % config_.output_every == 0) {
      record(t, state, steps);
      last_recorded = steps;
    }
  }
  if (last_recorded != steps) record(t, state, steps);

  result.steps = steps;
  result.time = t;
  result.final_state = std::move(state);
  if (write) write_entropy_csv(result.report, config_.out_dir / "entropy.csv");
  return result;
}

RunResult run_scenario(const SchemeConfig& config) {
  const Simulation sim(config);
  return sim.run();
}

}  // namespace cgsat
