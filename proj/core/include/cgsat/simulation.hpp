#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cgsat/basis.hpp"
#include "cgsat/config.hpp"
#include "cgsat/conservation_law.hpp"
#include "cgsat/mass.hpp"
#include "cgsat/mesh.hpp"
#include "cgsat/output.hpp"
#include "cgsat/semidiscrete.hpp"
#include "cgsat/spatial.hpp"

namespace cgsat {

enum class RunStatus { completed, numerical_abort };

struct StepInfo {
  long step = 0;
  double time = 0.0;
  double dt = 0.0;
  std::span<const double> state;
};

struct RunResult {
  RunStatus status = RunStatus::completed;
  std::string message;
  long steps = 0;  // completed steps; on abort, the last valid one
  double time = 0.0;
  double peak_abs_u = 0.0;  // max |u| at DoF points over all completed steps
  EntropyReport report;
  std::vector<double> final_state;  // last valid state
  std::vector<std::filesystem::path> snapshots;
};

/// Owns every object of one run. Not movable: internal operators keep
/// references to sibling members.
class Simulation {
 public:
  explicit Simulation(SchemeConfig config);
  ~Simulation();
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  const SchemeConfig& config() const { return config_; }
  const Mesh& mesh() const { return *mesh_; }
  const Basis& basis() const { return basis_; }
  const ConservationLaw& law() const { return *law_; }
  const MassMatrix& mass() const { return mass_; }
  const SpatialOperator& spatial() const { return *spatial_; }
  const SemiDiscretization& semi_discretization() const { return *semi_; }
  double t_end() const { return t_end_; }
  long max_steps() const { return max_steps_; }
  int diagnostic_order() const { return diagnostic_order_; }

  std::span<const double> initial_state() const { return initial_; }
  void set_initial_state(std::vector<double> state);

  /// Runs the time loop from the initial state. The observer sees every
  /// completed step.
  RunResult run(const std::function<void(const StepInfo&)>& observer = {}) const;

 private:
  SchemeConfig config_;
  std::unique_ptr<Mesh> mesh_;
  Basis basis_;
  std::unique_ptr<ConservationLaw> law_;
  MassMatrix mass_;
  std::unique_ptr<MassSolver> solver_;
  std::unique_ptr<SpatialOperator> spatial_;
  std::unique_ptr<SemiDiscretization> semi_;
  std::vector<double> initial_;
  double t_end_ = 0.0;
  long max_steps_ = 0;
  int diagnostic_order_ = 0;
};

RunResult run_scenario(const SchemeConfig& config);

}  // namespace cgsat
