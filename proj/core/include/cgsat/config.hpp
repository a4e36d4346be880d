#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cgsat/basis.hpp"
#include "cgsat/mass.hpp"
#include "cgsat/sat.hpp"
#include "cgsat/time_march.hpp"

namespace cgsat {

/// Run configuration. Unset optionals fall back to scenario or degree defaults.
struct SchemeConfig {
  std::string scenario;
  BasisFamily basis = BasisFamily::lagrange;
  int degree = 2;
  std::optional<int> volume_order;
  std::optional<int> edge_order;
  int sat_order = 5;
  MassMode mass_mode = MassMode::exact;
  bool correction = true;
  std::optional<BoundaryEval> sat_mode = BoundaryEval::closed_form;  // nullopt disables SAT
  double cfl = 0.1;
  TimeSchemeKind time_scheme = TimeSchemeKind::ssprk33;
  std::optional<double> t_end;
  std::optional<long> max_steps;
  long output_every = 1;
  std::optional<int> mesh_n;
  std::filesystem::path mesh_file;
  std::filesystem::path out_dir;
};

/// Parses `key = value` lines; `#` starts a comment. Relative mesh_file
/// paths are resolved against `base_dir`.
SchemeConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
SchemeConfig load_config(const std::filesystem::path& path);

/// Throws ValidationError on out-of-range values.
void validate(const SchemeConfig& config);

}  // namespace cgsat
