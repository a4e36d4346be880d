#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "cgsat/geometry.hpp"

namespace cgsat {

enum class Domain { unit_square, unit_disk };

struct Scenario {
  std::string name;
  std::string law;  // builtin_law name
  Domain domain = Domain::unit_square;
  int default_mesh_n = 16;  // cells per side, or rings for the disk
  double default_t_end = 1.0;
  std::function<double(Vec2)> initial;
};

std::span<const Scenario> builtin_scenarios();

/// Throws ConfigError for unknown names.
const Scenario& find_scenario(std::string_view name);

}  // namespace cgsat
