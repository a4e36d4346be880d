#include "cgsat/scenarios.hpp"

#include <array>
#include <cmath>

#include "cgsat/errors.hpp"

namespace cgsat {
namespace {

double gaussian(Vec2 p, Vec2 centre) {
  const Vec2 d = p - centre;
  return std::exp(-40.0 * dot(d, d));
}

const std::array<Scenario, 4>& table() {
  static const std::array<Scenario, 4> scenarios{{
      {"advect_bump", "advection", Domain::unit_square, 16, 1.0,
       [](Vec2 p) {
         const Vec2 d = p - Vec2{0.3, 0.3};
         return norm(d) < 0.25 ? std::exp(-40.0 * dot(d, d)) : 0.0;
       }},
      {"rotation", "rotation", Domain::unit_disk, 13, 1.0, [](Vec2 p) { return gaussian(p, {0.0, 0.5}); }},
      {"burgers_bump", "burgers2d", Domain::unit_disk, 13, 0.3, [](Vec2 p) { return gaussian(p, {0.5, 0.5}); }},
      {"cosflux", "cosflux", Domain::unit_disk, 13, 0.2, [](Vec2 p) { return gaussian(p, {0.0, 0.0}); }},
  }};
  return scenarios;
}

}  // namespace

std::span<const Scenario> builtin_scenarios() { return table(); }

const Scenario& find_scenario(std::string_view name) {
  for (const auto& s : table()) {
    if (s.name == name) return s;
  }
  throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

}  // namespace cgsat
