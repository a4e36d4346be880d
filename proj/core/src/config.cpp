#include "cgsat/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cgsat/errors.hpp"
#include "cgsat/quadrature.hpp"

namespace cgsat {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view value, std::size_t line, std::string_view key) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "invalid number '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view value, std::size_t line, std::string_view key) {
  if (value == "on" || value == "true" || value == "1" || value == "yes") return true;
  if (value == "off" || value == "false" || value == "0" || value == "no") return false;
  throw ParseError(line, "invalid boolean '" + std::string(value) + "' for " + std::string(key));
}

template <typename Parse>
auto parse_enum(Parse parse, std::string_view value, std::size_t line) {
  try {
    return parse(value);
  } catch (const ConfigError& e) {
    throw ParseError(line, e.what());
  }
}

void require_positive(double v, const char* key) {
  if (!(v > 0.0)) throw ValidationError(std::string(key) + " must be positive");
}

}  // namespace

SchemeConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  SchemeConfig cfg;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError(line_no, "expected 'key = value'");
    if (!seen.insert(std::string(key)).second) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");

    if (key == "scenario") {
      cfg.scenario = value;
    } else if (key == "basis") {
      cfg.basis = parse_enum(parse_basis_family, value, line_no);
    } else if (key == "degree") {
      cfg.degree = parse_number<int>(value, line_no, key);
    } else if (key == "volume_order") {
      cfg.volume_order = parse_number<int>(value, line_no, key);
    } else if (key == "edge_order") {
      cfg.edge_order = parse_number<int>(value, line_no, key);
    } else if (key == "sat_order") {
      cfg.sat_order = parse_number<int>(value, line_no, key);
    } else if (key == "mass_mode") {
      cfg.mass_mode = parse_enum(parse_mass_mode, value, line_no);
    } else if (key == "correction") {
      cfg.correction = parse_bool(value, line_no, key);
    } else if (key == "sat_mode") {
      if (value == "off") {
        cfg.sat_mode.reset();
      } else {
        cfg.sat_mode = parse_enum(parse_boundary_eval, value, line_no);
      }
    } else if (key == "cfl") {
      cfg.cfl = parse_number<double>(value, line_no, key);
    } else if (key == "time_scheme") {
      cfg.time_scheme = parse_enum(parse_time_scheme, value, line_no);
    } else if (key == "t_end") {
      cfg.t_end = parse_number<double>(value, line_no, key);
    } else if (key == "max_steps") {
      cfg.max_steps = parse_number<long>(value, line_no, key);
    } else if (key == "output_every") {
      cfg.output_every = parse_number<long>(value, line_no, key);
    } else if (key == "mesh_n") {
      cfg.mesh_n = parse_number<int>(value, line_no, key);
    } else if (key == "mesh_file") {
      std::filesystem::path p{std::string(value)};
      cfg.mesh_file = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    } else if (key == "out_dir") {
      std::filesystem::path p{std::string(value)};
      cfg.out_dir = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (cfg.scenario.empty()) throw ValidationError("missing required key 'scenario'");
  validate(cfg);
  return cfg;
}

SchemeConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path.string() + "': file not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str(), path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message() + " (in '" + path.string() + "')");
  }
}

void validate(const SchemeConfig& c) {
  if (c.degree < kMinDegree || c.degree > kMaxDegree) {
    throw ValidationError("degree must be within [" + std::to_string(kMinDegree) + ", " +
                          std::to_string(kMaxDegree) + "]");
  }
  const auto check_order = [](int order, const char* key) {
    if (order < 1 || order > kMaxQuadratureOrder) {
      throw ValidationError(std::string(key) + " must be within [1, " + std::to_string(kMaxQuadratureOrder) + "]");
    }
  };
  if (c.volume_order) check_order(*c.volume_order, "volume_order");
  if (c.edge_order) check_order(*c.edge_order, "edge_order");
  if (c.sat_mode) {
    try {
      validate(BoundaryOperatorSpec{*c.sat_mode, c.sat_order});
    } catch (const ConfigError& e) {
      throw ValidationError(e.what());
    }
  }
  require_positive(c.cfl, "cfl");
  if (c.t_end) require_positive(*c.t_end, "t_end");
  if (c.max_steps) require_positive(static_cast<double>(*c.max_steps), "max_steps");
  require_positive(static_cast<double>(c.output_every), "output_every");
  if (c.mesh_n) require_positive(*c.mesh_n, "mesh_n");
  if (c.mesh_n && !c.mesh_file.empty()) throw ValidationError("mesh_n and mesh_file are mutually exclusive");
}

}  // namespace cgsat
