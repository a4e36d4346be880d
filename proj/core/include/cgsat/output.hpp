#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgsat/basis.hpp"
#include "cgsat/mesh.hpp"

namespace cgsat {

struct EntropyRecord {
  double time = 0.0;
  double entropy = 0.0;
  double change = 0.0;
  double min_u = 0.0;
  double max_u = 0.0;

  bool operator==(const EntropyRecord&) const = default;
};

struct EntropyReport {
  std::vector<EntropyRecord> rows;
};

inline constexpr std::string_view kEntropyCsvHeader = "time,entropy,entropy_change,min_u,max_u";

std::string format_entropy_csv(const EntropyReport& report);
EntropyReport parse_entropy_csv(std::string_view text);
void write_entropy_csv(const EntropyReport& report, const std::filesystem::path& path);
EntropyReport read_entropy_csv(const std::filesystem::path& path);

/// Legacy ASCII unstructured grid: points at the DoF coordinates, each
/// element split into p^2 linear triangles, point data `u` holding nodal values.
std::string format_vtk(const Mesh& mesh, const Basis& basis, std::span<const double> state);
void write_vtk(const Mesh& mesh, const Basis& basis, std::span<const double> state,
               const std::filesystem::path& path);

}  // namespace cgsat
