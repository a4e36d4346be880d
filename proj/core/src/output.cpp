#include "cgsat/output.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cgsat/errors.hpp"
#include "cgsat/interpolation.hpp"

namespace cgsat {
namespace {

void put(std::ostream& os, double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  os.write(buf.data(), res.ptr - buf.data());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string format_entropy_csv(const EntropyReport& report) {
  std::ostringstream os;
  os << kEntropyCsvHeader << '\n';
  for (const auto& r : report.rows) {
    put(os, r.time);
    os << ',';
    put(os, r.entropy);
    os << ',';
    put(os, r.change);
    os << ',';
    put(os, r.min_u);
    os << ',';
    put(os, r.max_u);
    os << '\n';
  }
  return os.str();
}

EntropyReport parse_entropy_csv(std::string_view text) {
  EntropyReport report;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kEntropyCsvHeader) throw ParseError(line_no, "unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    std::array<double, 5> v{};
    const char* p = line.data();
    const char* last = line.data() + line.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto [ptr, ec] = std::from_chars(p, last, v[i]);
      if (ec != std::errc{}) throw ParseError(line_no, "invalid number");
      p = ptr;
      if (i + 1 < v.size()) {
        if (p == last || *p != ',') throw ParseError(line_no, "expected 5 columns");
        ++p;
      }
    }
    if (p != last) throw ParseError(line_no, "trailing characters");
    report.rows.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  if (line_no == 0) throw ParseError(1, "missing CSV header");
  return report;
}

void write_entropy_csv(const EntropyReport& report, const std::filesystem::path& path) {
  write_file(path, format_entropy_csv(report));
}

EntropyReport read_entropy_csv(const std::filesystem::path& path) {
  try {
    return parse_entropy_csv(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message() + " (in '" + path.string() + "')");
  }
}

std::string format_vtk(const Mesh& mesh, const Basis& basis, std::span<const double> state) {
  if (state.size() != mesh.num_dofs()) throw ValidationError("state length does not match the mesh");
  const int p = mesh.degree();
  const auto values = nodal_values(mesh, basis, state);
  const auto coords = mesh.dof_coordinates();

  // local sub-triangles in multi-index space, independent of the element
  std::vector<std::array<std::size_t, 3>> sub;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; i + j < p; ++j) {
      const int k = p - i - j;
      sub.push_back({basis.local_index({i + 1, j, k - 1}), basis.local_index({i, j + 1, k - 1}),
                     basis.local_index({i, j, k})});
      if (i + j + 1 < p) {
        sub.push_back({basis.local_index({i + 1, j, k - 1}), basis.local_index({i + 1, j + 1, k - 2}),
                       basis.local_index({i, j + 1, k - 1})});
      }
    }
  }

  std::ostringstream os;
  os << "# vtk DataFile Version 3.0\ncgsat solution\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  os << "POINTS " << coords.size() << " double\n";
  for (const auto& c : coords) {
    put(os, c.x);
    os << ' ';
    put(os, c.y);
    os << " 0\n";
  }
  const std::size_t cells = mesh.num_elements() * sub.size();
  os << "CELLS " << cells << ' ' << 4 * cells << '\n';
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const auto dofs = mesh.element_dofs(k);
    for (const auto& t : sub) os << "3 " << dofs[t[0]] << ' ' << dofs[t[1]] << ' ' << dofs[t[2]] << '\n';
  }
  os << "CELL_TYPES " << cells << '\n';
  for (std::size_t c = 0; c < cells; ++c) os << "5\n";
  os << "POINT_DATA " << coords.size() << "\nSCALARS u double 1\nLOOKUP_TABLE default\n";
  for (double v : values) {
    put(os, v);
    os << '\n';
  }
  return os.str();
}

void write_vtk(const Mesh& mesh, const Basis& basis, std::span<const double> state,
               const std::filesystem::path& path) {
  write_file(path, format_vtk(mesh, basis, state));
}

}  // namespace cgsat
