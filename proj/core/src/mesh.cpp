#include "cgsat/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

#include "cgsat/basis.hpp"
#include "cgsat/errors.hpp"

namespace cgsat {
namespace {

std::string edge_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

struct EdgeRecord {
  std::size_t id = 0;
  int uses = 0;
  // orientation of the first use: true if traversed from lower to higher vertex
  bool first_forward = true;
};

}  // namespace

Mesh Mesh::from_triangulation(std::vector<Vec2> vertices, std::vector<Triangle> triangles, int degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw ConfigError("mesh degree " + std::to_string(degree) + " outside supported range [1, 4]");
  }
  if (triangles.empty()) throw ValidationError("mesh has no triangles");

  Mesh mesh;
  mesh.degree_ = degree;
  mesh.stride_ = dofs_per_triangle(degree);
  mesh.vertices_ = std::move(vertices);
  mesh.triangles_ = std::move(triangles);

  const std::size_t nv = mesh.vertices_.size();
  std::vector<bool> referenced(nv, false);
  mesh.geometry_.reserve(mesh.triangles_.size());
  for (std::size_t t = 0; t < mesh.triangles_.size(); ++t) {
    const auto& tri = mesh.triangles_[t];
    for (auto v : tri) {
      if (v >= nv) {
        throw ValidationError("triangle " + std::to_string(t) + " references vertex " + std::to_string(v) +
                              " but only " + std::to_string(nv) + " vertices exist");
      }
      referenced[v] = true;
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw ValidationError("triangle " + std::to_string(t) + " repeats a vertex");
    }
    try {
      mesh.geometry_.push_back(
          TriangleGeometry::from_vertices(mesh.vertices_[tri[0]], mesh.vertices_[tri[1]], mesh.vertices_[tri[2]]));
    } catch (const GeometryError& e) {
      throw ValidationError("triangle " + std::to_string(t) + ": " + e.what());
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!referenced[v]) throw ValidationError("vertex " + std::to_string(v) + " is not used by any triangle");
  }

  // Edge table keyed by (lower, higher) vertex index.
  std::map<std::pair<std::size_t, std::size_t>, EdgeRecord> edges;
  for (const auto& tri : mesh.triangles_) {
    for (int e = 0; e < 3; ++e) {
      const std::size_t a = tri[static_cast<std::size_t>(e)];
      const std::size_t b = tri[static_cast<std::size_t>((e + 1) % 3)];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = edges.try_emplace({key.first, key.second});
      auto& rec = it->second;
      if (inserted) {
        rec.id = edges.size() - 1;
        rec.first_forward = a < b;
      } else if (rec.first_forward == (a < b)) {
        throw ValidationError("edge " + edge_name(key.first, key.second) +
                              " is traversed in the same direction by two triangles (inconsistent orientation)");
      }
      if (++rec.uses > 2) {
        throw ValidationError("edge " + edge_name(key.first, key.second) + " is shared by more than two triangles");
      }
    }
  }

  const int p = degree;
  const std::size_t per_edge = static_cast<std::size_t>(p - 1);
  const std::size_t per_interior = mesh.stride_ - 3 - 3 * per_edge;
  const std::size_t edge_offset = nv;
  const std::size_t interior_offset = nv + edges.size() * per_edge;
  const std::size_t ndofs = interior_offset + mesh.triangles_.size() * per_interior;

  mesh.dof_coords_.assign(ndofs, Vec2{});
  mesh.element_dofs_.resize(mesh.triangles_.size() * mesh.stride_);
  const auto layout = reference_multi_indices(p);

  for (std::size_t t = 0; t < mesh.triangles_.size(); ++t) {
    const auto& tri = mesh.triangles_[t];
    std::size_t* dofs = mesh.element_dofs_.data() + t * mesh.stride_;
    std::size_t local = 0;
    for (int v = 0; v < 3; ++v) dofs[local++] = tri[static_cast<std::size_t>(v)];
    for (int e = 0; e < 3; ++e) {
      const std::size_t a = tri[static_cast<std::size_t>(e)];
      const std::size_t b = tri[static_cast<std::size_t>((e + 1) % 3)];
      const auto key = std::minmax(a, b);
      const std::size_t base = edge_offset + edges.at({key.first, key.second}).id * per_edge;
      for (std::size_t k = 0; k < per_edge; ++k) {
        dofs[local++] = a < b ? base + k : base + per_edge - 1 - k;
      }
    }
    for (std::size_t k = 0; k < per_interior; ++k) dofs[local++] = interior_offset + t * per_interior + k;

    for (std::size_t s = 0; s < mesh.stride_; ++s) {
      const auto& m = layout[s];
      const Barycentric l{m[0] / double(p), m[1] / double(p), m[2] / double(p)};
      mesh.dof_coords_[dofs[s]] = mesh.geometry_[t].map(l);
    }
  }

  for (std::size_t t = 0; t < mesh.triangles_.size(); ++t) {
    const auto& tri = mesh.triangles_[t];
    for (int e = 0; e < 3; ++e) {
      const std::size_t a = tri[static_cast<std::size_t>(e)];
      const std::size_t b = tri[static_cast<std::size_t>((e + 1) % 3)];
      const auto key = std::minmax(a, b);
      if (edges.at({key.first, key.second}).uses == 1) {
        const auto& g = mesh.geometry_[t];
        mesh.boundary_faces_.push_back(BoundaryFace{t, e, g.outward_normal(e), g.edge_length(e)});
      }
    }
  }
  return mesh;
}

double Mesh::area() const {
  double a = 0.0;
  for (const auto& g : geometry_) a += g.area();
  return a;
}

double Mesh::min_inradius_diameter() const {
  double h = std::numeric_limits<double>::infinity();
  for (const auto& g : geometry_) h = std::min(h, 2.0 * g.inradius());
  return h;
}

Mesh generate_square_mesh(int n, int degree) {
  if (n < 1) throw ConfigError("square mesh needs n >= 1 subdivisions");
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw ConfigError("mesh degree " + std::to_string(degree) + " outside supported range [1, 4]");
  }
  const auto N = static_cast<std::size_t>(n);
  std::vector<Vec2> vertices;
  vertices.reserve((N + 1) * (N + 1));
  for (std::size_t j = 0; j <= N; ++j) {
    for (std::size_t i = 0; i <= N; ++i) vertices.push_back({double(i) / n, double(j) / n});
  }
  const auto id = [N](std::size_t i, std::size_t j) { return j * (N + 1) + i; };
  std::vector<Triangle> triangles;
  triangles.reserve(2 * N * N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < N; ++i) {
      triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return Mesh::from_triangulation(std::move(vertices), std::move(triangles), degree);
}

Mesh generate_disk_mesh(int rings, int degree) {
  if (rings < 1) throw ConfigError("disk mesh needs at least one ring");
  std::vector<Vec2> vertices{{0.0, 0.0}};
  std::vector<std::size_t> ring_start{0};
  for (int i = 1; i <= rings; ++i) {
    ring_start.push_back(vertices.size());
    const double r = double(i) / rings;
    for (int k = 0; k < 6 * i; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / (6.0 * i);
      vertices.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
  }
  const auto ring_vertex = [&](int ring, int k) -> std::size_t {
    if (ring == 0) return 0;
    const int count = 6 * ring;
    return ring_start[static_cast<std::size_t>(ring)] + static_cast<std::size_t>(((k % count) + count) % count);
  };

  std::vector<Triangle> triangles;
  for (int i = 1; i <= rings; ++i) {
    for (int s = 0; s < 6; ++s) {
      for (int j = 0; j < i; ++j) {
        triangles.push_back({ring_vertex(i - 1, s * (i - 1) + j), ring_vertex(i, s * i + j),
                             ring_vertex(i, s * i + j + 1)});
      }
      for (int j = 0; j + 1 < i; ++j) {
        triangles.push_back({ring_vertex(i - 1, s * (i - 1) + j), ring_vertex(i, s * i + j + 1),
                             ring_vertex(i - 1, s * (i - 1) + j + 1)});
      }
    }
  }
  return Mesh::from_triangulation(std::move(vertices), std::move(triangles), degree);
}

Mesh import_mesh(std::string_view text, int degree) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  // Next non-blank, non-comment line split into a stream; false at end of input.
  const auto next = [&](std::istringstream& fields) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fields.clear();
      fields.str(line);
      return true;
    }
    return false;
  };
  const auto expect_end = [&](std::istringstream& fields) {
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
  };

  std::istringstream fields;
  if (!next(fields)) throw ParseError(line_no + 1, "missing header line `nv nt`");
  long long nv = -1;
  long long nt = -1;
  if (!(fields >> nv >> nt) || nv < 3 || nt < 1) {
    throw ParseError(line_no, "header must be `nv nt` with nv >= 3 and nt >= 1");
  }
  expect_end(fields);

  std::vector<Vec2> vertices;
  vertices.reserve(static_cast<std::size_t>(nv));
  for (long long v = 0; v < nv; ++v) {
    if (!next(fields)) throw ParseError(line_no + 1, "expected vertex " + std::to_string(v) + " as `x y`");
    Vec2 p;
    if (!(fields >> p.x >> p.y)) throw ParseError(line_no, "vertex line must be `x y`");
    expect_end(fields);
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ParseError(line_no, "non-finite vertex coordinate");
    vertices.push_back(p);
  }

  std::vector<Triangle> triangles;
  triangles.reserve(static_cast<std::size_t>(nt));
  for (long long t = 0; t < nt; ++t) {
    if (!next(fields)) throw ParseError(line_no + 1, "expected triangle " + std::to_string(t) + " as `i j k`");
    long long i = -1;
    long long j = -1;
    long long k = -1;
    if (!(fields >> i >> j >> k)) throw ParseError(line_no, "triangle line must be `i j k`");
    expect_end(fields);
    if (i < 0 || j < 0 || k < 0) throw ParseError(line_no, "negative vertex index");
    triangles.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k)});
  }
  if (next(fields)) throw ParseError(line_no, "unexpected content after the last triangle");

  return Mesh::from_triangulation(std::move(vertices), std::move(triangles), degree);
}

Mesh load_mesh(const std::string& path, int degree) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return import_mesh(buf.str(), degree);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message() + " (in '" + path + "')");
  }
}

std::string export_mesh(const Mesh& mesh) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "# cgsat triangulation\n" << mesh.num_vertices() << ' ' << mesh.num_elements() << '\n';
  for (const auto& v : mesh.vertices()) out << v.x << ' ' << v.y << '\n';
  for (const auto& t : mesh.triangles()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

std::vector<BoundaryFace> boundary_faces_with_normals(const Mesh& mesh) {
  const auto faces = mesh.boundary_faces();
  return {faces.begin(), faces.end()};
}

}  // namespace cgsat
