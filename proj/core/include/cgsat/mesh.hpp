#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgsat/geometry.hpp"

namespace cgsat {

/// A boundary edge: owning element, its local edge index, outward unit normal, length.
struct BoundaryFace {
  std::size_t element = 0;
  int local_edge = 0;
  Vec2 normal;
  double length = 0.0;
};

using Triangle = std::array<std::size_t, 3>;

/// Conformal triangulation with a continuous degree-p DoF layout.
///
/// Global DoF numbering: vertex DoFs first (DoF i is vertex i), then p-1 DoFs
/// per edge running from the lower to the higher vertex index, then the
/// interior DoFs of each element. Element DoF lists follow
/// reference_multi_indices(p), so a shared edge appears in reversed local
/// order in its two triangles. Immutable after construction.
class Mesh {
 public:
  /// Validates and builds the DoF layout. Throws ValidationError for
  /// out-of-range or unreferenced vertices, non-positive triangle area, an
  /// edge shared by more than two triangles, or inconsistently oriented
  /// neighbours; ConfigError for degree outside [1, 4].
  static Mesh from_triangulation(std::vector<Vec2> vertices, std::vector<Triangle> triangles, int degree);

  int degree() const { return degree_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_elements() const { return triangles_.size(); }
  std::size_t num_dofs() const { return dof_coords_.size(); }
  std::size_t dofs_per_element() const { return stride_; }

  std::span<const Vec2> vertices() const { return vertices_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::span<const Vec2> dof_coordinates() const { return dof_coords_; }
  std::span<const BoundaryFace> boundary_faces() const { return boundary_faces_; }

  std::span<const std::size_t> element_dofs(std::size_t element) const {
    return {element_dofs_.data() + element * stride_, stride_};
  }
  const TriangleGeometry& geometry(std::size_t element) const { return geometry_[element]; }

  /// Total area of the triangulation.
  double area() const;
  /// Smallest inscribed-circle diameter over all elements.
  double min_inradius_diameter() const;

 private:
  Mesh() = default;

  int degree_ = 1;
  std::size_t stride_ = 0;
  std::vector<Vec2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<TriangleGeometry> geometry_;
  std::vector<std::size_t> element_dofs_;
  std::vector<Vec2> dof_coords_;
  std::vector<BoundaryFace> boundary_faces_;
};

/// Uniform triangulation of [0,1]^2: n x n cells, each split along the
/// lower-left to upper-right diagonal (2 n^2 triangles, (np+1)^2 DoFs).
Mesh generate_square_mesh(int n, int degree);

/// Unit-disk triangulation by concentric rings: ring i has 6i vertices on the
/// circle of radius i/rings, giving 6 rings^2 triangles. Boundary edges are chords.
Mesh generate_disk_mesh(int rings, int degree);

/// Parses the ASCII vertex/triangle format:
///   line 1 `nv nt`, then nv lines `x y`, then nt lines `i j k` (0-based, CCW).
/// Lines starting with '#' and blank lines are ignored.
/// Throws ParseError (with line number) for malformed text and ValidationError
/// for invalid connectivity.
Mesh import_mesh(std::string_view text, int degree);

/// Reads a mesh file; I/O failures are reported with the path.
Mesh load_mesh(const std::string& path, int degree);

/// Serialises the vertex/triangle part of a mesh in the import format.
std::string export_mesh(const Mesh& mesh);

/// Boundary faces with outward unit normals and lengths.
std::vector<BoundaryFace> boundary_faces_with_normals(const Mesh& mesh);

}  // namespace cgsat
