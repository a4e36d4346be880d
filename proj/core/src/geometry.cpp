#include "cgsat/geometry.hpp"

#include <sstream>

#include "cgsat/errors.hpp"

namespace cgsat {

TriangleGeometry TriangleGeometry::from_vertices(Vec2 a, Vec2 b, Vec2 c) {
  TriangleGeometry g;
  g.vertices_ = {a, b, c};
  g.area_ = 0.5 * cross(b - a, c - a);
  if (!(g.area_ >= 1e-14)) {
    std::ostringstream msg;
    msg << "degenerate or clockwise triangle (signed area " << g.area_ << ")";
    throw GeometryError(msg.str());
  }
  const double inv = 1.0 / (2.0 * g.area_);
  for (int i = 0; i < 3; ++i) {
    const Vec2 pj = g.vertices_[static_cast<std::size_t>((i + 1) % 3)];
    const Vec2 pk = g.vertices_[static_cast<std::size_t>((i + 2) % 3)];
    g.grad_lambda_[static_cast<std::size_t>(i)] = Vec2{pj.y - pk.y, pk.x - pj.x} * inv;
  }
  return g;
}

double TriangleGeometry::edge_length(int e) const {
  const Vec2 a = vertices_[static_cast<std::size_t>(e)];
  const Vec2 b = vertices_[static_cast<std::size_t>((e + 1) % 3)];
  return norm(b - a);
}

Vec2 TriangleGeometry::outward_normal(int e) const {
  const Vec2 d = vertices_[static_cast<std::size_t>((e + 1) % 3)] - vertices_[static_cast<std::size_t>(e)];
  const double len = norm(d);
  return Vec2{d.y / len, -d.x / len};
}

Vec2 TriangleGeometry::edge_midpoint(int e) const {
  return 0.5 * (vertices_[static_cast<std::size_t>(e)] + vertices_[static_cast<std::size_t>((e + 1) % 3)]);
}

double TriangleGeometry::perimeter() const { return edge_length(0) + edge_length(1) + edge_length(2); }

}  // namespace cgsat
