#pragma once

#include <array>
#include <cmath>

namespace cgsat {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Barycentric coordinates (lambda_0, lambda_1, lambda_2) on a triangle.
using Barycentric = std::array<double, 3>;

/// Affine triangle: vertex positions, signed area and the constant gradients
/// of the barycentric coordinate functions.
///
/// Local edge e runs from vertex e to vertex (e+1)%3; for a counter-clockwise
/// triangle its outward normal is the edge direction rotated clockwise.
class TriangleGeometry {
 public:
  TriangleGeometry() = default;

  /// Throws GeometryError if the signed area is below 1e-14.
  static TriangleGeometry from_vertices(Vec2 a, Vec2 b, Vec2 c);

  const std::array<Vec2, 3>& vertices() const { return vertices_; }
  double area() const { return area_; }
  const std::array<Vec2, 3>& grad_lambda() const { return grad_lambda_; }

  Vec2 map(const Barycentric& l) const {
    return l[0] * vertices_[0] + l[1] * vertices_[1] + l[2] * vertices_[2];
  }

  double edge_length(int e) const;
  Vec2 outward_normal(int e) const;
  Vec2 edge_midpoint(int e) const;
  double perimeter() const;
  double inradius() const { return 2.0 * area_ / perimeter(); }

 private:
  std::array<Vec2, 3> vertices_{};
  std::array<Vec2, 3> grad_lambda_{};
  double area_ = 0.0;
};

/// Barycentric coordinates of the point at parameter t in [0,1] along local edge e.
inline Barycentric edge_point(int e, double t) {
  Barycentric l{0.0, 0.0, 0.0};
  l[static_cast<std::size_t>(e)] = 1.0 - t;
  l[static_cast<std::size_t>((e + 1) % 3)] = t;
  return l;
}

}  // namespace cgsat
