#pragma once

#include <vector>

#include "cgsat/geometry.hpp"

namespace cgsat {

/// Largest polynomial exactness degree available from triangle_rule/segment_rule.
inline constexpr int kMaxQuadratureOrder = 16;

/// Quadrature on the reference triangle (0,0),(1,0),(0,1). Weights sum to 1/2.
struct TriangleRule {
  std::vector<Barycentric> points;
  std::vector<double> weights;
  int degree = 0;
};

/// Quadrature on the unit segment [0,1]. Weights sum to 1.
struct SegmentRule {
  std::vector<double> points;
  std::vector<double> weights;
  int degree = 0;
};

/// n-point Gauss-Legendre rule mapped to [0,1].
SegmentRule gauss_legendre(int n);

/// Gauss-Legendre rule exact for polynomials of degree <= order.
/// Throws ConfigError for order outside [1, kMaxQuadratureOrder].
const SegmentRule& segment_rule(int order);

/// Collapsed (Duffy) Gauss product rule exact for total degree <= order.
/// All weights are positive and all points interior.
/// Throws ConfigError for order outside [1, kMaxQuadratureOrder].
const TriangleRule& triangle_rule(int order);

}  // namespace cgsat
