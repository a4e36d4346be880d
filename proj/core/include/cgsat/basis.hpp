#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cgsat/geometry.hpp"

namespace cgsat {

enum class BasisFamily { lagrange, bernstein };

BasisFamily parse_basis_family(std::string_view name);
std::string_view to_string(BasisFamily family);

/// Barycentric exponent triple (i, j, k) with i + j + k = p.
using MultiIndex = std::array<int, 3>;

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 4;

/// Reference DoF layout shared by the mesh and the basis:
/// the three vertices, then p-1 points per local edge e (running from vertex e
/// to vertex (e+1)%3), then the interior points.
std::vector<MultiIndex> reference_multi_indices(int degree);

/// Number of DoFs of a degree-p triangle, (p+1)(p+2)/2.
constexpr std::size_t dofs_per_triangle(int degree) {
  return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

/// Lagrange (equispaced nodes) or Bernstein basis of P^p on the reference triangle.
class Basis {
 public:
  /// Throws ConfigError for degree outside [1, 4].
  Basis(BasisFamily family, int degree);

  BasisFamily family() const { return family_; }
  int degree() const { return degree_; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<MultiIndex>& multi_indices() const { return indices_; }

  /// Equispaced reference points, one per DoF, in DoF order.
  std::vector<Barycentric> reference_points() const;

  /// Local position of the given multi-index; throws ValidationError if absent.
  std::size_t local_index(const MultiIndex& m) const;

  /// Values of all basis functions. No domain check; `out` has size().
  void eval(const Barycentric& l, std::span<double> out) const;

  /// Partial derivatives with respect to (lambda_0, lambda_1, lambda_2),
  /// treating the coordinates as independent.
  void eval_barycentric_derivatives(const Barycentric& l, std::span<std::array<double, 3>> out) const;

 private:
  BasisFamily family_;
  int degree_;
  std::vector<MultiIndex> indices_;
  std::vector<double> bernstein_coeff_;
};

/// Basis values at a point of the reference triangle.
/// Throws DomainError if the barycentric coordinates are negative or do not
/// sum to one (tolerance 1e-12).
std::vector<double> eval_basis(const Basis& basis, const Barycentric& point);

/// Physical-space gradients on an affine triangle.
std::vector<Vec2> eval_gradients(const Basis& basis, const Barycentric& point, const TriangleGeometry& geometry);

/// Basis values and barycentric derivatives tabulated at a fixed point set.
class Tabulation {
 public:
  Tabulation() = default;
  Tabulation(const Basis& basis, std::span<const Barycentric> points);

  std::size_t num_points() const { return num_points_; }
  std::size_t num_basis() const { return num_basis_; }

  std::span<const double> values(std::size_t q) const {
    return {values_.data() + q * num_basis_, num_basis_};
  }
  std::span<const std::array<double, 3>> derivatives(std::size_t q) const {
    return {derivs_.data() + q * num_basis_, num_basis_};
  }

 private:
  std::size_t num_points_ = 0;
  std::size_t num_basis_ = 0;
  std::vector<double> values_;
  std::vector<std::array<double, 3>> derivs_;
};

inline Vec2 physical_gradient(const std::array<double, 3>& d, const std::array<Vec2, 3>& grad_lambda) {
  return d[0] * grad_lambda[0] + d[1] * grad_lambda[1] + d[2] * grad_lambda[2];
}

}  // namespace cgsat
