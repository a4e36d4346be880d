#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cgsat/basis.hpp"
#include "cgsat/mesh.hpp"

namespace cgsat {

/// Coefficients of the interpolant of `f` at the equispaced DoF points.
/// For Bernstein bases the local nodal values are converted element by
/// element; traces on shared edges depend only on edge data, so the result
/// is continuous.
std::vector<double> interpolate(const Mesh& mesh, const Basis& basis, const std::function<double(Vec2)>& f);

/// u_h at a barycentric point of one element.
double evaluate(const Mesh& mesh, const Basis& basis, std::span<const double> state, std::size_t element,
                const Barycentric& point);

/// u_h at every DoF point (identity for Lagrange coefficients).
std::vector<double> nodal_values(const Mesh& mesh, const Basis& basis, std::span<const double> state);

}  // namespace cgsat
