#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/SparseCore>

#include "cgsat/basis.hpp"
#include "cgsat/mesh.hpp"

namespace cgsat {

/// exact: quadrature of order 2p (products integrated exactly).
/// under_integrated: order 2p-1, which misintegrates only the top-degree products.
enum class MassMode { exact, under_integrated };

MassMode parse_mass_mode(std::string_view name);
std::string_view to_string(MassMode mode);

struct MassMatrix {
  Eigen::SparseMatrix<double> matrix;
  MassMode mode = MassMode::exact;
  int quadrature_order = 0;
};

/// Consistent (never lumped) mass matrix M_ij = int phi_i phi_j.
MassMatrix assemble_mass(const Mesh& mesh, const Basis& basis, MassMode mode);

/// Sparse LDL^T factorisation of a mass matrix, reused across solves.
/// Solves are checked to relative residual 1e-12 with up to three steps of
/// iterative refinement; failure throws NumericalError with the residual.
class MassSolver {
 public:
  explicit MassSolver(const MassMatrix& mass);
  ~MassSolver();
  MassSolver(MassSolver&&) noexcept;
  MassSolver& operator=(MassSolver&&) noexcept;

  std::size_t size() const;
  void solve(std::span<const double> rhs, std::span<double> out) const;
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience: factorise and solve once.
std::vector<double> apply_inverse_mass(const MassMatrix& mass, std::span<const double> rhs);

/// y = M x.
std::vector<double> multiply(const MassMatrix& mass, std::span<const double> x);

}  // namespace cgsat
