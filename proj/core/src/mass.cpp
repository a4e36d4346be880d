#include "cgsat/mass.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/SparseCholesky>

#include "cgsat/errors.hpp"
#include "cgsat/quadrature.hpp"

namespace cgsat {

MassMode parse_mass_mode(std::string_view name) {
  if (name == "exact") return MassMode::exact;
  if (name == "under_integrated") return MassMode::under_integrated;
  throw ConfigError("unknown mass mode '" + std::string(name) + "' (expected exact or under_integrated)");
}

std::string_view to_string(MassMode mode) { return mode == MassMode::exact ? "exact" : "under_integrated"; }

MassMatrix assemble_mass(const Mesh& mesh, const Basis& basis, MassMode mode) {
  if (basis.degree() != mesh.degree()) throw ConfigError("basis degree does not match mesh degree");
  const int p = basis.degree();
  MassMatrix out;
  out.mode = mode;
  out.quadrature_order = mode == MassMode::exact ? 2 * p : 2 * p - 1;
  const auto& rule = triangle_rule(out.quadrature_order);
  const Tabulation table(basis, rule.points);
  const std::size_t n = basis.size();

  std::vector<double> local(n * n);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(mesh.num_elements() * n * n);
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    std::fill(local.begin(), local.end(), 0.0);
    const double jac = 2.0 * mesh.geometry(k).area();
    for (std::size_t q = 0; q < table.num_points(); ++q) {
      const auto phi = table.values(q);
      const double w = rule.weights[q] * jac;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) local[i * n + j] += w * phi[i] * phi[j];
      }
    }
    const auto dofs = mesh.element_dofs(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        triplets.emplace_back(static_cast<int>(dofs[i]), static_cast<int>(dofs[j]), local[i * n + j]);
      }
    }
  }
  const auto ndofs = static_cast<Eigen::Index>(mesh.num_dofs());
  out.matrix.resize(ndofs, ndofs);
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  out.matrix.makeCompressed();
  return out;
}

struct MassSolver::Impl {
  Eigen::SparseMatrix<double> matrix;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
};

MassSolver::MassSolver(const MassMatrix& mass) : impl_(std::make_unique<Impl>()) {
  impl_->matrix = mass.matrix;
  impl_->ldlt.compute(impl_->matrix);
  if (impl_->ldlt.info() != Eigen::Success) throw NumericalError("mass matrix factorisation failed");
}

MassSolver::~MassSolver() = default;
MassSolver::MassSolver(MassSolver&&) noexcept = default;
MassSolver& MassSolver::operator=(MassSolver&&) noexcept = default;

std::size_t MassSolver::size() const { return static_cast<std::size_t>(impl_->matrix.rows()); }

void MassSolver::solve(std::span<const double> rhs, std::span<double> out) const {
  const auto n = static_cast<Eigen::Index>(size());
  if (static_cast<Eigen::Index>(rhs.size()) != n || static_cast<Eigen::Index>(out.size()) != n) {
    throw ValidationError("mass solve: vector length does not match matrix size");
  }
  const Eigen::Map<const Eigen::VectorXd> b(rhs.data(), n);
  Eigen::Map<Eigen::VectorXd> x(out.data(), n);
  x = impl_->ldlt.solve(b);
  const double bnorm = b.norm();
  Eigen::VectorXd r = b - impl_->matrix * x;
  for (int it = 0; it < 3 && r.norm() > 1e-12 * bnorm; ++it) {
    x += impl_->ldlt.solve(r);
    r = b - impl_->matrix * x;
  }
  const double rel = bnorm > 0.0 ? r.norm() / bnorm : r.norm();
  if (!(rel <= 1e-12)) {
    std::ostringstream msg;
    msg << "mass solve did not reach relative residual 1e-12 (residual " << rel << ")";
    throw NumericalError(msg.str());
  }
}

std::vector<double> MassSolver::solve(std::span<const double> rhs) const {
  std::vector<double> out(rhs.size());
  solve(rhs, out);
  return out;
}

std::vector<double> apply_inverse_mass(const MassMatrix& mass, std::span<const double> rhs) {
  return MassSolver(mass).solve(rhs);
}

std::vector<double> multiply(const MassMatrix& mass, std::span<const double> x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (n != mass.matrix.cols()) throw ValidationError("mass multiply: vector length does not match matrix size");
  std::vector<double> y(x.size());
  Eigen::Map<Eigen::VectorXd>(y.data(), n) = mass.matrix * Eigen::Map<const Eigen::VectorXd>(x.data(), n);
  return y;
}

}  // namespace cgsat
