#include "cgsat/certify.hpp"

#include <string>
#include <vector>

#include "cgsat/errors.hpp"
#include "cgsat/quadrature.hpp"

namespace cgsat {
namespace {

// Equispaced Lagrange basis on [0,1]: values and derivatives at t.
void lagrange_1d(int p, double t, std::vector<double>& phi, std::vector<double>& dphi) {
  phi.assign(static_cast<std::size_t>(p + 1), 0.0);
  dphi.assign(static_cast<std::size_t>(p + 1), 0.0);
  for (int i = 0; i <= p; ++i) {
    const double xi = double(i) / p;
    double value = 1.0;
    double deriv = 0.0;
    for (int j = 0; j <= p; ++j) {
      if (j == i) continue;
      const double xj = double(j) / p;
      const double f = (t - xj) / (xi - xj);
      deriv = deriv * f + value / (xi - xj);
      value *= f;
    }
    phi[static_cast<std::size_t>(i)] = value;
    dphi[static_cast<std::size_t>(i)] = deriv;
  }
}

}  // namespace

Operators1D build_1d_operators(int degree, int n_elements) {
  if (degree < 1 || degree > 4) throw ConfigError("1D degree " + std::to_string(degree) + " outside [1, 4]");
  if (n_elements < 1) throw ConfigError("need at least one element");
  const Eigen::Index ndofs = static_cast<Eigen::Index>(degree) * n_elements + 1;
  Operators1D ops{Eigen::MatrixXd::Zero(ndofs, ndofs), Eigen::MatrixXd::Zero(ndofs, ndofs)};
  const double h = 1.0 / n_elements;
  // p+1 Gauss points integrate the degree-2p mass products exactly.
  const SegmentRule rule = gauss_legendre(degree + 1);
  std::vector<double> phi;
  std::vector<double> dphi;
  for (int e = 0; e < n_elements; ++e) {
    const Eigen::Index base = static_cast<Eigen::Index>(e) * degree;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      lagrange_1d(degree, rule.points[q], phi, dphi);
      const double w = rule.weights[q];
      for (int i = 0; i <= degree; ++i) {
        for (int j = 0; j <= degree; ++j) {
          const auto ii = static_cast<std::size_t>(i);
          const auto jj = static_cast<std::size_t>(j);
          ops.mass(base + i, base + j) += w * h * phi[ii] * phi[jj];
          // d/dx = (1/h) d/dt, dx = h dt
          ops.q(base + i, base + j) += w * dphi[jj] * phi[ii];
        }
      }
    }
  }
  return ops;
}

Eigen::MatrixXd boundary_matrix(Eigen::Index size) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(size, size);
  b(0, 0) = -1.0;
  b(size - 1, size - 1) = 1.0;
  return b;
}

Eigen::MatrixXd inflow_penalty(Eigen::Index size, double tau) {
  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(size, size);
  pi(0, 0) = tau;
  return pi;
}

StabilityCertificate certify(const Eigen::MatrixXd& mass, const Eigen::MatrixXd& q, double speed,
                             const Eigen::MatrixXd& penalty) {
  const Eigen::Index n = q.rows();
  if (q.cols() != n || mass.rows() != n || mass.cols() != n || penalty.rows() != n || penalty.cols() != n) {
    throw ValidationError("certify: matrix shapes disagree");
  }
  if ((mass - mass.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("certify: mass matrix is not symmetric");
  }
  StabilityCertificate cert;
  const Eigen::MatrixXd qa = speed * q;
  cert.test_matrix = (penalty + penalty.transpose()) - (qa + qa.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cert.test_matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("certify: eigenvalue computation failed");
  cert.eigenvalues = solver.eigenvalues();
  cert.max_eigenvalue = cert.eigenvalues.maxCoeff();
  cert.stable = cert.max_eigenvalue <= kCertificateTolerance;
  return cert;
}

}  // namespace cgsat
