#pragma once

#include <Eigen/Dense>

namespace cgsat {

/// Global 1D operators of continuous Lagrange P_p elements on a uniform
/// partition of [0,1]: M_ij = int phi_j phi_i and Q_ij = int phi_j' phi_i.
/// DoFs are numbered left to right, so DoF 0 sits at x=0 and DoF N at x=1.
struct Operators1D {
  Eigen::MatrixXd mass;
  Eigen::MatrixXd q;
};

/// Throws ConfigError for p outside [1,4] or n_elements < 1.
Operators1D build_1d_operators(int degree, int n_elements);

/// Boundary matrix B = diag(-1, 0, ..., 0, 1) that Q + Q^T reproduces.
Eigen::MatrixXd boundary_matrix(Eigen::Index size);

/// Penalty matrix tau * E_00 (penalty on the inflow DoF at x=0).
Eigen::MatrixXd inflow_penalty(Eigen::Index size, double tau);

inline constexpr double kCertificateTolerance = 1e-12;

/// Eigen-decomposition of T = (Pi + Pi^T) - (Q a + (Q a)^T).
/// The semidiscretisation M u' + a Q u = Pi u is energy stable when T has no
/// positive eigenvalue; `stable` uses the tolerance kCertificateTolerance.
struct StabilityCertificate {
  Eigen::MatrixXd test_matrix;
  Eigen::VectorXd eigenvalues;  // ascending
  double max_eigenvalue = 0.0;
  bool stable = false;
};

/// Throws ValidationError if shapes disagree or M is not symmetric within 1e-12.
StabilityCertificate certify(const Eigen::MatrixXd& mass, const Eigen::MatrixXd& q, double speed,
                             const Eigen::MatrixXd& penalty);

}  // namespace cgsat
