#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cgsat/mass.hpp"
#include "cgsat/sat.hpp"
#include "cgsat/spatial.hpp"

namespace cgsat {

struct SchemeOptions {
  bool correction = true;
  /// Weak boundary treatment; nullopt disables the SAT term.
  std::optional<BoundaryOperatorSpec> sat = BoundaryOperatorSpec{};
};

/// Per-evaluation statistics of the entropy correction.
struct CorrectionStats {
  double max_abs_entropy_error = 0.0;
  std::size_t degenerate_elements = 0;
};

/// Right-hand side of M du/dt = -sum_K (Phi^K + r^K) + SAT.
/// The correction is recomputed from whatever state is passed in, so each
/// Runge-Kutta stage sees its own correction.
class SemiDiscretization {
 public:
  SemiDiscretization(const SpatialOperator& op, const MassSolver& mass, SchemeOptions options);

  const SpatialOperator& spatial() const { return *op_; }
  const SchemeOptions& options() const { return options_; }

  /// -F_hat + SAT (before the mass solve).
  std::vector<double> residual(std::span<const double> state, CorrectionStats* stats = nullptr) const;

  /// du/dt = M^{-1} (-F_hat + SAT).
  void operator()(std::span<const double> state, std::span<double> dudt) const;

 private:
  const SpatialOperator* op_;
  const MassSolver* mass_;
  SchemeOptions options_;
};

}  // namespace cgsat
