#include "cgsat/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgsat/errors.hpp"

namespace cgsat {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Silvester's 1D factor prod_{m<i} (p*l - m)/(i - m) and its derivative in l.
void lagrange_factor(int i, int p, double l, double& value, double& deriv) {
  value = 1.0;
  deriv = 0.0;
  for (int m = 0; m < i; ++m) {
    const double scale = 1.0 / (i - m);
    const double f = (p * l - m) * scale;
    deriv = deriv * f + value * p * scale;
    value *= f;
  }
}

double int_pow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

BasisFamily parse_basis_family(std::string_view name) {
  if (name == "lagrange") return BasisFamily::lagrange;
  if (name == "bernstein") return BasisFamily::bernstein;
  throw ConfigError("unknown basis family '" + std::string(name) + "' (expected lagrange or bernstein)");
}

std::string_view to_string(BasisFamily family) {
  return family == BasisFamily::lagrange ? "lagrange" : "bernstein";
}

std::vector<MultiIndex> reference_multi_indices(int p) {
  std::vector<MultiIndex> out;
  out.reserve(dofs_per_triangle(p));
  out.push_back({p, 0, 0});
  out.push_back({0, p, 0});
  out.push_back({0, 0, p});
  for (int e = 0; e < 3; ++e) {
    for (int k = 1; k < p; ++k) {
      MultiIndex m{0, 0, 0};
      m[static_cast<std::size_t>(e)] = p - k;
      m[static_cast<std::size_t>((e + 1) % 3)] = k;
      out.push_back(m);
    }
  }
  for (int i = p - 2; i >= 1; --i) {
    for (int j = p - 1 - i; j >= 1; --j) out.push_back({i, j, p - i - j});
  }
  return out;
}

Basis::Basis(BasisFamily family, int degree) : family_(family), degree_(degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw ConfigError("basis degree " + std::to_string(degree) + " outside supported range [1, 4]");
  }
  indices_ = reference_multi_indices(degree);
  bernstein_coeff_.reserve(indices_.size());
  for (const auto& m : indices_) {
    bernstein_coeff_.push_back(factorial(degree) / (factorial(m[0]) * factorial(m[1]) * factorial(m[2])));
  }
}

std::vector<Barycentric> Basis::reference_points() const {
  std::vector<Barycentric> pts;
  pts.reserve(indices_.size());
  const double p = degree_;
  for (const auto& m : indices_) pts.push_back({m[0] / p, m[1] / p, m[2] / p});
  return pts;
}

std::size_t Basis::local_index(const MultiIndex& m) const {
  const auto it = std::find(indices_.begin(), indices_.end(), m);
  if (it == indices_.end()) throw ValidationError("multi-index not part of the reference layout");
  return static_cast<std::size_t>(it - indices_.begin());
}

void Basis::eval(const Barycentric& l, std::span<double> out) const {
  for (std::size_t s = 0; s < indices_.size(); ++s) {
    const auto& m = indices_[s];
    if (family_ == BasisFamily::lagrange) {
      double v = 1.0;
      for (std::size_t a = 0; a < 3; ++a) {
        double fa = 0.0;
        double da = 0.0;
        lagrange_factor(m[a], degree_, l[a], fa, da);
        v *= fa;
      }
      out[s] = v;
    } else {
      out[s] = bernstein_coeff_[s] * int_pow(l[0], m[0]) * int_pow(l[1], m[1]) * int_pow(l[2], m[2]);
    }
  }
}

void Basis::eval_barycentric_derivatives(const Barycentric& l, std::span<std::array<double, 3>> out) const {
  for (std::size_t s = 0; s < indices_.size(); ++s) {
    const auto& m = indices_[s];
    std::array<double, 3> f{};
    std::array<double, 3> d{};
    if (family_ == BasisFamily::lagrange) {
      for (std::size_t a = 0; a < 3; ++a) lagrange_factor(m[a], degree_, l[a], f[a], d[a]);
    } else {
      for (std::size_t a = 0; a < 3; ++a) {
        f[a] = int_pow(l[a], m[a]);
        d[a] = m[a] > 0 ? m[a] * int_pow(l[a], m[a] - 1) : 0.0;
      }
    }
    const double c = family_ == BasisFamily::lagrange ? 1.0 : bernstein_coeff_[s];
    out[s] = {c * d[0] * f[1] * f[2], c * f[0] * d[1] * f[2], c * f[0] * f[1] * d[2]};
  }
}

std::vector<double> eval_basis(const Basis& basis, const Barycentric& point) {
  constexpr double tol = 1e-12;
  if (point[0] < -tol || point[1] < -tol || point[2] < -tol ||
      std::abs(point[0] + point[1] + point[2] - 1.0) > tol) {
    throw DomainError("point lies outside the reference triangle");
  }
  std::vector<double> values(basis.size());
  basis.eval(point, values);
  return values;
}

std::vector<Vec2> eval_gradients(const Basis& basis, const Barycentric& point, const TriangleGeometry& geometry) {
  if (!(geometry.area() >= 1e-14)) throw GeometryError("degenerate triangle");
  std::vector<std::array<double, 3>> d(basis.size());
  basis.eval_barycentric_derivatives(point, d);
  std::vector<Vec2> grads(basis.size());
  for (std::size_t s = 0; s < d.size(); ++s) grads[s] = physical_gradient(d[s], geometry.grad_lambda());
  return grads;
}

Tabulation::Tabulation(const Basis& basis, std::span<const Barycentric> points)
    : num_points_(points.size()), num_basis_(basis.size()) {
  values_.resize(num_points_ * num_basis_);
  derivs_.resize(num_points_ * num_basis_);
  for (std::size_t q = 0; q < num_points_; ++q) {
    basis.eval(points[q], std::span<double>(values_.data() + q * num_basis_, num_basis_));
    basis.eval_barycentric_derivatives(points[q],
                                       std::span<std::array<double, 3>>(derivs_.data() + q * num_basis_, num_basis_));
  }
}

}  // namespace cgsat
