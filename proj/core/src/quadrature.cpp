#include "cgsat/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cgsat/errors.hpp"

namespace cgsat {
namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw ConfigError("unsupported quadrature order " + std::to_string(order) + " (supported: 1.." +
                      std::to_string(kMaxQuadratureOrder) + ")");
  }
}

int points_for_degree(int degree) { return (degree + 2) / 2; }

TriangleRule collapsed_rule(int order) {
  // x = u, y = v (1 - u); the Jacobian (1 - u) raises the u-degree by one.
  const SegmentRule gu = gauss_legendre(points_for_degree(order + 1));
  const SegmentRule gv = gauss_legendre(points_for_degree(order));
  TriangleRule rule;
  rule.degree = order;
  for (std::size_t i = 0; i < gu.points.size(); ++i) {
    const double u = gu.points[i];
    for (std::size_t j = 0; j < gv.points.size(); ++j) {
      const double x = u;
      const double y = gv.points[j] * (1.0 - u);
      rule.points.push_back({1.0 - x - y, x, y});
      rule.weights.push_back(gu.weights[i] * gv.weights[j] * (1.0 - u));
    }
  }
  return rule;
}

}  // namespace

SegmentRule gauss_legendre(int n) {
  if (n < 1) throw ConfigError("Gauss-Legendre rule needs at least one point");
  // Legendre P_n and its derivative at x by the three-term recurrence.
  const auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::array<double, 2>{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };

  SegmentRule rule;
  rule.degree = 2 * n - 1;
  rule.points.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x)[1];
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.points[lo] = 0.5 * (1.0 - x);
    rule.points[hi] = 0.5 * (1.0 + x);
    rule.weights[lo] = 0.5 * w;
    rule.weights[hi] = 0.5 * w;
  }
  if (n % 2 == 1) rule.points[static_cast<std::size_t>(n / 2)] = 0.5;
  return rule;
}

const SegmentRule& segment_rule(int order) {
  check_order(order);
  static const auto table = [] {
    std::array<SegmentRule, kMaxQuadratureOrder + 1> t{};
    for (int k = 1; k <= kMaxQuadratureOrder; ++k) t[static_cast<std::size_t>(k)] = gauss_legendre(points_for_degree(k));
    return t;
  }();
  return table[static_cast<std::size_t>(order)];
}

const TriangleRule& triangle_rule(int order) {
  check_order(order);
  static const auto table = [] {
    std::array<TriangleRule, kMaxQuadratureOrder + 1> t{};
    for (int k = 1; k <= kMaxQuadratureOrder; ++k) t[static_cast<std::size_t>(k)] = collapsed_rule(k);
    return t;
  }();
  return table[static_cast<std::size_t>(order)];
}

}  // namespace cgsat
