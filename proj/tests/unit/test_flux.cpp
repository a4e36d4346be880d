#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "cgsat/conservation_law.hpp"
#include "cgsat/errors.hpp"

using namespace cgsat;

namespace {

std::vector<std::unique_ptr<ConservationLaw>> laws() {
  std::vector<std::unique_ptr<ConservationLaw>> out;
  out.push_back(builtin_law("advection(1,0)"));
  out.push_back(builtin_law("advection(-0.5,2)"));
  out.push_back(builtin_law("rotation"));
  out.push_back(builtin_law("burgers2d"));
  out.push_back(builtin_law("cosflux"));
  return out;
}

}  // namespace

TEST_CASE("entropy pair invariants for every built-in law") {
  const Vec2 x{0.3, -0.4};
  const double h = 1e-5;
  for (const auto& law : laws()) {
    CAPTURE(law->name());
    for (int i = 0; i < 200; ++i) {
      const double u = -2.0 + 4.0 * i / 199.0;
      const double v = law->entropy_variable(u);
      const Vec2 fp = law->flux_jacobian(u, x);
      const Vec2 dg = (1.0 / (2 * h)) * (law->entropy_flux(u + h, x) - law->entropy_flux(u - h, x));
      CHECK(std::abs(v * fp.x - dg.x) <= 1e-8);
      CHECK(std::abs(v * fp.y - dg.y) <= 1e-8);

      const Vec2 f = law->flux(law->state_from_entropy_variable(v), x);
      const Vec2 g = law->entropy_flux(u, x);
      const Vec2 theta = law->flux_potential(v, x);
      CHECK(std::abs(g.x - (v * f.x - theta.x)) <= 1e-10);
      CHECK(std::abs(g.y - (v * f.y - theta.y)) <= 1e-10);

      const Vec2 dtheta = (1.0 / (2 * h)) * (law->flux_potential(v + h, x) - law->flux_potential(v - h, x));
      CHECK(std::abs(dtheta.x - f.x) <= 1e-8);
      CHECK(std::abs(dtheta.y - f.y) <= 1e-8);

      CHECK(law->entropy_hessian(u) > 0.0);
      CHECK(std::abs(law->entropy_variable(law->state_from_entropy_variable(v)) - v) <= 1e-12);

      const Vec2 df = (1.0 / (2 * h)) * (law->flux(u + h, x) - law->flux(u - h, x));
      CHECK(std::abs(df.x - fp.x) <= 1e-8);
      CHECK(std::abs(df.y - fp.y) <= 1e-8);
    }
    CHECK(norm(law->entropy_flux(0.0, x)) == 0.0);
  }
}

TEST_CASE("burgers2d values") {
  const auto law = make_burgers2d();
  CHECK(law->flux(2.0, {}).x == doctest::Approx(2.0));
  CHECK(law->flux(2.0, {}).y == doctest::Approx(2.0));
  CHECK(law->flux_jacobian(2.0, {}).x == doctest::Approx(2.0));
  CHECK(law->entropy(2.0) == doctest::Approx(2.0));
  CHECK(law->entropy_flux(2.0, {}).x == doctest::Approx(8.0 / 3));
  CHECK(law->entropy_flux(2.0, {}).y == doctest::Approx(8.0 / 3));
  CHECK(normal_flux(*law, 1.0, {1, 0}) == doctest::Approx(0.5));
  CHECK(normal_entropy_flux(*law, 1.0, {1, 0}) == doctest::Approx(1.0 / 3));
  CHECK(law->polynomial_flux());
}

TEST_CASE("advection values") {
  const auto law = builtin_law("advection(1,0)");
  CHECK(law->flux(0.7, {}).x == 0.7);
  CHECK(law->flux(0.7, {}).y == 0.0);
  CHECK(law->entropy_variable(0.7) == 0.7);
  CHECK(builtin_law("advection")->flux(1.0, {}).x == 1.0);
}

TEST_CASE("cosflux values") {
  const auto law = make_cosflux();
  CHECK(normal_flux(*law, std::numbers::pi / 2, {0, 1}) == doctest::Approx(std::numbers::pi / 2));
  const double u = 0.7;
  const double h = 1e-5;
  const double dg1 = (law->entropy_flux(u + h, {}).x - law->entropy_flux(u - h, {}).x) / (2 * h);
  CHECK(std::abs(dg1 + u * std::sin(u)) <= 1e-8);
  CHECK_FALSE(law->polynomial_flux());
}

TEST_CASE("rotation field turns about the origin without divergence") {
  const auto law = make_rotation();
  const double h = 1e-6;
  for (const Vec2 x : {Vec2{0.0, 0.5}, Vec2{0.3, -0.2}, Vec2{-0.7, 0.1}}) {
    const Vec2 a = law->flux_jacobian(1.0, x);
    CHECK(std::abs(dot(a, x)) <= 1e-14);  // tangential
    CHECK(norm(a) == doctest::Approx(2 * std::numbers::pi * norm(x)));
    const double div = (law->flux(1.0, x + Vec2{h, 0}).x - law->flux(1.0, x - Vec2{h, 0}).x) / (2 * h) +
                       (law->flux(1.0, x + Vec2{0, h}).y - law->flux(1.0, x - Vec2{0, h}).y) / (2 * h);
    CHECK(std::abs(div) <= 1e-8);
  }
  // clockwise: the top of the disk moves right
  CHECK(law->flux_jacobian(1.0, {0.0, 0.5}).x > 0.0);
}

TEST_CASE("unknown law names") {
  CHECK_THROWS_AS(builtin_law("euler"), ConfigError);
  CHECK_THROWS_AS(builtin_law("advection(1)"), ConfigError);
  CHECK_THROWS_AS(builtin_law("advection(1,x)"), ConfigError);
}
