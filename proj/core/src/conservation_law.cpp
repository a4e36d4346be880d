#include "cgsat/conservation_law.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cgsat/errors.hpp"

namespace cgsat {
namespace {

// Shared square entropy eta = u^2/2, V = u.
class QuadraticEntropyLaw : public ConservationLaw {
 public:
  double entropy(double u) const override { return 0.5 * u * u; }
  double entropy_hessian(double) const override { return 1.0; }
  double entropy_variable(double u) const override { return u; }
  double state_from_entropy_variable(double v) const override { return v; }
};

class LinearAdvection final : public QuadraticEntropyLaw {
 public:
  explicit LinearAdvection(Vec2 a) : a_(a) {}

  std::string name() const override {
    std::ostringstream s;
    s << "advection(" << a_.x << "," << a_.y << ")";
    return s.str();
  }
  Vec2 flux(double u, Vec2) const override { return u * a_; }
  Vec2 flux_jacobian(double, Vec2) const override { return a_; }
  Vec2 entropy_flux(double u, Vec2) const override { return (0.5 * u * u) * a_; }
  Vec2 flux_potential(double v, Vec2) const override { return (0.5 * v * v) * a_; }
  std::optional<double> boundary_factor(double, Vec2 n, Vec2) const override { return 0.5 * dot(a_, n); }
  bool polynomial_flux() const override { return true; }

 private:
  Vec2 a_;
};

class Rotation final : public QuadraticEntropyLaw {
 public:
  static Vec2 field(Vec2 x) { return 2.0 * std::numbers::pi * Vec2{x.y, -x.x}; }

  std::string name() const override { return "rotation"; }
  Vec2 flux(double u, Vec2 x) const override { return u * field(x); }
  Vec2 flux_jacobian(double, Vec2 x) const override { return field(x); }
  Vec2 entropy_flux(double u, Vec2 x) const override { return (0.5 * u * u) * field(x); }
  Vec2 flux_potential(double v, Vec2 x) const override { return (0.5 * v * v) * field(x); }
  std::optional<double> boundary_factor(double, Vec2 n, Vec2 x) const override { return 0.5 * dot(field(x), n); }
  bool polynomial_flux() const override { return true; }
};

class Burgers2d final : public QuadraticEntropyLaw {
 public:
  std::string name() const override { return "burgers2d"; }
  Vec2 flux(double u, Vec2) const override { return {0.5 * u * u, 0.5 * u * u}; }
  Vec2 flux_jacobian(double u, Vec2) const override { return {u, u}; }
  Vec2 entropy_flux(double u, Vec2) const override { return {u * u * u / 3.0, u * u * u / 3.0}; }
  Vec2 flux_potential(double v, Vec2) const override { return {v * v * v / 6.0, v * v * v / 6.0}; }
  std::optional<double> boundary_factor(double v, Vec2 n, Vec2) const override { return v * (n.x + n.y) / 3.0; }
  bool polynomial_flux() const override { return true; }
};

class CosFlux final : public QuadraticEntropyLaw {
 public:
  std::string name() const override { return "cosflux"; }
  Vec2 flux(double u, Vec2) const override { return {std::cos(u), u}; }
  Vec2 flux_jacobian(double u, Vec2) const override { return {-std::sin(u), 1.0}; }
  // g1' = u * (-sin u), g2' = u
  Vec2 entropy_flux(double u, Vec2) const override { return {u * std::cos(u) - std::sin(u), 0.5 * u * u}; }
  Vec2 flux_potential(double v, Vec2) const override { return {std::sin(v), 0.5 * v * v}; }
  std::optional<double> boundary_factor(double v, Vec2 n, Vec2) const override {
    // int_0^1 -t sin(tV) dt = (V cos V - sin V) / V^2, series below 1e-4
    double first = 0.0;
    if (std::abs(v) < 1e-4) {
      const double v2 = v * v;
      first = -v * (1.0 / 3.0 - v2 / 30.0 + v2 * v2 / 840.0);
    } else {
      first = (v * std::cos(v) - std::sin(v)) / (v * v);
    }
    return n.x * first + 0.5 * n.y;
  }
  bool polynomial_flux() const override { return false; }
};

double parse_number(std::string_view text, std::string_view whole) {
  const auto b = text.find_first_not_of(' ');
  const auto e = text.find_last_not_of(' ');
  if (b == std::string_view::npos) throw ConfigError("malformed law name '" + std::string(whole) + "'");
  text = text.substr(b, e - b + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("malformed number in law name '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::unique_ptr<ConservationLaw> make_advection(Vec2 speed) { return std::make_unique<LinearAdvection>(speed); }
std::unique_ptr<ConservationLaw> make_rotation() { return std::make_unique<Rotation>(); }
std::unique_ptr<ConservationLaw> make_burgers2d() { return std::make_unique<Burgers2d>(); }
std::unique_ptr<ConservationLaw> make_cosflux() { return std::make_unique<CosFlux>(); }

std::unique_ptr<ConservationLaw> builtin_law(std::string_view name) {
  if (name == "advection") return make_advection({1.0, 0.0});
  if (name == "rotation") return make_rotation();
  if (name == "burgers2d") return make_burgers2d();
  if (name == "cosflux") return make_cosflux();
  constexpr std::string_view prefix = "advection(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    const auto args = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ConfigError("advection needs two speeds: '" + std::string(name) + "'");
    return make_advection({parse_number(args.substr(0, comma), name), parse_number(args.substr(comma + 1), name)});
  }
  throw ConfigError("unknown conservation law '" + std::string(name) +
                    "' (expected advection(a,b), rotation, burgers2d or cosflux)");
}

}  // namespace cgsat
