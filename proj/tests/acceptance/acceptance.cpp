// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cgsat/basis.hpp"
#include "cgsat/certify.hpp"
#include "cgsat/config.hpp"
#include "cgsat/conservation_law.hpp"
#include "cgsat/diagnostics.hpp"
#include "cgsat/entropy_fix.hpp"
#include "cgsat/mesh.hpp"
#include "cgsat/sat.hpp"
#include "cgsat/simulation.hpp"
#include "cgsat/spatial.hpp"
#include "cgsat/time_march.hpp"

using namespace cgsat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::unique_ptr<ConservationLaw>> all_laws() {
  std::vector<std::unique_ptr<ConservationLaw>> laws;
  laws.push_back(make_advection({1.0, 0.5}));
  laws.push_back(make_rotation());
  laws.push_back(make_burgers2d());
  laws.push_back(make_cosflux());
  return laws;
}

Mesh random_triangle(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  while (true) {
    Vec2 a{d(rng), d(rng)};
    Vec2 b{d(rng), d(rng)};
    Vec2 c{d(rng), d(rng)};
    if (cross(b - a, c - a) < 0.0) std::swap(b, c);
    if (cross(b - a, c - a) < 0.2) continue;
    return Mesh::from_triangulation({a, b, c}, {{0, 1, 2}}, degree);
  }
}

// 1. boundary identity Q + Q^T = B
Outcome boundary_identity() {
  double worst = 0.0;
  for (int p = 1; p <= 4; ++p) {
    for (int n : {1, 2, 4}) {
      const auto ops = build_1d_operators(p, n);
      const Eigen::MatrixXd diff = ops.q + ops.q.transpose() - boundary_matrix(ops.q.rows());
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-13, fmt("max |(Q+Q^T) - B| = %.3e", worst)};
}

// 2. verdict flips exactly at tau = -a/2
Outcome certificate_sweep() {
  const double a = 1.0;
  double worst = 0.0;
  int wrong = 0;
  for (int p = 1; p <= 4; ++p) {
    for (int n : {1, 2, 4}) {
      const auto ops = build_1d_operators(p, n);
      const auto size = ops.q.rows();
      for (int i = 0; i < 200; ++i) {
        const double tau = -a / 2 + (i - 100) / 100.0;
        const auto cert = certify(ops.mass, ops.q, a, inflow_penalty(size, tau));
        // test matrix is diag(2 tau + a, 0, ..., 0, -a)
        const double expected = size == 2 ? std::max(2 * tau + a, -a) : std::max(2 * tau + a, 0.0);
        worst = std::max(worst, std::abs(cert.max_eigenvalue - expected));
        if (cert.stable != (tau <= -a / 2 + 1e-12)) ++wrong;
      }
    }
  }
  return {wrong == 0 && worst <= 1e-12, fmt("wrong verdicts %d, max eigenvalue error %.3e", wrong, worst)};
}

// 3. Burgers boundary factor: closed form vs quadrature(5)
Outcome burgers_boundary_operator() {
  const auto law = make_burgers2d();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> v(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double V = v(rng);
    const double th = angle(rng);
    const Vec2 n{std::cos(th), std::sin(th)};
    const double closed = eval_F(*law, V, n, {BoundaryEval::closed_form, 5});
    const double quad = eval_F(*law, V, n, {BoundaryEval::quadrature, 5});
    worst = std::max(worst, std::abs(closed - quad));
  }
  return {worst <= 1e-14, fmt("max |closed - quadrature| = %.3e", worst)};
}

// 4. cos-flux boundary factor vs composite trapezoid of int_0^1 t f'(tV).n dt
Outcome cosflux_boundary_operator() {
  const auto law = make_cosflux();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> v(-3.0, 3.0);
  std::uniform_real_distribution<double> tiny(-1e-4, 1e-4);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  constexpr int panels = 100000;
  const auto trapezoid = [](double V, Vec2 n) {
    const auto integrand = [&](double t) { return t * (-std::sin(t * V) * n.x + n.y); };
    const double h = 1.0 / panels;
    double s = 0.5 * (integrand(0.0) + integrand(1.0));
    for (int k = 1; k < panels; ++k) s += integrand(k * h);
    return s * h;
  };
  double worst = 0.0;
  double worst_small = 0.0;
  for (int i = 0; i < 200; ++i) {
    const bool small = i % 4 == 0;
    const double V = small ? tiny(rng) : v(rng);
    const double th = angle(rng);
    const Vec2 n{std::cos(th), std::sin(th)};
    const double err = std::abs(eval_F(*law, V, n, {BoundaryEval::closed_form, 5}) - trapezoid(V, n));
    (small ? worst_small : worst) = std::max(small ? worst_small : worst, err);
  }
  return {std::max(worst, worst_small) <= 1e-8,
          fmt("max error %.3e (|V| < 1e-4: %.3e)", worst, worst_small)};
}

// 5. sum r = 0 and entropy identity of the corrected residual
Outcome correction_identities() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto laws = all_laws();
  double worst_sum = 0.0;
  double worst_entropy = 0.0;
  int degenerate = 0;
  int cases = 0;
  for (int c = 0; c < 1000; ++c) {
    const auto& law = *laws[static_cast<std::size_t>(c) % laws.size()];
    const int p = 1 + (c / 4) % 3;
    const Mesh mesh = random_triangle(rng, p);
    const Basis basis(c % 2 ? BasisFamily::bernstein : BasisFamily::lagrange, p);
    const SpatialOperator op(mesh, basis, law, default_quadrature_orders(p, law));
    std::vector<double> state(mesh.num_dofs());
    for (auto& s : state) s = u(rng);
    const auto res = op.element_residual(0, state);
    const auto V = element_entropy_variables(op, 0, state);
    const auto corr = correction_term(V, element_entropy_error(op, 0, state, res));
    ++cases;
    if (corr.degenerate) {
      ++degenerate;
      continue;
    }
    const auto hat = corrected_residual(res, corr);
    double sum_r = 0.0;
    double v_phi = 0.0;
    for (std::size_t s = 0; s < hat.size(); ++s) {
      sum_r += corr.correction[s];
      v_phi += V[s] * hat[s];
    }
    worst_sum = std::max(worst_sum, std::abs(sum_r));
    worst_entropy = std::max(worst_entropy, std::abs(v_phi - op.boundary_entropy_flux(0, state)));
  }
  return {worst_sum <= 1e-13 && worst_entropy <= 1e-11,
          fmt("%d cases (%d degenerate): max |sum r| = %.3e, max entropy defect = %.3e", cases, degenerate,
              worst_sum, worst_entropy)};
}

// 6. sum_s Phi_s = oint f.n against an independent 5-point Gauss rule
Outcome element_conservation() {
  static constexpr double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                   0.9061798459386640};
  static constexpr double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                   0.4786286704993665, 0.2369268850561891};
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto laws = all_laws();
  double worst = 0.0;
  for (const auto& law : laws) {
    for (int p = 1; p <= 4; ++p) {
      const Basis basis(BasisFamily::bernstein, p);
      for (int trial = 0; trial < 100; ++trial) {
        const Mesh mesh = random_triangle(rng, p);
        const SpatialOperator op(mesh, basis, *law, default_quadrature_orders(p, *law));
        std::vector<double> state(mesh.num_dofs());
        for (auto& s : state) s = u(rng);
        const auto res = op.element_residual(0, state);
        double sum = 0.0;
        for (double r : res.per_dof) sum += r;
        const auto& g = mesh.geometry(0);
        double oracle = 0.0;
        for (int e = 0; e < 3; ++e) {
          for (int q = 0; q < 5; ++q) {
            const double t = 0.5 * (gx[q] + 1.0);
            Barycentric l{};
            l[static_cast<std::size_t>(e)] = 1.0 - t;
            l[static_cast<std::size_t>((e + 1) % 3)] = t;
            const double uh = [&] {
              const auto phi = eval_basis(basis, l);
              double s = 0.0;
              for (std::size_t k = 0; k < phi.size(); ++k) s += phi[k] * state[mesh.element_dofs(0)[k]];
              return s;
            }();
            oracle += 0.5 * gw[q] * g.edge_length(e) * law->normal_flux(uh, g.outward_normal(e), g.map(l));
          }
        }
        worst = std::max(worst, std::abs(sum - oracle));
      }
    }
  }
  return {worst <= 1e-12, fmt("max |sum Phi - oint f.n| = %.3e", worst)};
}

SchemeConfig base_config(std::string scenario, int degree) {
  SchemeConfig c;
  c.scenario = std::move(scenario);
  c.degree = degree;
  return c;
}

// 7. energy never increases
Outcome linear_energy_stability() {
  std::string detail;
  bool pass = true;
  for (int p : {2, 4}) {
    auto c = base_config("advect_bump", p);
    c.mass_mode = MassMode::exact;
    c.correction = false;
    c.sat_mode = BoundaryEval::closed_form;
    c.cfl = 0.3;
    c.time_scheme = TimeSchemeKind::ssprk54;
    c.mesh_n = 16;
    c.max_steps = 150;
    c.t_end = 1e9;
    c.output_every = 150;
    const Simulation sim(c);
    double prev = mass_norm_squared(sim.mass(), sim.initial_state());
    double worst = -1e300;
    int increases = 0;
    const auto result = sim.run([&](const StepInfo& s) {
      const double e = mass_norm_squared(sim.mass(), s.state);
      const double rel = (e - prev) / prev;
      worst = std::max(worst, rel);
      if (rel > 1e-12) ++increases;
      prev = e;
    });
    const bool ok = result.status == RunStatus::completed && result.steps == 150 && increases == 0;
    pass = pass && ok;
    detail += fmt("p=%d: %ld steps, %d increases, max rel change %.3e; ", p, result.steps, increases, worst);
  }
  return {pass, detail};
}

SchemeConfig crash_config(bool correction, long steps) {
  auto c = base_config("advect_bump", 4);
  c.mass_mode = MassMode::under_integrated;
  c.correction = correction;
  c.sat_mode = BoundaryEval::closed_form;
  c.cfl = 0.01;
  c.time_scheme = TimeSchemeKind::ssprk54;
  c.mesh_n = 16;
  c.max_steps = steps;
  c.t_end = 1e9;
  c.output_every = steps;
  return c;
}

// 8. under-integrated mass: crash without correction, bounded with it
Outcome crash_rescue() {
  const Simulation off(crash_config(false, 400));
  long crash_step = -1;
  const auto r_off = off.run([&](const StepInfo& s) {
    if (crash_step < 0) {
      for (double v : s.state) {
        if (std::abs(v) > 2.5) {
          crash_step = s.step;
          break;
        }
      }
    }
  });
  const bool crashed = r_off.status == RunStatus::numerical_abort || crash_step > 0;

  const Simulation on(crash_config(true, 1700));
  const auto r_on = on.run();
  const bool rescued = r_on.status == RunStatus::completed && r_on.steps == 1700 && r_on.peak_abs_u <= 1.1;
  return {crashed && rescued,
          fmt("off: status %s, steps %ld, peak |U| %.4g, first |U|>2.5 at step %ld; on: steps %ld, peak |U| %.4g",
              r_off.status == RunStatus::completed ? "completed" : "aborted", r_off.steps, r_off.peak_abs_u,
              crash_step, r_on.steps, r_on.peak_abs_u)};
}

double rotation_change(int rings, double cfl) {
  auto c = base_config("rotation", 3);
  c.basis = BasisFamily::bernstein;
  c.time_scheme = TimeSchemeKind::ssprk33;
  c.cfl = cfl;
  c.mesh_n = rings;
  c.t_end = 1.0;
  c.output_every = 1000000;
  const auto r = run_scenario(c);
  if (r.status != RunStatus::completed) return std::numeric_limits<double>::infinity();
  return r.report.rows.back().change;
}

// 9. rotation: entropy nearly conserved, shrinking under refinement
Outcome rotation_entropy() {
  const int coarse_rings = 13;  // 1014 elements
  const int fine_rings = 24;    // 3456 elements
  const double coarse = rotation_change(coarse_rings, 0.2);
  const double fine = rotation_change(fine_rings, 0.2);
  const bool pass = std::abs(fine) <= 1e-6 && std::abs(fine) < std::abs(coarse);
  return {pass, fmt("CFL 0.2: change %.4e on %d elements, %.4e on %d elements", coarse,
                    6 * coarse_rings * coarse_rings, fine, 6 * fine_rings * fine_rings)};
}

// 10. cos-flux entropy never increases, final loss of moderate size
Outcome cosflux_entropy() {
  auto c = base_config("cosflux", 3);
  c.basis = BasisFamily::bernstein;
  c.correction = true;
  c.sat_mode = BoundaryEval::quadrature;
  c.sat_order = 5;
  c.cfl = 0.1;
  c.time_scheme = TimeSchemeKind::ssprk33;
  c.mesh_n = 13;
  c.t_end = 0.2;
  c.output_every = 1;
  const auto r = run_scenario(c);
  double worst = -1e300;
  for (const auto& row : r.report.rows) worst = std::max(worst, row.change);
  const double final_change = r.report.rows.back().change;
  const bool pass = r.status == RunStatus::completed && worst <= 1e-10 && final_change < 0.0 &&
                    std::abs(final_change) >= 1e-4 && std::abs(final_change) <= 1e-2;
  return {pass, fmt("%zu rows, max change %.3e, final change %.6e at t=%.3f", r.report.rows.size(), worst,
                    final_change, r.time)};
}

// 11. observed order on u' = -u
Outcome ssp_order() {
  std::string detail;
  bool pass = true;
  for (auto kind : {TimeSchemeKind::ssprk33, TimeSchemeKind::ssprk54}) {
    const auto scheme = make_time_scheme(kind);
    const auto rhs = [](std::span<const double> u, std::span<double> d) { d[0] = -u[0]; };
    std::vector<double> err;
    for (int steps : {10, 20, 40}) {
      std::vector<double> u{1.0};
      for (int i = 0; i < steps; ++i) step(scheme, u, 1.0 / steps, rhs);
      err.push_back(std::abs(u[0] - std::exp(-1.0)));
    }
    const double order = std::log2(err[1] / err[2]);
    pass = pass && std::abs(order - scheme.order) <= 0.2;
    detail += fmt("%s: observed %.3f (formal %d); ", std::string(to_string(kind)).c_str(), order, scheme.order);
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"boundary identity", boundary_identity},
      {"stability certificate sweep", certificate_sweep},
      {"burgers boundary operator", burgers_boundary_operator},
      {"cos-flux boundary operator", cosflux_boundary_operator},
      {"correction identities", correction_identities},
      {"element conservation", element_conservation},
      {"linear energy stability", linear_energy_stability},
      {"crash and rescue", crash_rescue},
      {"rotation entropy", rotation_entropy},
      {"cos-flux entropy", cosflux_entropy},
      {"ssp order", ssp_order},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
