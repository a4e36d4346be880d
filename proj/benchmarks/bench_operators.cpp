#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "cgsat/conservation_law.hpp"
#include "cgsat/interpolation.hpp"
#include "cgsat/mass.hpp"
#include "cgsat/mesh.hpp"
#include "cgsat/semidiscrete.hpp"
#include "cgsat/spatial.hpp"
#include "cgsat/time_march.hpp"

namespace {

struct Fixture {
  explicit Fixture(int degree)
      : mesh(cgsat::generate_disk_mesh(8, degree)),
        basis(cgsat::BasisFamily::bernstein, degree),
        law(cgsat::make_burgers2d()),
        op(mesh, basis, *law, cgsat::default_quadrature_orders(degree, *law)),
        mass(cgsat::assemble_mass(mesh, basis, cgsat::MassMode::exact)),
        solver(mass),
        semi(op, solver, cgsat::SchemeOptions{}),
        state(cgsat::interpolate(mesh, basis, [](cgsat::Vec2 p) { return 0.5 + p.x * p.y; })) {}

  cgsat::Mesh mesh;
  cgsat::Basis basis;
  std::unique_ptr<cgsat::ConservationLaw> law;
  cgsat::SpatialOperator op;
  cgsat::MassMatrix mass;
  cgsat::MassSolver solver;
  cgsat::SemiDiscretization semi;
  std::vector<double> state;
};

void BM_AssembleRhs(benchmark::State& st) {
  const Fixture f(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(f.op.assemble_rhs(f.state));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(f.mesh.num_elements()));
}
BENCHMARK(BM_AssembleRhs)->DenseRange(1, 4);

void BM_CorrectedResidual(benchmark::State& st) {
  const Fixture f(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(f.semi.residual(f.state));
}
BENCHMARK(BM_CorrectedResidual)->DenseRange(1, 4);

void BM_MassSolve(benchmark::State& st) {
  const Fixture f(static_cast<int>(st.range(0)));
  std::vector<double> out(f.state.size());
  for (auto _ : st) {
    f.solver.solve(f.state, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_MassSolve)->DenseRange(1, 4);

void BM_Ssprk33Step(benchmark::State& st) {
  const Fixture f(static_cast<int>(st.range(0)));
  const auto scheme = cgsat::make_time_scheme(cgsat::TimeSchemeKind::ssprk33);
  const auto rhs = [&f](std::span<const double> u, std::span<double> dudt) { f.semi(u, dudt); };
  std::vector<double> u = f.state;
  for (auto _ : st) {
    cgsat::step(scheme, u, 1e-5, rhs);
    benchmark::DoNotOptimize(u.data());
  }
}
BENCHMARK(BM_Ssprk33Step)->DenseRange(1, 4);

}  // namespace
BENCHMARK_MAIN();
