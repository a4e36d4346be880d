#include "cgsat_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "cgsat/certify.hpp"
#include "cgsat/config.hpp"
#include "cgsat/errors.hpp"
#include "cgsat/mesh.hpp"
#include "cgsat/simulation.hpp"
#include "cgsat/version.hpp"

namespace cgsat {
namespace {

int run_command(const std::string& path, std::ostream& out) {
  const SchemeConfig config = load_config(path);
  const Simulation sim(config);
  const RunResult result = sim.run();
  const auto& last = result.report.rows.back();
  out << std::setprecision(17);
  out << "scenario " << config.scenario << ": " << sim.mesh().num_elements() << " elements, "
      << sim.mesh().num_dofs() << " dofs\n";
  out << "steps " << result.steps << ", time " << result.time << '\n';
  out << "entropy change " << last.change << ", min " << last.min_u << ", max " << last.max_u << '\n';
  if (!config.out_dir.empty()) out << "output written to " << config.out_dir.string() << '\n';
  if (result.status == RunStatus::numerical_abort) {
    out << "ABORTED: " << result.message << '\n';
    return kExitNumerical;
  }
  out << "COMPLETED\n";
  return kExitOk;
}

int certify_command(int degree, int elements, double speed, double tau, std::ostream& out) {
  const auto ops = build_1d_operators(degree, elements);
  const auto penalty = inflow_penalty(ops.mass.rows(), tau);
  const auto cert = certify(ops.mass, ops.q, speed, penalty);
  out << std::setprecision(17);
  out << "eigenvalues:";
  for (Eigen::Index i = 0; i < cert.eigenvalues.size(); ++i) out << ' ' << cert.eigenvalues(i);
  out << "\nmax eigenvalue: " << cert.max_eigenvalue << '\n';
  out << (cert.stable ? "STABLE" : "UNSTABLE") << '\n';
  return kExitOk;
}

int mesh_gen_command(int n, const std::string& shape, const std::string& path, std::ostream& out) {
  const Mesh mesh = shape == "disk" ? generate_disk_mesh(n, 1) : generate_square_mesh(n, 1);
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot open '" + path + "' for writing");
  file << export_mesh(mesh);
  if (!file.flush()) throw ValidationError("write failed for '" + path + "'");
  out << "wrote " << mesh.num_vertices() << " vertices, " << mesh.num_elements() << " triangles to " << path
      << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy-corrected continuous Galerkin solver with SAT boundaries", "cgsat"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a scenario from a config file");
  run->add_option("config", config_path, "Config file")->required();

  int degree = 1;
  int elements = 1;
  double speed = 1.0;
  double tau = -1.0;
  auto* cert = app.add_subcommand("certify", "1D stability certificate for an inflow penalty");
  cert->add_option("--degree", degree, "Polynomial degree")->required()->check(CLI::Range(kMinDegree, kMaxDegree));
  cert->add_option("--elements", elements, "Number of elements")->required()->check(CLI::PositiveNumber);
  cert->add_option("--speed", speed, "Advection speed")->required();
  cert->add_option("--tau", tau, "Penalty at the inflow node")->required();

  int n = 8;
  std::string out_path;
  std::string shape = "square";
  auto* mesh_gen = app.add_subcommand("mesh-gen", "Write a generated mesh");
  mesh_gen->add_option("--n", n, "Cells per side (square) or rings (disk)")->required()->check(CLI::PositiveNumber);
  mesh_gen->add_option("--out", out_path, "Output file")->required();
  mesh_gen->add_option("--shape", shape, "square or disk")->check(CLI::IsMember({"square", "disk"}));

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (*run) return run_command(config_path, out);
    if (*cert) return certify_command(degree, elements, speed, tau, out);
    if (*mesh_gen) return mesh_gen_command(n, shape, out_path, out);
    if (*version) {
      out << "cgsat " << kVersion << '\n';
      return kExitOk;
    }
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace cgsat
