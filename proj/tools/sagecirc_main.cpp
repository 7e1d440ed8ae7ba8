#include "sagecirc/cli_run.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sublinear-circuit toolkit: enumerate circuits of a point set over a "
      "polyhedron and certify signomial nonnegativity"};
  app.require_subcommand(1);

  std::string input;
  sagecirc::CliOverrides overrides;
  double tol = 0, snap = 0;
  std::size_t beta = 0, circuit_index = 0;
  std::string grid;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "problem JSON file ('-' for stdin)");
    cmd->add_option("--tol", tol, "log-domain tolerance (default 1e-8)");
    cmd->add_option("--snap-radius", snap,
                    "witness snap radius (default 1e-2)");
    return cmd;
  };

  auto* circuits = add_common(app.add_subcommand(
      "circuits", "enumerate the normalized circuits of the support"));
  auto* opt_beta =
      circuits->add_option("--beta", beta, "restrict to one negative index");
  add_common(app.add_subcommand(
      "reduced", "extract the reduced circuits with minimality witnesses"));
  auto* age = add_common(app.add_subcommand(
      "age-check", "verify relative-entropy and witnessed AM/GM certificates"));
  auto* age_idx = age->add_option("--circuit-index", circuit_index,
                                  "circuit to use for the AM/GM check");
  auto* sage = add_common(
      app.add_subcommand("sage-check", "decide cone membership"));
  auto* sage_grid =
      sage->add_option("--grid", grid, "grid oracle box 'lo:hi:count'");
  auto* decompose = add_common(app.add_subcommand(
      "decompose", "decide membership and emit the decomposition"));
  auto* dec_grid =
      decompose->add_option("--grid", grid, "grid oracle box 'lo:hi:count'");
  add_common(app.add_subcommand(
      "refine", "snap approximate witnesses and re-derive an exact certificate"));
  add_common(app.add_subcommand(
      "univariate", "half-line closed forms: circuits, reduced, extreme, classify"));
  auto* separate = add_common(app.add_subcommand(
      "separate", "emit the minimality witness pair for a reduced circuit"));
  auto* sep_idx = separate->add_option("--circuit-index", circuit_index,
                                       "which reduced circuit to separate");

  CLI11_PARSE(app, argc, argv);

  CLI::App* active = app.get_subcommands().front();
  if (tol > 0) overrides.tol = tol;
  if (snap > 0) overrides.snap_radius = snap;
  if (opt_beta->count() > 0) overrides.beta = beta;
  if (age_idx->count() > 0 || sep_idx->count() > 0)
    overrides.circuit_index = circuit_index;
  if (sage_grid->count() > 0 || dec_grid->count() > 0) overrides.grid = grid;

  std::string text;
  try {
    text = read_input(input);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  const sagecirc::CliResult result =
      sagecirc::cli_run(active->get_name(), text, overrides);
  std::cout << result.output;
  return result.exit_code;
}
