#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "bergman/errors.hpp"
#include "reports.hpp"

namespace {

using bergman::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--samples", rc.samples, "Monte Carlo sample count per integral");
  cmd->add_option("--seed", rc.seed, "RNG seed");
  cmd->add_option("--chunk-size", rc.chunk_size, "samples per RNG chunk");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical certificates for the sharp Bergman projection constant"};
  app.require_subcommand(1);

  RunConfig rc;

  CLI::App* constant = app.add_subcommand(
      "constant", "print the closed-form constant n! Gamma(n+1+mu)/Gamma^2((n+1+mu)/2)");
  constant->add_option("--n", rc.n, "complex dimension")->required();
  constant->add_option("--sigma", rc.sigma, "weight exponent sigma")->required();
  constant->add_flag("--allow-unbounded", rc.allow_unbounded,
                     "print 'unbounded' instead of failing for sigma <= -(n+1)");
  constant->add_option("--format", rc.format, "text or csv");
  constant->add_option("--out", rc.output, "output path, '-' for stdout");

  CLI::App* certify = app.add_subcommand(
      "certify", "emit a JSON certificate with upper/lower evidence and a verdict");
  certify->add_option("--n", rc.n, "complex dimension")->required();
  certify->add_option("--sigma", rc.sigma, "weight exponent sigma")->required();
  add_common(certify, rc);
  certify->add_option("--eps", rc.eps_list, "epsilon schedule (default 1 - 2^-k)");
  certify->add_option("--radii", rc.radius_grid, "radius grid for the upper profile");
  certify->add_option("--out", rc.output, "output path, '-' for stdout");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "emit the extremal lower-bound sweep as (eps, numeric, err, closed)");
  sweep->add_option("--n", rc.n, "complex dimension")->required();
  sweep->add_option("--sigma", rc.sigma, "weight exponent sigma")->required();
  add_common(sweep, rc);
  sweep->add_option("--eps", rc.eps_list, "epsilon schedule (default 1 - 2^-k)");
  sweep->add_option("--format", rc.format, "csv or json");
  sweep->add_option("--out", rc.output, "output path, '-' for stdout");

  CLI::App* table = app.add_subcommand("table", "CSV table of constants over (n, sigma)");
  table->add_option("--n-min", rc.n, "smallest n");
  table->add_option("--n-max", rc.n_max, "largest n (default: n-min)");
  table->add_option("--sigma", rc.sigma_list, "sigma values (repeatable)");
  table->add_option("--out", rc.output, "output path, '-' for stdout");

  CLI::App* check = app.add_subcommand("check", "run a named invariant suite");
  check->add_option("--suite", rc.suite,
                    "identities | lemma-trans | hypergeometric | adjoint | inequality")
      ->required();
  add_common(check, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bergman::cli::kExitUsage;
  }

  try {
    rc.command = app.get_subcommands().front()->get_name();
    if (constant->parsed()) return bergman::cli::cmd_constant(rc);
    if (certify->parsed()) return bergman::cli::cmd_certify(rc);
    if (sweep->parsed()) return bergman::cli::cmd_sweep(rc);
    if (table->parsed()) return bergman::cli::cmd_table(rc);
    if (check->parsed()) return bergman::cli::cmd_check(rc);
  } catch (const bergman::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bergman::cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bergman::cli::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bergman::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bergman::cli::kExitFail;
  }
  return bergman::cli::kExitUsage;
}
