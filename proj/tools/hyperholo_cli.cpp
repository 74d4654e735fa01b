#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperholo/cli.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
  std::vector<std::string> generators;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "key = value config file");
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--seed", opts.seed, "sampling seed");
  cmd->add_option("--suite", opts.suites, "suite to run (repeatable)");
  cmd->add_option("--generator", opts.generators, "generator text, appended to the config (repeatable)");
  cmd->add_flag("--no-timestamp", opts.no_timestamp, "omit the timestamp from reports");
}

hyperholo::RunConfig build_config(const CLI::App* cmd, const CommonOptions& opts) {
  hyperholo::RunConfig config =
      opts.config_path.empty() ? hyperholo::RunConfig{} : hyperholo::load_config(opts.config_path);
  if (!opts.out.empty()) config.output_dir = opts.out;
  if (cmd->count("--seed") > 0) hyperholo::set_seed(config, opts.seed);
  if (!opts.suites.empty()) config.suites = opts.suites;
  for (const auto& g : opts.generators) config.generators.push_back(g);
  if (opts.no_timestamp) config.timestamp = false;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of hyperholomorphic function identities"};
  app.require_subcommand(1);

  CommonOptions opts;
  auto* verify = app.add_subcommand("verify", "CR, operator, Cullen-lemma, equivalence, closure and Fueter suites");
  auto* integral = app.add_subcommand("integral", "surface/volume integral theorem on the configured regions");
  auto* convergence = app.add_subcommand("convergence", "integral mismatch under mesh refinement");
  auto* gauss = app.add_subcommand("gauss-selftest", "divergence theorem on random polynomial fields");
  auto* list = app.add_subcommand("list-generators", "print the generator syntax");
  for (auto* cmd : {verify, integral, convergence, gauss}) add_common(cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hyperholo::cli::kExitUsage;
  }

  try {
    if (list->parsed()) return hyperholo::cli::cmd_list_generators(std::cout);
    if (verify->parsed()) return hyperholo::cli::cmd_verify(build_config(verify, opts), std::cout);
    if (integral->parsed()) return hyperholo::cli::cmd_integral(build_config(integral, opts), std::cout);
    if (convergence->parsed()) return hyperholo::cli::cmd_convergence(build_config(convergence, opts), std::cout);
    if (gauss->parsed()) return hyperholo::cli::cmd_gauss_selftest(build_config(gauss, opts), std::cout);
  } catch (const hyperholo::Error& e) {
    std::cerr << (e.kind() == hyperholo::ErrorKind::parse ? "usage error: " : "error: ") << e.what() << "\n";
    return hyperholo::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperholo::cli::kExitFailed;
  }
  return hyperholo::cli::kExitUsage;
}
