#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "kneser/error.hpp"

namespace cli = kneser::cli;

int main(int argc, char** argv) {
  CLI::App app{"Normal sphere decomposition and projection estimates"};
  app.require_subcommand(1);

  std::string path;
  std::optional<std::size_t> budget;

  auto* dec = app.add_subcommand("decompose", "Decompose a closed orientable triangulation along normal spheres");
  cli::DecomposeFlags dflags;
  dec->add_option("path", path, "tri v1 file")->required();
  dec->add_option("--budget", budget, "Maximum intermediate rays per enumeration");
  dec->add_option("--seed", dflags.seed, "Recorded in the report; the pipeline is deterministic");
  dec->add_flag("--oracle-check", dflags.oracle_check, "Cross-check every crush by cutting and capping");

  auto* en = app.add_subcommand("enumerate", "List the vertex normal surfaces");
  cli::EnumerateFlags eflags;
  en->add_option("path", path, "tri v1 file")->required();
  en->add_flag("--pl-area", eflags.pl_area, "Report PL lengths");
  en->add_flag("--verify-diam", eflags.verify_diam, "Check diam <= wt^2 for every surface");
  en->add_option("--budget", budget, "Maximum intermediate rays");
  en->add_option("--dump", eflags.dump, "Write the surface dump to this file");

  auto* mc = app.add_subcommand("montecarlo", "Estimate the bad-center volume of a patch");
  cli::MonteCarloFlags mflags;
  std::string sweep;
  mc->add_option("path", path, "patch v1 file")->required();
  mc->add_option("--nu", mflags.nu, "Dilatation threshold")->capture_default_str();
  mc->add_option("--samples", mflags.samples, "Number of centers")->capture_default_str()->check(CLI::PositiveNumber);
  mc->add_option("--seed", mflags.seed, "Sampling seed")->capture_default_str();
  mc->add_option("--sweep", sweep, "Threshold sweep a:b:steps");
  mc->add_option("--csv", mflags.csv, "Write sweep rows to this CSV file");

  auto* gen = app.add_subcommand("generate", "Write a corpus file");
  std::string kind, output;
  std::string kinds_help = "One of:";
  for (const auto& k : cli::generate_kinds()) kinds_help += " " + k;
  gen->add_option("kind", kind, kinds_help)->required();
  gen->add_option("-o,--output", output, "Output file");

  auto* val = app.add_subcommand("validate", "Parse and summarize a tri or patch file");
  val->add_option("path", path, "Input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInput;
  }

  cli::CommandResult result;
  if (*dec) {
    dflags.budget = budget;
    result = cli::decompose(path, dflags);
  } else if (*en) {
    eflags.budget = budget;
    result = cli::enumerate(path, eflags);
  } else if (*mc) {
    try {
      if (!sweep.empty()) mflags.sweep = cli::parse_sweep(sweep);
    } catch (const kneser::Error& e) {
      std::cerr << e.what() << "\n";
      return cli::kInput;
    }
    result = cli::montecarlo(path, mflags);
  } else if (*gen) {
    result = cli::generate(kind, output);
  } else {
    result = cli::validate(path);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit;
}
