#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "s4/rational.hpp"

int main(int argc, char** argv) {
  using s4::cli::Format;
  s4::cli::RunConfig cfg;
  bool all = false;
  std::string format = "text";

  CLI::App app{"Exact checks for level-1 affine vertex algebras and their fixed points"};
  app.require_subcommand(0, 1);
  app.add_flag("--all", all, "Run every acceptance criterion and print the scoreboard");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", cfg.output_path, "Write the report to this file");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();

  auto seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Number of random samples")->capture_default_str();
  };

  auto* tables = app.add_subcommand("tables", "Reproduce a printed table (1: (c,d) pairs, 2: minimum dimensions, "
                                              "3: G2 census, 4: F4 census)");
  tables->add_option("--which", cfg.which, "Table number")->check(CLI::Range(1, 4))->capture_default_str();

  app.add_subcommand("classify", "Level-1 candidates and the dimension bound");

  auto* traces = app.add_subcommand("traces", "Trace formulae and the Killing relation");
  traces->add_flag("--exhaustive,!--sampled", cfg.exhaustive, "Use all basis tuples (default: when dim^4 <= 50000)");
  seeded(traces);

  auto* strings = app.add_subcommand("strings", "Level-1 string functions");
  strings->add_option("--order", cfg.order, "Number of terms after the leading exponent (default 7)");

  auto* fixedpoint = app.add_subcommand("fixedpoint", "Graded dimension of the fixed-point subalgebra");
  fixedpoint->add_option("--order", cfg.order, "Truncation order in q (default 9)");

  auto* invariants = app.add_subcommand("invariants", "Molien series and Reynolds ranks for lattice automorphisms");
  invariants->add_option("--lattice", cfg.lattice, "A2 or D4")->capture_default_str();
  invariants->add_option("--subgroup", cfg.subgroup, "full, W, E, H, minus_tau or trivial")->capture_default_str();
  invariants->add_option("--degree", cfg.degree, "Maximum degree (default 5)")->check(CLI::Range(0, 6));
  invariants->add_flag("--x-check", cfg.x_check, "Also run the D4 degree-4 complement check");

  auto* casimir = app.add_subcommand("casimir", "Solve for the Casimir element in the Virasoro vacuum module");
  casimir->add_option("--c", cfg.c, "Central charge p/q")->capture_default_str();
  casimir->add_option("--d", cfg.d, "Dimension of the weight-one space")->capture_default_str();
  casimir->add_option("--n", cfg.n, "Degree")->check(CLI::Range(0, 4))->capture_default_str();

  auto* radical = app.add_subcommand("radical", "Casimir identities and radical membership at level 1");

  auto* appendixb = app.add_subcommand("appendixb", "Commutation lemma, projections and trace decomposition");
  seeded(appendixb);

  auto* census = app.add_subcommand("census", "Census of |rho - w rho|^2 over the Weyl group");
  census->add_option("--bound", cfg.bound, "Only elements with |rho - w rho|^2 <= bound (p/q)");

  for (auto* sub : {traces, fixedpoint, census}) sub->add_option("-t,--type", cfg.type_label, "Cartan type (default A1)");
  strings->add_option("-t,--type", cfg.type_label, "G2, F4 or a simply-laced type (default G2)");
  for (auto* sub : {radical, appendixb}) sub->add_option("-t,--type", cfg.type_label, "A1 or A2 (default A1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (all == !app.get_subcommands().empty()) {
    std::cerr << "choose exactly one of --all or a subcommand\n" << app.help();
    return 2;
  }
  cfg.format = format == "json" ? Format::json : Format::text;

  s4::cli::Outcome outcome;
  try {
    if (all) {
      cfg.subcommand = "all";
      outcome = s4::cli::run_all(cfg);
    } else {
      cfg.subcommand = app.get_subcommands().front()->get_name();
      if (cfg.subcommand == "strings" && strings->count("--type") == 0) cfg.type_label = "G2";
      outcome = s4::cli::run(cfg);
    }
  } catch (const s4::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string rendered =
      cfg.format == Format::json ? s4::cli::envelope(cfg, outcome).dump(2) + "\n" : outcome.text;
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) {
      std::cerr << "error: cannot write " << *cfg.output_path << "\n";
      return 2;
    }
    file << rendered;
  } else {
    std::cout << rendered;
  }
  return outcome.passed ? 0 : 1;
}
