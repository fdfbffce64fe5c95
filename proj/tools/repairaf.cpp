// repairaf: subset repairs of relational databases via argumentation.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "repairaf/cli.hpp"
#include "repairaf/error.hpp"

namespace {

using repairaf::cli::Command;
using repairaf::cli::JobConfig;

struct Options {
  std::string semantics;
  bool compact = false;
};

void add_instance_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--db", cfg.database_paths, "Relation CSV, as PATH or NAME=PATH (repeatable)")
      ->required();
  sub->add_option("--deps", cfg.dependency_path, "Dependency file");
}

void add_semantics_option(CLI::App* sub, Options& opts, JobConfig& cfg) {
  sub->add_option("--semantics", opts.semantics, "Override the routed semantics: naive, pref or stab");
  sub->add_flag("--allow-empty", cfg.allow_empty, "Admit the empty extension (with --semantics)");
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  Options opts;
  CLI::App app{"Subset repairs of relational databases under functional and inclusion dependencies"};
  app.require_subcommand(1);
  app.add_flag("--compact", opts.compact, "Print JSON on one line");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks (REPAIRAF_SEED overrides)");
  app.add_option("--oracle-ceiling", cfg.oracle_ceiling, "Largest database the brute-force oracle accepts")
      ->check(CLI::Range(1, 32));

  auto* repairs = app.add_subcommand("repairs", "Enumerate all repairs");
  add_instance_options(repairs, cfg);
  add_semantics_option(repairs, opts, cfg);

  auto* exists = app.add_subcommand("exists", "Is there a repair?");
  add_instance_options(exists, cfg);
  add_semantics_option(exists, opts, cfg);

  auto* brave = app.add_subcommand("brave", "Is the tuple in some repair?");
  brave->add_option("tuple", cfg.tuple, "Tuple id")->required();
  add_instance_options(brave, cfg);
  add_semantics_option(brave, opts, cfg);

  auto* cautious = app.add_subcommand("cautious", "Is the tuple in every repair?");
  cautious->add_option("tuple", cfg.tuple, "Tuple id")->required();
  add_instance_options(cautious, cfg);
  add_semantics_option(cautious, opts, cfg);
  cautious->add_flag("--vacuous", cfg.vacuous_skeptical, "Answer true when no repair exists");

  auto* size = app.add_subcommand("size-atleast", "Is there a repair with at least k tuples? (FDs only)");
  size->add_option("k", cfg.k, "Lower bound")->required()->check(CLI::PositiveNumber);
  add_instance_options(size, cfg);

  auto* translate = app.add_subcommand("translate", "Write the argumentation framework as APX plus a JSON sidecar");
  add_instance_options(translate, cfg);
  translate->add_option("--out", cfg.output_dir, "Directory for framework.apx and framework.json");
  translate->add_flag("--raw", cfg.raw, "Skip pre-processing (debugging aid)");

  auto* enc_sat = app.add_subcommand("encode-sat", "DIMACS CNF to a somerepair instance");
  auto* enc_rep = app.add_subcommand("encode-sat-rep", "DIMACS CNF to a repair-existence instance");
  auto* enc_qbf = app.add_subcommand("encode-qbf", "Two-block QDIMACS to an allrepair instance");
  for (auto* sub : {enc_sat, enc_rep, enc_qbf}) {
    sub->add_option("formula", cfg.formula_path, "Input formula")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", cfg.output_dir, "Directory for T.csv and deps.txt");
  }

  auto* oracle = app.add_subcommand("oracle", "Brute-force repairs over every subset");
  add_instance_options(oracle, cfg);

  auto* verify = app.add_subcommand("verify", "Compare the pipeline against the brute-force oracle");
  add_instance_options(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other command-line problem is a usage error
    return app.exit(e) == 0 ? 0 : 1;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = *repairaf::cli::parse_command(sub->get_name());
  }

  try {
    if (!opts.semantics.empty()) {
      auto sem = repairaf::parse_semantics(opts.semantics);
      if (!sem) throw repairaf::DomainError("unknown semantics '" + opts.semantics + "'");
      cfg.semantics_override = sem;
    }
    repairaf::cli::apply_environment(cfg);
    auto doc = repairaf::cli::run_command(cfg);
    std::cout << (opts.compact ? doc.dump() : doc.dump(2)) << "\n";
    return 0;
  } catch (const repairaf::Error& e) {
    std::cerr << repairaf::cli::error_document(e.kind(), e.what()).dump() << "\n";
    return repairaf::cli::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << repairaf::io::json{{"error", {{"kind", "internal"}, {"message", e.what()}, {"exit_code", 9}}}}.dump()
              << "\n";
    return 9;
  }
}
