// Command-line front end: run, oracle, sweep, gen-trace.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "halls/harness.hpp"

namespace {

struct Common {
  std::string config;
  std::vector<std::string> sets;
  std::string out;
  std::string params;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool emit_mapping = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "run configuration file (key = value lines)");
  app->add_option("--set", c.sets, "override a configuration key (key=value), repeatable");
  app->add_option("--out", c.out, "output directory");
  app->add_option("--params", c.params, "parameter table file");
  app->add_option("--seed", c.seed, "seed for replacement and workload generation");
  app->add_flag("--emit-mapping", c.emit_mapping, "print the final mapping table");
}

halls::KeyValues gather(const Common& c, const CLI::App* app) {
  halls::KeyValues kv;
  if (!c.config.empty()) kv = halls::load_key_values(c.config);
  for (const auto& s : c.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw halls::Error("--set expects key=value, got '" + s + "'");
    kv[halls::trim(s.substr(0, eq))] = halls::trim(s.substr(eq + 1));
  }
  if (!c.out.empty()) kv["out"] = c.out;
  if (!c.params.empty()) kv["params"] = c.params;
  if (app->count("--seed")) kv["seed"] = std::to_string(c.seed);
  if (c.emit_mapping) kv["emit_mapping"] = "true";
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Banked multi-retention STT-RAM LLC simulator"};
  app.require_subcommand(1);

  Common run_opts, oracle_opts, sweep_opts, gen_opts;
  auto* run = app.add_subcommand("run", "simulate the configured systems and write reports");
  add_common(run, run_opts);

  auto* oracle = app.add_subcommand("oracle", "exhaustively evaluate a tuning scope");
  add_common(oracle, oracle_opts);
  std::string scope = "retention";
  oracle->add_option("--scope", scope, "retention or config");

  auto* sweep = app.add_subcommand("sweep", "sweep one or more axes");
  add_common(sweep, sweep_opts);
  std::vector<std::string> axes;
  sweep->add_option("--axis", axes, "retention_class, config, write_fraction, lifetime_band")
      ->delimiter(',');

  auto* gen = app.add_subcommand("gen-trace", "write a synthetic trace file");
  add_common(gen, gen_opts);
  std::string trace_out;
  gen->add_option("--trace-out", trace_out, "trace path (.gz for compressed)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto rc = halls::build_run_config(gather(run_opts, run));
      return halls::cmd_run(rc, std::cout, std::cerr);
    }
    if (*oracle) {
      const auto rc = halls::build_run_config(gather(oracle_opts, oracle));
      return halls::cmd_oracle(rc, scope, std::cout, std::cerr);
    }
    if (*sweep) return halls::cmd_sweep(gather(sweep_opts, sweep), axes, std::cout, std::cerr);
    if (*gen) {
      const auto rc = halls::build_run_config(gather(gen_opts, gen));
      return halls::cmd_gen_trace(rc, trace_out, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
