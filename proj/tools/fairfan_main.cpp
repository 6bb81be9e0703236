#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fairfan/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fairfan: convex partitions capturing many measures"};
  app.require_subcommand(1);

  fairfan::RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "ambient dimension");
    sub->add_option("--n", cfg.n, "number of pieces / columns");
    sub->add_option("--c", cfg.c, "required coverage");
    sub->add_option("--m", cfg.m, "number of measures / rows");
    sub->add_option("--alpha", cfg.alpha, "fraction target, rational p/q");
    sub->add_option("--seed", cfg.seed, "rng seed");
    sub->add_option("--in", cfg.in_path, "input measure-family JSON");
    sub->add_option("--out", cfg.out_path, "output path (family, partition or DOT)");
    sub->add_option("--svg", cfg.svg_path, "SVG rendering path (d=2)");
    sub->add_option("--mode", cfg.mode, "variant selector (t5: point|nu; poset: one|sum)");
    sub->add_option("--candidates", cfg.candidates, "falsification budget (run optimal)");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate a measure family");
  gen->add_option("--kind", cfg.kind, "random | adversarial")->required();
  add_common(gen);

  CLI::App* run = app.add_subcommand("run", "run a construction and certify its guarantees");
  run->add_option("--theorem", cfg.theorem, "fan | t5 | t7 | t8 | optimal | poset")->required();
  add_common(run);

  CLI11_PARSE(app, argc, argv);

  fairfan::RunOutcome outcome;
  if (gen->parsed()) {
    cfg.command = "gen";
    outcome = fairfan::cmd_gen(cfg);
  } else {
    cfg.command = "run";
    outcome = fairfan::cmd_run(cfg);
  }
  std::fputs(outcome.report_json.c_str(), stdout);
  return outcome.exit_code;
}
