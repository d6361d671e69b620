#include <iostream>

#include <CLI11.hpp>

#include "fuchsian/commands.hpp"

int main(int argc, char** argv) {
  using fuchsian::Command;
  fuchsian::RunConfig cfg;
  CLI::App app{"Fuchsian codes for the AWGN channel"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--preset", cfg.preset, "built-in preset (e2d1D6ii, gamma61) or preset file");
    sub->add_option("--size", cfg.size, "codebook size before duplication");
    sub->add_flag("--duplicate", cfg.duplicate, "add the negated codewords");
    sub->add_option("--out", cfg.out, "output CSV path");
  };

  auto* gen = app.add_subcommand("gen-constellation", "write a codebook CSV");
  add_common(gen);
  auto* opt = app.add_subcommand("optimize-tau", "optimize the base point for a strip preset");
  add_common(opt);
  auto* sim = app.add_subcommand("simulate", "Monte Carlo CER sweep");
  add_common(sim);
  sim->add_option("--snr-min", cfg.snr_min, "first SNR point (dB)");
  sim->add_option("--snr-max", cfg.snr_max, "last SNR point (dB)");
  sim->add_option("--snr-step", cfg.snr_step, "SNR step (dB)")->check(CLI::PositiveNumber);
  sim->add_option("--trials", cfg.trials, "trials per SNR point")->check(CLI::PositiveNumber);
  sim->add_option("--seed", cfg.seed, "RNG seed");
  sim->add_option("--baseline", cfg.baseline, "also simulate the matched-size QAM")->check(CLI::IsMember({"qam"}));
  sim->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  sim->add_option("--codebook", cfg.codebook, "codebook CSV to simulate instead of generating one");
  sim->add_flag("--phase-rotation", cfg.phase_rotation, "random phase channel with receiver de-rotation");
  auto* self = app.add_subcommand("selftest", "run the built-in checks");
  auto* self_preset = self->add_option("--preset", cfg.preset, "check only this preset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fuchsian::kExitUsage;
  }

  if (gen->parsed()) cfg.command = Command::GenConstellation;
  else if (opt->parsed()) cfg.command = Command::OptimizeTau;
  else if (sim->parsed()) cfg.command = Command::Simulate;
  else cfg.command = Command::Selftest;
  cfg.preset_given = self_preset->count() > 0;
  return fuchsian::run_command(cfg, std::cout, std::cerr);
}
