#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fuchsian {

enum class Command { GenConstellation, OptimizeTau, Simulate, Selftest };

struct RunConfig {
  Command command = Command::Selftest;
  std::string preset = "e2d1D6ii";  // built-in name or preset file path
  std::size_t size = 4;
  double snr_min = 0.0;
  double snr_max = 20.0;
  double snr_step = 2.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  bool duplicate = false;
  std::string baseline;  // "" or "qam"
  std::string out;
  std::string codebook;  // simulate: optional codebook CSV to load instead of generating
  bool phase_rotation = false;
  unsigned threads = 1;
  bool preset_given = false;  // selftest: check only this preset
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_gen_constellation(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_optimize_tau(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// "<stem>_qam.csv" for "<stem>.csv", otherwise path + "_qam.csv".
std::string baseline_path(const std::string& out);

}  // namespace fuchsian
