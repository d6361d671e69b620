#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fuchsian/codec.hpp"

namespace fuchsian {

enum class ChannelMode { Awgn, PhaseRotation };

struct ChannelConfig {
  double n0 = 0.0;
  ChannelMode mode = ChannelMode::Awgn;
  std::uint64_t seed = 1;
};

struct SweepRow {
  double snr_db;
  std::uint64_t trials;
  std::uint64_t errors;
  double cer;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Mean of |w|^2. EmptyConstellation on an empty list.
double average_energy(std::span<const std::complex<double>> points);

/// E / 10^(snr/10); +inf dB gives 0.
double snr_to_n0(double snr_db, double energy);

/// Circular complex Gaussian with variance n0/2 per component.
std::complex<double> awgn_sample(std::mt19937_64& rng, double n0);

/// A transmit alphabet plus a detector returning the decoded index, or -1
/// when detection fails.
struct Transceiver {
  std::vector<std::complex<double>> points;
  std::function<std::int64_t(std::complex<double>)> detect;
};

Transceiver codebook_transceiver(const Codebook& book);
Transceiver qam_transceiver(std::vector<std::complex<double>> points);

struct SweepOptions {
  unsigned threads = 1;
  std::uint64_t block_size = 4096;
};

/// Monte Carlo CER per SNR point. Trials are split into fixed blocks, each
/// drawing from its own generator keyed by (seed, snr index, block index),
/// so the result does not depend on the thread count.
SweepResult run_sweep(const Transceiver& system, std::span<const double> snr_grid, std::uint64_t trials,
                      const ChannelConfig& cfg, SweepOptions opts = {});

inline SweepResult run_sweep(const Codebook& book, std::span<const double> snr_grid, std::uint64_t trials,
                             const ChannelConfig& cfg, SweepOptions opts = {}) {
  return run_sweep(codebook_transceiver(book), snr_grid, trials, cfg, opts);
}

/// One SNR point at a fixed noise level cfg.n0 (same substream layout as run_sweep).
SweepRow run_point(const Transceiver& system, double snr_db, std::size_t snr_index, std::uint64_t trials,
                   const ChannelConfig& cfg, SweepOptions opts = {});

/// Inclusive grid min, min+step, ... up to max (within step/1e9).
std::vector<double> snr_range(double min_db, double max_db, double step_db);

/// 4-QAM {+-1+-i}, 16-QAM {+-1,+-3}^2, 8-QAM the minimal-energy
/// negation-symmetric 8-subset of 16-QAM. UnsupportedSize otherwise.
std::vector<std::complex<double>> qam_reference(int size);

/// Nearest point in Euclidean distance; ties go to the lowest index.
std::size_t ml_decode(std::span<const std::complex<double>> points, std::complex<double> v);

/// Header snr_db,trials,errors,cer; doubles with 17 significant digits.
std::string sweep_to_csv(const SweepResult& result);

}  // namespace fuchsian
