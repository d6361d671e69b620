#include "fuchsian/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <thread>

#include "fuchsian/error.hpp"

namespace fuchsian {

double average_energy(std::span<const std::complex<double>> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyConstellation, "average energy of no points");
  double s = 0.0;
  for (const auto& p : points) s += std::norm(p);
  return s / static_cast<double>(points.size());
}

double snr_to_n0(double snr_db, double energy) {
  if (!(energy > 0.0)) throw Error(ErrorCode::InvalidArgument, "energy must be positive");
  return energy / std::pow(10.0, snr_db / 10.0);
}

std::complex<double> awgn_sample(std::mt19937_64& rng, double n0) {
  if (n0 < 0.0) throw Error(ErrorCode::InvalidArgument, "n0 must be non-negative");
  if (n0 == 0.0) return {0.0, 0.0};
  std::normal_distribution<double> gauss(0.0, std::sqrt(n0 / 2.0));
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

Transceiver codebook_transceiver(const Codebook& book) {
  if (book.entries.empty()) throw Error(ErrorCode::EmptyConstellation, "empty codebook");
  Transceiver t;
  t.points = book.points();
  t.detect = [&book](std::complex<double> v) -> std::int64_t {
    try {
      const auto i = book.find(decode(book, v));
      return i ? static_cast<std::int64_t>(*i) : -1;
    } catch (const Error&) {
      return -1;
    }
  };
  return t;
}

Transceiver qam_transceiver(std::vector<std::complex<double>> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyConstellation, "empty constellation");
  Transceiver t;
  t.points = std::move(points);
  t.detect = [pts = t.points](std::complex<double> v) { return static_cast<std::int64_t>(ml_decode(pts, v)); };
  return t;
}

namespace {

std::uint64_t run_block(const Transceiver& system, double n0, ChannelMode mode, std::uint64_t seed,
                        std::size_t snr_index, std::uint64_t block, std::uint64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(snr_index), static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick(0, system.points.size() - 1);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uint64_t errors = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::size_t k = pick(rng);
    const std::complex<double> u = system.points[k];
    std::complex<double> v;
    if (mode == ChannelMode::PhaseRotation) {
      const std::complex<double> h = std::polar(1.0, phase(rng));
      const std::complex<double> y = h * u + awgn_sample(rng, n0);
      v = std::conj(h) * y;
    } else {
      v = u + awgn_sample(rng, n0);
    }
    if (system.detect(v) != static_cast<std::int64_t>(k)) ++errors;
  }
  return errors;
}

}  // namespace

SweepRow run_point(const Transceiver& system, double snr_db, std::size_t snr_index, std::uint64_t trials,
                   const ChannelConfig& cfg, SweepOptions opts) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  if (system.points.empty()) throw Error(ErrorCode::EmptyConstellation, "empty constellation");
  if (cfg.n0 < 0.0) throw Error(ErrorCode::InvalidArgument, "n0 must be non-negative");
  if (opts.block_size == 0) throw Error(ErrorCode::InvalidArgument, "block size must be positive");
  const std::uint64_t blocks = (trials + opts.block_size - 1) / opts.block_size;
  std::vector<std::uint64_t> errors(blocks, 0);
  auto block_len = [&](std::uint64_t b) { return std::min(opts.block_size, trials - b * opts.block_size); };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(blocks)));
  if (threads == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b)
      errors[b] = run_block(system, cfg.n0, cfg.mode, cfg.seed, snr_index, b, block_len(b));
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;)
            errors[b] = run_block(system, cfg.n0, cfg.mode, cfg.seed, snr_index, b, block_len(b));
        } catch (...) {
          failures[w] = std::current_exception();
          next = blocks;
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }
  std::uint64_t total = 0;
  for (auto e : errors) total += e;
  return {snr_db, trials, total, static_cast<double>(total) / static_cast<double>(trials)};
}

SweepResult run_sweep(const Transceiver& system, std::span<const double> snr_grid, std::uint64_t trials,
                      const ChannelConfig& cfg, SweepOptions opts) {
  const double energy = average_energy(system.points);
  SweepResult result;
  for (std::size_t i = 0; i < snr_grid.size(); ++i) {
    ChannelConfig point_cfg = cfg;
    point_cfg.n0 = snr_to_n0(snr_grid[i], energy);
    result.rows.push_back(run_point(system, snr_grid[i], i, trials, point_cfg, opts));
  }
  return result;
}

std::vector<double> snr_range(double min_db, double max_db, double step_db) {
  if (!(step_db > 0.0)) throw Error(ErrorCode::InvalidArgument, "SNR step must be positive");
  if (max_db < min_db) throw Error(ErrorCode::InvalidArgument, "SNR max is below SNR min");
  std::vector<double> grid;
  for (std::int64_t i = 0;; ++i) {
    const double s = min_db + static_cast<double>(i) * step_db;
    if (s > max_db + step_db * 1e-9) break;
    grid.push_back(s);
  }
  return grid;
}

std::vector<std::complex<double>> qam_reference(int size) {
  std::vector<std::complex<double>> grid16;
  for (int re : {-3, -1, 1, 3})
    for (int im : {-3, -1, 1, 3}) grid16.emplace_back(re, im);
  switch (size) {
    case 4: return {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    case 16: return grid16;
    case 8: break;
    default: throw Error(ErrorCode::UnsupportedSize, "QAM size " + std::to_string(size) + " is not 4, 8 or 16");
  }
  // Choose 4 of the 8 negation pairs: least energy, then lexicographically first.
  std::vector<std::complex<double>> reps;
  for (const auto& p : grid16)
    if (p.real() > 0) reps.push_back(p);
  auto lex_less = [](const std::complex<double>& a, const std::complex<double>& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::vector<std::complex<double>> best;
  double best_energy = INFINITY;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4) continue;
    std::vector<std::complex<double>> subset;
    for (unsigned i = 0; i < 8; ++i)
      if (mask & (1u << i)) {
        subset.push_back(reps[i]);
        subset.push_back(-reps[i]);
      }
    std::sort(subset.begin(), subset.end(), lex_less);
    const double e = average_energy(subset);
    if (e < best_energy ||
        (e == best_energy && std::lexicographical_compare(subset.begin(), subset.end(), best.begin(), best.end(),
                                                          lex_less))) {
      best_energy = e;
      best = std::move(subset);
    }
  }
  return best;
}

std::size_t ml_decode(std::span<const std::complex<double>> points, std::complex<double> v) {
  if (points.empty()) throw Error(ErrorCode::EmptyConstellation, "ml_decode on no points");
  std::size_t best = 0;
  double best_d = std::norm(points[0] - v);
  for (std::size_t i = 1; i < points.size(); ++i)
    if (const double d = std::norm(points[i] - v); d < best_d) {
      best_d = d;
      best = i;
    }
  return best;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "snr_db,trials,errors,cer\n";
  char buf[128];
  for (const auto& r : result.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%llu,%llu,%.17g\n", r.snr_db, static_cast<unsigned long long>(r.trials),
                  static_cast<unsigned long long>(r.errors), r.cer);
    out += buf;
  }
  return out;
}

}  // namespace fuchsian
