#include "fuchsian/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "fuchsian/codec.hpp"
#include "fuchsian/error.hpp"
#include "fuchsian/preset_io.hpp"
#include "fuchsian/simulator.hpp"

namespace fuchsian {

namespace {

std::string fmt(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Usage-level failure: the message goes to err and the command exits 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<const GroupPreset> load_preset(const std::string& name) {
  try {
    return std::make_shared<const GroupPreset>(resolve_preset(name));
  } catch (const Error& e) {
    throw UsageError("preset '" + name + "': " + e.what());
  }
}

void check_size(const GroupPreset& preset, std::size_t size) {
  if (size < 1) throw UsageError("--size must be at least 1");
  if (find_builtin_preset(preset.name) && size != 4 && size != 8 && size != 16)
    throw UsageError("--size must be 4, 8 or 16 for preset '" + preset.name + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

std::size_t word_length(const Word& w) {
  std::size_t n = 0;
  for (const auto& l : w) n += static_cast<std::size_t>(std::llabs(l.exponent));
  return n;
}

}  // namespace

std::string baseline_path(const std::string& out) {
  if (out.size() > 4 && out.compare(out.size() - 4, 4, ".csv") == 0) return out.substr(0, out.size() - 4) + "_qam.csv";
  return out + "_qam.csv";
}

int cmd_gen_constellation(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto preset = load_preset(cfg.preset);
    check_size(*preset, cfg.size);
    const Codebook book = make_codebook(preset, cfg.size, cfg.duplicate);
    const std::string path = cfg.out.empty() ? "constellation.csv" : cfg.out;
    write_file(path, export_codebook_csv(book));
    const auto pts = book.points();
    const Rates rates = compute_rates(book);
    out << "preset " << book.preset_name << "\n";
    out << "|C| = " << book.size() << "\n";
    out << "R = " << fmt(rates.r) << " bpcu\n";
    out << "Rc = " << fmt(rates.rc) << " dpcu\n";
    out << "E = " << fmt(average_energy(pts), 10) << "\n";
    out << "tau = " << fmt(book.tau.re, 10) << " + " << fmt(book.tau.im, 10) << "i\n";
    out << "wrote " << path << "\n";
    return kExitOk;
  });
}

int cmd_optimize_tau(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto preset = load_preset(cfg.preset);
    check_size(*preset, cfg.size);
    if (!preset->is_strip()) throw UsageError("optimize-tau needs a strip preset, '" + preset->name + "' is not one");
    const Codebook book = make_codebook(preset, cfg.size, false);
    std::vector<GroupMatrix> mats;
    for (const auto& e : book.entries) mats.push_back(e.matrix);
    const PointH deep = deepest_point(preset->domain);
    const PointH tau = optimize_tau(mats, preset->domain);
    out << "deepest point = " << fmt(deep.re, 12) << " + " << fmt(deep.im, 12) << "i\n";
    out << "tau = " << fmt(tau.re, 12) << " + " << fmt(tau.im, 12) << "i\n";
    if (!cfg.out.empty()) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "re,im\n%.17g,%.17g\n", tau.re, tau.im);
      write_file(cfg.out, buf);
      out << "wrote " << cfg.out << "\n";
    }
    return kExitOk;
  });
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.trials < 1) throw UsageError("--trials must be positive");
    if (!cfg.baseline.empty() && cfg.baseline != "qam") throw UsageError("--baseline accepts only 'qam'");
    const auto preset = load_preset(cfg.preset);
    std::vector<double> grid;
    try {
      grid = snr_range(cfg.snr_min, cfg.snr_max, cfg.snr_step);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    Codebook book;
    if (!cfg.codebook.empty()) {
      book = import_codebook_csv(read_file(cfg.codebook), preset);
    } else {
      check_size(*preset, cfg.size);
      book = make_codebook(preset, cfg.size, cfg.duplicate);
    }
    const ChannelConfig channel{0.0, cfg.phase_rotation ? ChannelMode::PhaseRotation : ChannelMode::Awgn, cfg.seed};
    const SweepOptions opts{cfg.threads, SweepOptions{}.block_size};
    const std::string path = cfg.out.empty() ? "sweep.csv" : cfg.out;

    std::vector<std::complex<double>> qam;
    if (cfg.baseline == "qam") {
      try {
        qam = qam_reference(static_cast<int>(book.size()));
      } catch (const Error& e) {
        throw UsageError(std::string("no QAM baseline: ") + e.what());
      }
    }
    const SweepResult res = run_sweep(book, grid, cfg.trials, channel, opts);
    write_file(path, sweep_to_csv(res));
    out << "wrote " << path << " (" << book.preset_name << ", |C| = " << book.size() << ")\n";
    for (const auto& r : res.rows) out << "  " << fmt(r.snr_db) << " dB  cer " << fmt(r.cer) << "\n";
    if (!qam.empty()) {
      const SweepResult base = run_sweep(qam_transceiver(qam), grid, cfg.trials, channel, opts);
      write_file(baseline_path(path), sweep_to_csv(base));
      out << "wrote " << baseline_path(path) << " (" << qam.size() << "-QAM)\n";
    }
    return kExitOk;
  });
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto fail = [&](const std::string& check, const std::string& why) {
    out << "FAIL " << check << ": " << why << "\n";
    err << "selftest failed at " << check << "\n";
    return kExitFailure;
  };

  struct Example {
    std::int64_t m, k1, k2;
    Tuple4 expect;
  };
  for (const Example& ex : {Example{1, 0, 1, {2, 0, 3, 2}}, Example{2, 0, 1, {7, 0, 12, 8}},
                            Example{2, 1, 1, {14, 7, 12, 8}}}) {
    const Tuple4 got = gen_phi(ex.m, ex.k1, ex.k2);
    const std::string line = "φ(" + std::to_string(ex.m) + "," + std::to_string(ex.k1) + "," +
                             std::to_string(ex.k2) + ")=" + to_string(got);
    if (got != ex.expect) return fail("phi", line + ", expected " + to_string(ex.expect));
    out << line << "\n";
  }

  std::vector<std::shared_ptr<const GroupPreset>> presets;
  if (cfg.preset_given) {
    try {
      presets.push_back(std::make_shared<const GroupPreset>(resolve_preset(cfg.preset)));
    } catch (const Error& e) {
      return fail("preset", e.what());
    }
  } else {
    presets.push_back(std::make_shared<const GroupPreset>(preset_e2d1D6ii()));
    presets.push_back(std::make_shared<const GroupPreset>(preset_gamma61()));
  }

  for (const auto& preset : presets) {
    for (std::size_t size : {4, 8, 16}) {
      const std::string check = "round-trip " + preset->name + " " + std::to_string(size);
      try {
        const Codebook book = make_codebook(preset, size, true);
        for (const auto& e : book.entries) {
          const LabelTriple got = decode(book, e.point);
          if (got != e.label) return fail(check, to_string(e.label) + " decoded as " + to_string(got));
        }
      } catch (const Error& e) {
        return fail(check, e.what());
      }
      out << "PASS " << check << "\n";
    }
  }

  for (const auto& preset : presets) {
    if (preset->codebook_kind != CodebookKind::Words) continue;
    for (std::size_t size : {4, 8, 16, 32}) {
      const std::string check = "step-bound " + preset->name + " " + std::to_string(size);
      try {
        const Codebook book = make_codebook(preset, size, false);
        double total = 0.0;
        for (const auto& e : book.entries) {
          const DecodeResult d = decode_detailed(book, e.point);
          if (static_cast<std::size_t>(d.steps) > word_length(e.word))
            return fail(check, to_string(e.word) + " took " + std::to_string(d.steps) + " steps");
          total += static_cast<double>(d.steps);
        }
        const double mean = total / static_cast<double>(book.size());
        if (mean > std::log2(static_cast<double>(size) + 1.0))
          return fail(check, "mean steps " + fmt(mean) + " exceed log2(|C|+1)");
        out << "PASS " << check << " (mean steps " << fmt(mean, 4) << ")\n";
      } catch (const Error& e) {
        return fail(check, e.what());
      }
    }
  }
  out << "selftest ok\n";
  return kExitOk;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::GenConstellation: return cmd_gen_constellation(cfg, out, err);
    case Command::OptimizeTau: return cmd_optimize_tau(cfg, out, err);
    case Command::Simulate: return cmd_simulate(cfg, out, err);
    case Command::Selftest: return cmd_selftest(cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace fuchsian
