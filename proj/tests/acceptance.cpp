// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "fuchsian/codec.hpp"
#include "fuchsian/error.hpp"
#include "fuchsian/simulator.hpp"

using namespace fuchsian;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, const std::function<Outcome()>& body, double time_limit_s = 0.0) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0.0 && secs >= time_limit_s) {
    r.ok = false;
    r.detail += " (took " + std::to_string(secs) + " s, limit " + std::to_string(time_limit_s) + " s)";
  }
  if (!r.ok) ++failures;
  std::printf("%s %-28s %.2fs  %s\n", r.ok ? "PASS" : "FAIL", name, secs, r.detail.c_str());
  std::fflush(stdout);
}

std::shared_ptr<const GroupPreset> shared(const GroupPreset& p) { return std::make_shared<const GroupPreset>(p); }

double qpsk_ser(double es_over_n0) {
  const double e = std::erfc(std::sqrt(es_over_n0 / 2.0));
  return e - 0.25 * e * e;
}

std::size_t word_length(const Word& w) {
  std::size_t n = 0;
  for (const auto& l : w) n += static_cast<std::size_t>(std::llabs(l.exponent));
  return n;
}

}  // namespace

int main() {
  const auto e2 = shared(preset_e2d1D6ii());
  const auto g61 = shared(preset_gamma61());

  criterion("phi-examples", [] {
    const bool ok = gen_phi(1, 0, 1) == Tuple4{2, 0, 3, 2} && gen_phi(2, 0, 1) == Tuple4{7, 0, 12, 8} &&
                    gen_phi(2, 1, 1) == Tuple4{14, 7, 12, 8};
    return Outcome{ok, "phi(1,0,1)=" + to_string(gen_phi(1, 0, 1)) + " phi(2,0,1)=" + to_string(gen_phi(2, 0, 1)) +
                           " phi(2,1,1)=" + to_string(gen_phi(2, 1, 1))};
  }, 1.0);

  criterion("normic-invariant", [&] {
    std::size_t checked = 0;
    auto normic = [](const Tuple4& t) {
      const __int128 x = t.x, y = t.y, z = t.z, w = t.t;
      return x * x - 3 * y * y + z * z - 3 * w * w == 1;
    };
    for (int m = 1; m <= 5; ++m)
      for (int k1 = 0; k1 <= 5; ++k1)
        for (int k2 = 0; k2 <= 5; ++k2, ++checked)
          if (!normic(gen_phi(m, k1, k2))) return Outcome{false, "phi" + to_string(LabelTriple{m, k1, k2})};
    for (std::size_t size : {4, 8, 16}) {
      const Codebook book = make_codebook(g61, size, true);
      for (const auto& e : book.entries) {
        ++checked;
        if (!e.tuple || !normic(*e.tuple)) return Outcome{false, "codebook entry " + to_string(e.label)};
      }
    }
    return Outcome{true, std::to_string(checked) + " tuples"};
  });

  criterion("zero-noise-round-trip", [&] {
    std::size_t checked = 0;
    for (const auto& preset : {e2, g61})
      for (std::size_t size : {4, 8, 16})
        for (bool dup : {false, true}) {
          const Codebook book = make_codebook(preset, size, dup);
          for (const auto& e : book.entries) {
            ++checked;
            if (decode(book, encode(book, e.label)) != e.label)
              return Outcome{false, preset->name + " " + to_string(e.label)};
          }
        }
    return Outcome{true, std::to_string(checked) + " labels, 100%"};
  }, 10.0);

  criterion("step-bound", [&] {
    const PointH tau = make_codebook(e2, 4, false).tau;
    std::string detail;
    // Codebooks of all reduced words of length <= M.
    for (std::size_t M = 1; M <= 3; ++M) {
      const auto words = enumerate_words(*e2, 100000, M);
      std::vector<LabelTriple> labels;
      for (std::size_t i = 1; i <= words.size(); ++i) labels.push_back({static_cast<std::int64_t>(i), 0, 0});
      const Codebook book = build_codebook(labels, e2, tau, false);
      const double bound = std::log2(static_cast<double>(book.size()) + 1.0);
      for (const auto& e : book.entries) {
        const auto steps = decode_detailed(book, e.point).steps;
        if (steps > static_cast<std::int64_t>(M) || static_cast<double>(steps) > bound)
          return Outcome{false, to_string(e.word) + " used " + std::to_string(steps) + " steps, M=" + std::to_string(M)};
      }
      detail += "M=" + std::to_string(M) + ":|C|=" + std::to_string(book.size()) + " ";
    }
    // Mean and max steps against c*log2(|C|+1) with c = 1.
    for (std::size_t size : {4, 8, 16, 32}) {
      const Codebook book = make_codebook(e2, size, false);
      double total = 0.0;
      std::int64_t worst = 0;
      for (const auto& e : book.entries) {
        const auto d = decode_detailed(book, e.point);
        if (static_cast<std::size_t>(d.steps) > word_length(e.word))
          return Outcome{false, to_string(e.word) + " exceeded its word length"};
        total += static_cast<double>(d.steps);
        worst = std::max(worst, d.steps);
      }
      const double mean = total / static_cast<double>(size);
      const double bound = std::log2(static_cast<double>(size) + 1.0);
      if (mean > bound || static_cast<double>(worst) > bound)
        return Outcome{false, "|C|=" + std::to_string(size) + " mean " + std::to_string(mean)};
      char buf[64];
      std::snprintf(buf, sizeof buf, "|C|=%zu mean=%.3g max=%lld; ", size, mean, static_cast<long long>(worst));
      detail += buf;
    }
    return Outcome{true, detail + "c=1"};
  });

  criterion("fundamental-domain", [&] {
    const auto words = enumerate_words(*e2, 100000, 3);
    const double lam = std::get<StripDomain>(e2->domain).lambda;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> re(-lam, lam), im(0.0, lam);
    std::vector<PointH> pts;
    while (pts.size() < 100) {
      const PointH z{re(rng), im(rng)};
      if (z.im > 0 && domain_contains(e2->domain, z, 1e-9) == Membership::Interior) pts.push_back(z);
    }
    for (const auto& w : words) {
      const GroupMatrix g = word_to_matrix(w, *e2);
      for (const auto& z : pts)
        if (domain_contains(e2->domain, moebius_apply(g, z), 1e-9) != Membership::Outside)
          return Outcome{false, to_string(w) + " keeps a point inside F"};
    }
    return Outcome{true, std::to_string(words.size()) + " words x 100 points"};
  });

  criterion("qam-oracle", [] {
    const std::vector<double> grid{4, 6, 8, 10};
    const auto res = run_sweep(qam_transceiver(qam_reference(4)), grid, 100000, {0.0, ChannelMode::Awgn, 11});
    std::string detail;
    bool ok = true;
    for (const auto& r : res.rows) {
      const double p = qpsk_ser(std::pow(10.0, r.snr_db / 10.0));
      const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(r.trials));
      const double z = (r.cer - p) / sigma;
      ok = ok && std::abs(z) <= 3.0;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%gdB: %.5f vs %.5f (%+.2fs) ", r.snr_db, r.cer, p, z);
      detail += buf;
    }
    return Outcome{ok, detail};
  }, 30.0);

  criterion("cer-behaviour", [&] {
    const Codebook book = make_codebook(e2, 4, false);
    const std::vector<double> grid{5, 10, 15, 20, 25, 30};
    const auto res = run_sweep(book, grid, 100000, {0.0, ChannelMode::Awgn, 2025});
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
      const auto& r = res.rows[i];
      char buf[48];
      std::snprintf(buf, sizeof buf, "%g:%.2e ", r.snr_db, r.cer);
      detail += buf;
      if (i == 0) continue;
      const auto& prev = res.rows[i - 1];
      const double var = (prev.cer * (1 - prev.cer)) / static_cast<double>(prev.trials) +
                         (r.cer * (1 - r.cer)) / static_cast<double>(r.trials);
      if (r.cer > prev.cer + 3.0 * std::sqrt(var)) ok = false;
    }
    if (!(res.rows.back().cer < 1e-2)) ok = false;

    const Codebook dup = make_codebook(e2, 4, true);
    const double n0 = snr_to_n0(20.0, average_energy(dup.points()));
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> pick(0, dup.size() - 1);
    int both = 0, broken = 0;
    for (int i = 0; i < 10000; ++i) {
      const std::complex<double> v = dup.entries[pick(rng)].point + awgn_sample(rng, n0);
      try {
        const LabelTriple a = decode(dup, v);
        const LabelTriple b = decode(dup, -v);
        ++both;
        if (b != a.negated()) ++broken;
      } catch (const Error&) {
      }
    }
    detail += "| symmetry " + std::to_string(both - broken) + "/" + std::to_string(both);
    return Outcome{ok && broken == 0 && both > 0, detail};
  });

  criterion("determinism", [&] {
    const std::vector<double> grid{5, 15, 25};
    const ChannelConfig cfg{0.0, ChannelMode::Awgn, 123456789};
    std::string detail;
    for (const auto& preset : {e2, g61}) {
      const Codebook book = make_codebook(preset, 8, true);
      const std::string serial = sweep_to_csv(run_sweep(book, grid, 20000, cfg, {1, 1024}));
      const std::string again = sweep_to_csv(run_sweep(book, grid, 20000, cfg, {1, 1024}));
      const std::string parallel = sweep_to_csv(run_sweep(book, grid, 20000, cfg, {4, 1024}));
      if (serial != again || serial != parallel) return Outcome{false, preset->name + " sweeps differ"};
      detail += preset->name + " identical; ";
    }
    return Outcome{true, detail};
  });

  criterion("phase-rotation", [&] {
    const std::vector<double> grid{std::numeric_limits<double>::infinity()};
    std::uint64_t trials = 0, errors = 0;
    for (const auto& preset : {e2, g61})
      for (std::size_t size : {4, 16}) {
        const Codebook book = make_codebook(preset, size, true);
        const auto r = run_sweep(book, grid, 20000, {0.0, ChannelMode::PhaseRotation, 31});
        trials += r.rows[0].trials;
        errors += r.rows[0].errors;
      }
    return Outcome{errors == 0, std::to_string(errors) + " errors in " + std::to_string(trials) + " trials"};
  });

  std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
