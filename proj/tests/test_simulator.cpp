#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuchsian/error.hpp"
#include "fuchsian/simulator.hpp"

using namespace fuchsian;
using cd = std::complex<double>;

namespace {

double qpsk_ser(double es_over_n0) {
  const double e = std::erfc(std::sqrt(es_over_n0 / 2.0));
  return e - 0.25 * e * e;
}

std::shared_ptr<const GroupPreset> e2() { return std::make_shared<const GroupPreset>(preset_e2d1D6ii()); }

}  // namespace

TEST_CASE("average energy") {
  const std::vector<cd> a{{1, 1}, {-1, -1}};
  CHECK(average_energy(a) == doctest::Approx(2.0));
  const std::vector<cd> z{{0, 0}};
  CHECK(average_energy(z) == 0.0);
  const std::vector<cd> u{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CHECK(average_energy(u) == doctest::Approx(1.0));
  CHECK_THROWS_AS(average_energy(std::vector<cd>{}), Error);
}

TEST_CASE("snr to n0") {
  CHECK(snr_to_n0(10, 2) == doctest::Approx(0.2));
  CHECK(snr_to_n0(0, 1) == doctest::Approx(1.0));
  CHECK(snr_to_n0(20, 1) == doctest::Approx(0.01));
  CHECK(snr_to_n0(std::numeric_limits<double>::infinity(), 1) == 0.0);
  CHECK_THROWS_AS(snr_to_n0(10, 0), Error);
}

TEST_CASE("awgn samples") {
  std::mt19937_64 rng(42);
  CHECK(awgn_sample(rng, 0.0) == cd(0, 0));
  const int n = 1000000;
  double power = 0, cov = 0, re2 = 0;
  for (int i = 0; i < n; ++i) {
    const cd s = awgn_sample(rng, 1.0);
    power += std::norm(s);
    cov += s.real() * s.imag();
    re2 += s.real() * s.real();
  }
  CHECK(std::abs(power / n - 1.0) < 0.01);
  CHECK(std::abs(cov / n) < 0.01);
  CHECK(std::abs(re2 / n - 0.5) < 0.01);
  CHECK_THROWS_AS(awgn_sample(rng, -1.0), Error);
}

TEST_CASE("qam references") {
  const auto q4 = qam_reference(4);
  REQUIRE(q4.size() == 4);
  for (const auto& p : q4) CHECK(std::norm(p) == doctest::Approx(2.0));
  CHECK(average_energy(qam_reference(16)) == doctest::Approx(10.0));
  CHECK_THROWS_AS(qam_reference(32), Error);
  CHECK_THROWS_AS(qam_reference(2), Error);
}

TEST_CASE("8-QAM is a minimal-energy symmetric subset") {
  const auto q16 = qam_reference(16);
  const auto q8 = qam_reference(8);
  REQUIRE(q8.size() == 8);
  // Exhaustive oracle over all 8-subsets of 16-QAM closed under negation.
  double best = INFINITY;
  for (unsigned mask = 0; mask < (1u << 16); ++mask) {
    if (__builtin_popcount(mask) != 8) continue;
    std::vector<cd> s;
    for (unsigned i = 0; i < 16; ++i)
      if (mask & (1u << i)) s.push_back(q16[i]);
    const bool sym = std::all_of(s.begin(), s.end(), [&](cd p) { return std::find(s.begin(), s.end(), -p) != s.end(); });
    if (sym) best = std::min(best, average_energy(s));
  }
  CHECK(average_energy(q8) == doctest::Approx(best));
  for (const auto& p : q8) {
    CHECK(std::find(q8.begin(), q8.end(), -p) != q8.end());
    CHECK(std::find(q16.begin(), q16.end(), p) != q16.end());
  }
  CHECK(std::find(q8.begin(), q8.end(), cd(3, 1)) != q8.end());
  CHECK(std::find(q8.begin(), q8.end(), cd(-3, -1)) != q8.end());
}

TEST_CASE("ml decode") {
  const auto q4 = qam_reference(4);
  CHECK(ml_decode(q4, q4[2]) == 2);
  const auto idx = ml_decode(q4, {0.1, 0.1});
  CHECK(q4[idx] == cd(1, 1));
  const std::vector<cd> two{{1, 0}, {-1, 0}};
  CHECK(ml_decode(two, {0, 0.5}) == 0);
}

TEST_CASE("snr range") {
  const auto g = snr_range(0, 10, 2.5);
  REQUIRE(g.size() == 5);
  CHECK(g.back() == doctest::Approx(10.0));
  CHECK(snr_range(0, 1, 0.1).size() == 11);
  CHECK_THROWS_AS(snr_range(0, 10, 0), Error);
  CHECK_THROWS_AS(snr_range(10, 0, 1), Error);
}

TEST_CASE("qpsk monte carlo matches the closed form") {
  const auto sys = qam_transceiver(qam_reference(4));
  const std::vector<double> grid{4, 8};
  const SweepResult r = run_sweep(sys, grid, 40000, {0.0, ChannelMode::Awgn, 5});
  for (const auto& row : r.rows) {
    const double p = qpsk_ser(std::pow(10.0, row.snr_db / 10.0));
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(row.trials));
    CHECK(std::abs(row.cer - p) < 3 * sigma);
    CHECK(row.cer == doctest::Approx(static_cast<double>(row.errors) / static_cast<double>(row.trials)));
  }
}

TEST_CASE("zero noise and phase rotation") {
  const Codebook book = make_codebook(e2(), 8, true);
  const std::vector<double> inf{std::numeric_limits<double>::infinity()};
  const SweepResult a = run_sweep(book, inf, 5000, {0.0, ChannelMode::Awgn, 1});
  CHECK(a.rows[0].errors == 0);
  const SweepResult b = run_sweep(book, inf, 5000, {0.0, ChannelMode::PhaseRotation, 1});
  CHECK(b.rows[0].errors == 0);
  const SweepRow c = run_point(codebook_transceiver(book), 0.0, 0, 5000, {0.0, ChannelMode::PhaseRotation, 3});
  CHECK(c.errors == 0);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  const Codebook book = make_codebook(e2(), 4, false);
  const std::vector<double> grid{5, 15, 25};
  const ChannelConfig cfg{0.0, ChannelMode::Awgn, 99};
  const auto s1 = sweep_to_csv(run_sweep(book, grid, 10000, cfg, {1, 1000}));
  const auto s2 = sweep_to_csv(run_sweep(book, grid, 10000, cfg, {3, 1000}));
  const auto s3 = sweep_to_csv(run_sweep(book, grid, 10000, cfg, {1, 1000}));
  CHECK(s1 == s2);
  CHECK(s1 == s3);
  const auto other = sweep_to_csv(run_sweep(book, grid, 10000, {0.0, ChannelMode::Awgn, 100}, {1, 1000}));
  CHECK(other != s1);
  CHECK_THROWS_AS(run_sweep(book, grid, 0, cfg), Error);
}

TEST_CASE("sweep csv") {
  SweepResult r;
  r.rows.push_back({10.0, 100, 1, 0.01});
  CHECK(sweep_to_csv(r) == "snr_db,trials,errors,cer\n10,100,1,0.01\n");
}
