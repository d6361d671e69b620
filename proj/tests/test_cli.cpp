#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fuchsian/codec.hpp"
#include "fuchsian/commands.hpp"

using namespace fuchsian;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> column(const std::string& csv, std::size_t col) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (std::size_t i = 0; i <= col; ++i) std::getline(cells, cell, ',');
    out.push_back(cell);
  }
  return out;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run_command(cfg, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen-constellation writes a normic CSV") {
  RunConfig cfg;
  cfg.command = Command::GenConstellation;
  cfg.preset = "gamma61";
  cfg.size = 4;
  cfg.out = "cli_gamma61_4.csv";
  const Run r = run(cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("|C| = 4") != std::string::npos);
  const std::string csv = slurp(cfg.out);
  const auto xs = column(csv, 3), ys = column(csv, 4), zs = column(csv, 5), ts = column(csv, 6);
  REQUIRE(xs.size() == 4);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long long x = std::stoll(xs[i]), y = std::stoll(ys[i]), z = std::stoll(zs[i]), t = std::stoll(ts[i]);
    CHECK(x * x - 3 * y * y + z * z - 3 * t * t == 1);
  }
  const auto preset = std::make_shared<const GroupPreset>(preset_gamma61());
  CHECK(export_codebook_csv(import_codebook_csv(csv, preset)) == csv);
  std::remove(cfg.out.c_str());
}

TEST_CASE("gen-constellation reports the rate") {
  RunConfig cfg;
  cfg.command = Command::GenConstellation;
  cfg.preset = "e2d1D6ii";
  cfg.size = 8;
  cfg.out = "cli_e2_8.csv";
  const Run r = run(cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("R = 3 bpcu") != std::string::npos);
  std::remove(cfg.out.c_str());
}

TEST_CASE("usage errors exit 2") {
  RunConfig cfg;
  cfg.command = Command::GenConstellation;
  cfg.preset = "no_such_group";
  Run r = run(cfg);
  CHECK(r.code == 2);
  CHECK(r.err.find("no_such_group") != std::string::npos);

  cfg.preset = "e2d1D6ii";
  cfg.size = 5;
  CHECK(run(cfg).code == 2);

  cfg.command = Command::OptimizeTau;
  cfg.preset = "gamma61";
  cfg.size = 4;
  CHECK(run(cfg).code == 2);

  cfg.command = Command::Simulate;
  cfg.preset = "e2d1D6ii";
  cfg.snr_step = 0;
  CHECK(run(cfg).code == 2);
}

TEST_CASE("optimize-tau prints the base point") {
  RunConfig cfg;
  cfg.command = Command::OptimizeTau;
  cfg.preset = "e2d1D6ii";
  const Run r = run(cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("tau = ") != std::string::npos);
}

TEST_CASE("simulate is reproducible and writes the QAM baseline") {
  RunConfig cfg;
  cfg.command = Command::Simulate;
  cfg.preset = "e2d1D6ii";
  cfg.size = 4;
  cfg.snr_min = 5;
  cfg.snr_max = 30;
  cfg.snr_step = 12.5;
  cfg.trials = 10000;
  cfg.seed = 7;
  cfg.baseline = "qam";
  cfg.out = "cli_sim_a.csv";
  REQUIRE(run(cfg).code == 0);
  cfg.out = "cli_sim_b.csv";
  cfg.threads = 2;
  REQUIRE(run(cfg).code == 0);
  const std::string a = slurp("cli_sim_a.csv"), b = slurp("cli_sim_b.csv");
  CHECK(a == b);
  const std::string qam = slurp(baseline_path("cli_sim_a.csv"));
  CHECK(column(a, 0) == column(qam, 0));
  const auto cer = column(a, 3);
  REQUIRE(cer.size() == 3);
  CHECK(std::stod(cer.back()) < std::stod(cer.front()));
  for (const char* f : {"cli_sim_a.csv", "cli_sim_b.csv", "cli_sim_a_qam.csv", "cli_sim_b_qam.csv"}) std::remove(f);
}

TEST_CASE("simulate from a codebook file") {
  RunConfig gen;
  gen.command = Command::GenConstellation;
  gen.preset = "e2d1D6ii";
  gen.size = 4;
  gen.duplicate = true;
  gen.out = "cli_book.csv";
  REQUIRE(run(gen).code == 0);
  RunConfig sim;
  sim.command = Command::Simulate;
  sim.preset = "e2d1D6ii";
  sim.codebook = "cli_book.csv";
  sim.snr_min = sim.snr_max = 200;
  sim.trials = 2000;
  sim.out = "cli_book_sweep.csv";
  sim.phase_rotation = true;
  REQUIRE(run(sim).code == 0);
  CHECK(column(slurp(sim.out), 2) == std::vector<std::string>{"0"});
  std::remove("cli_book.csv");
  std::remove(sim.out.c_str());
}

TEST_CASE("selftest") {
  RunConfig cfg;
  cfg.command = Command::Selftest;
  const Run ok = run(cfg);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("φ(1,0,1)=(2,0,3,2)") != std::string::npos);

  {
    std::ofstream f("cli_corrupt.preset");
    f << "name broken\ndomain strip\ngenerator alpha 1 1 1\n";
  }
  cfg.preset = "cli_corrupt.preset";
  cfg.preset_given = true;
  const Run bad = run(cfg);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL preset") != std::string::npos);
  std::remove("cli_corrupt.preset");
}

TEST_CASE("baseline path") {
  CHECK(baseline_path("out.csv") == "out_qam.csv");
  CHECK(baseline_path("out") == "out_qam.csv");
}
