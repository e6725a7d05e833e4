#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "polarfade/io.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(POLARFADE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("polarfade_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("construct writes the documented code description") {
  TempDir tmp;
  const fs::path out = tmp.path / "code.txt";
  REQUIRE(run_cli("construct --n 1 --k 1 --design-snr 1.0 --out " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text == "N=2\nK=1\ndesign_snr=1\neps=0\n2\n");

  // Determinism: the same flags produce identical bytes.
  const fs::path out2 = tmp.path / "code2.txt";
  REQUIRE(run_cli("construct --n 1 --k 1 --design-snr 1.0 --out " + out2.string()) == 0);
  CHECK(slurp(out2) == text);

  // A manifest accompanies the output.
  CHECK(fs::exists(out.string() + ".manifest"));
}

TEST_CASE("construct solves the design SNR from the rate") {
  TempDir tmp;
  const fs::path out = tmp.path / "fig5_code.txt";
  REQUIRE(run_cli("construct --n 10 --rate 0.5 --sigma2 1.0 --out " + out.string()) == 0);
  const polarfade::PolarCode code = polarfade::read_code_file(out.string());
  CHECK(code.block_length() == 1024);
  CHECK(code.dimension() == 512);
  CHECK(code.design_snr() > 0.0);
}

TEST_CASE("conflicting or missing flags exit with code 2") {
  TempDir tmp;
  CHECK(run_cli("construct --n 3 --k 2 --rate 0.5 --out " + (tmp.path / "x.txt").string()) == 2);
  CHECK(run_cli("construct --k 2 --out " + (tmp.path / "x.txt").string()) == 2);
  CHECK(run_cli("capacity") == 2);
  CHECK(run_cli("capacity --power 1 --rate 0.5") == 2);
  CHECK(run_cli("sweep") == 2);
  CHECK(run_cli("bogus") == 2);
}

TEST_CASE("unknown config keys exit with code 2") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "bad.cfg";
  std::ofstream(cfg) << "figure = 3\nfrobnicate = 1\n";
  CHECK(run_cli("sweep --config " + cfg.string()) == 2);
}

TEST_CASE("numeric failures and infeasible problems exit with code 3") {
  CHECK(run_cli("capacity --power 1 --quad-max-subdiv 2") == 3);
  CHECK(run_cli("sweep --figure 6 --fading pointmass:0 --q-grid 1,2") == 3);
}

TEST_CASE("capacity reports the threshold pipeline") {
  TempDir tmp;
  const fs::path out = tmp.path / "report.txt";
  REQUIRE(run_cli("capacity --rate 0.5 --sigma2 1 --q 2 --fading gaussian:1 --out " +
                  out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("rate = 0.5") != std::string::npos);
  CHECK(text.find("delta = ") != std::string::npos);
  CHECK(text.find("epsilon = ") != std::string::npos);
  CHECK(text.find("c_eq = ") != std::string::npos);
  CHECK(fs::exists(out.string() + ".manifest"));
}

TEST_CASE("figure-3 sweep emits the pinned CSV schema") {
  TempDir tmp;
  REQUIRE(run_cli("sweep --figure 3 --q-grid 0.5,1,2 --sigma-h2-grid 1 --out-dir " +
                  tmp.path.string()) == 0);
  const std::string csv = slurp(tmp.path / "eps_vs_q.csv");
  CHECK(csv.rfind("q,sigma_h2,p_design,delta,epsilon\n", 0) == 0);
  // one header + three rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("figure-6 sweep emits the pinned CSV schema") {
  TempDir tmp;
  REQUIRE(run_cli("sweep --figure 6 --q-grid 1,4 --out-dir " + tmp.path.string()) == 0);
  const std::string csv = slurp(tmp.path / "r_star_vs_q.csv");
  CHECK(csv.rfind("q,p_star,r_star,epsilon_star\n", 0) == 0);
}

TEST_CASE("figure-5 campaigns are seed-deterministic, thread-invariant and replayable") {
  TempDir tmp;
  const fs::path dir_a = tmp.path / "a";
  const fs::path dir_b = tmp.path / "b";
  const fs::path dir_c = tmp.path / "c";
  fs::create_directories(dir_a);
  fs::create_directories(dir_b);
  fs::create_directories(dir_c);
  const std::string common = "sweep --figure 5 --seed 7 --trials 64 --batch-size 16 --n 5 "
                             "--q-grid 1,2 ";
  REQUIRE(run_cli(common + "--threads 1 --out-dir " + dir_a.string()) == 0);
  REQUIRE(run_cli(common + "--threads 4 --out-dir " + dir_b.string()) == 0);
  const std::string csv_a = slurp(dir_a / "ber_vs_q.csv");
  CHECK(csv_a.rfind("q,scheme,n,k,trials,bit_errors,ber,ci95\n", 0) == 0);
  CHECK(csv_a == slurp(dir_b / "ber_vs_q.csv"));

  // Replay purely from the manifest.
  REQUIRE(run_cli("sweep --config " + (dir_a / "ber_vs_q.csv.manifest").string() +
                  " --out-dir " + dir_c.string()) == 0);
  CHECK(csv_a == slurp(dir_c / "ber_vs_q.csv"));
}

TEST_CASE("the POLARFADE_SEED environment variable seeds campaigns") {
  TempDir tmp;
  const fs::path dir_a = tmp.path / "a";
  const fs::path dir_b = tmp.path / "b";
  fs::create_directories(dir_a);
  fs::create_directories(dir_b);
  const std::string common = "sweep --figure 5 --trials 32 --batch-size 16 --n 4 --q-grid 1 ";
  const std::string env = "POLARFADE_SEED=99 " + std::string(POLARFADE_CLI_PATH) + " ";
  REQUIRE(std::system((env + common + "--out-dir " + dir_a.string() + " >/dev/null 2>&1").c_str()) == 0);
  REQUIRE(run_cli(common + "--seed 99 --out-dir " + dir_b.string()) == 0);
  CHECK(slurp(dir_a / "ber_vs_q.csv") == slurp(dir_b / "ber_vs_q.csv"));
}
