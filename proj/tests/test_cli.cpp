#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qlab/qformula.hpp"

namespace fs = std::filesystem;

namespace {

// Runs the installed binary and captures stdout; stderr is folded in so
// error paths stay visible in mismatch dumps.
int run_cli(const std::string& args, std::string* out) {
  const std::string cmd = std::string(QLAB_BIN_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) text.append(buf, n);
  const int status = pclose(pipe);
  if (out) *out = text;
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_timestamp(const std::string& json_text) {
  auto j = nlohmann::ordered_json::parse(json_text);
  j.erase("generated_at");
  return j.dump(2);
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("qlab_test_" + std::to_string(getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("derived formulas match the recorded displays") {
  const fs::path golden(QLAB_GOLDEN_SRC);
  for (int N = 1; N <= 4; ++N) {
    std::string out;
    CHECK(run_cli("derive-q " + std::to_string(N) + " --format latex", &out) == 0);
    const std::string recorded = read_file(golden / ("q" + std::to_string(2 * N) + ".txt"));
    CHECK(qlab::equivalent_q_displays(out, recorded));
  }
}

TEST_CASE("derive-q text and json output") {
  std::string out;
  CHECK(run_cli("derive-q 2", &out) == 0);
  CHECK(out == "Q_4 = -P_2(Q_2) + 2^4 2! w_4\n");
  CHECK(run_cli("derive-q 1 --format plain", &out) == 0);
  CHECK(out == "Q_2 = -4 w_2\n");
  CHECK(run_cli("derive-q 3 --format json", &out) == 0);
  CHECK(qlab::parse_qformula_json(out) == qlab::derive_q_formula(3));
}

TEST_CASE("usage errors exit with code 2") {
  std::string out;
  CHECK(run_cli("verify bogus", &out) == 2);
  CHECK(run_cli("derive-q", &out) == 2);
  CHECK(run_cli("derive-q 0", &out) == 2);
  CHECK(run_cli("derive-q 2 --format yaml", &out) == 2);
  CHECK(run_cli("frobnicate", &out) == 2);
  CHECK(run_cli("", &out) == 2);
  CHECK(run_cli("verify all --dims 1..2", &out) == 2);
  CHECK(run_cli("series sqrt --coeffs 2,1", &out) == 2);
  CHECK(run_cli("sphere 3 --dim 4", &out) == 2);
}

TEST_CASE("help and version exit cleanly") {
  std::string out;
  CHECK(run_cli("--help", &out) == 0);
  CHECK(out.find("verify") != std::string::npos);
  CHECK(run_cli("--version", &out) == 0);
  CHECK(out == "1.0.0\n");
}

TEST_CASE("factorization check lines") {
  std::string out;
  CHECK(run_cli("pi 3 --check", &out) == 0);
  CHECK(out == "j=1: pass\nj=2: pass\nj=3: pass\n");
  CHECK(run_cli("pi 1 --check", &out) == 0);
  CHECK(out == "j=1: pass\n");
}

TEST_CASE("pi rendering") {
  std::string out;
  CHECK(run_cli("pi 1", &out) == 0);
  CHECK(out == "pi_2 = P_2\n");
  CHECK(run_cli("pi 2", &out) == 0);
  CHECK(out.rfind("pi_4 = ", 0) == 0);
  CHECK(out.find("P_2^2") != std::string::npos);
}

TEST_CASE("multiplicity table") {
  std::string out;
  CHECK(run_cli("multiplicities 3", &out) == 0);
  CHECK(out ==
        "composition,multiplicity\n"
        "1+1+1,3\n"
        "1+2,-2\n"
        "2+1,-2\n"
        "3,1\n"
        "sum,0\n");
  CHECK(run_cli("multiplicities 4 --format json", &out) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["object"] == "multiplicities");
  CHECK(j["rows"].size() == 8);
  CHECK(j["sum"] == "0");
}

TEST_CASE("sphere values") {
  std::string out;
  CHECK(run_cli("sphere 2 --dim 7", &out) == 0);
  CHECK(out.find("q_4 = 315/8") != std::string::npos);
  CHECK(out.find("w_4 = 35/128") != std::string::npos);
  CHECK(out.find("lambda_4 = 35/4") != std::string::npos);
  CHECK(run_cli("sphere 2 --dim 7/2 --format json", &out) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["n"] == "7/2");
}

TEST_CASE("series commands compose") {
  std::string out;
  CHECK(run_cli("series square --coeffs 1,-1/4", &out) == 0);
  CHECK(out == "1,-1/2\n");
  CHECK(run_cli("series square --coeffs 1,-1/4 --order 2", &out) == 0);
  CHECK(out == "1,-1/2,1/16\n");
  CHECK(run_cli("series sqrt --coeffs 1,-1/2,1/16", &out) == 0);
  CHECK(out == "1,-1/4,0\n");
  CHECK(run_cli("series sqrt --coeffs 1,2 --order 3 --format json", &out) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["coeffs"].size() == 4);
  CHECK(j["coeffs"][1] == "1");
}

TEST_CASE("verification run with valid goldens passes") {
  setenv("QLAB_GOLDEN_DIR", QLAB_GOLDEN_SRC, 1);
  std::string out;
  CHECK(run_cli("verify q --nmax 3 --dims 3..5", &out) == 0);
  CHECK(out.rfind("suite q: ", 0) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  unsetenv("QLAB_GOLDEN_DIR");
}

TEST_CASE("a corrupted golden turns into exit code 1") {
  TempDir tmp;
  const fs::path src(QLAB_GOLDEN_SRC);
  for (const char* f : {"q4.txt", "q6.txt", "q8.txt"}) fs::copy_file(src / f, tmp.path / f);
  std::ofstream(tmp.path / "q2.txt") << "Q_2 = -5 w_2\n";

  setenv("QLAB_GOLDEN_DIR", tmp.path.c_str(), 1);
  std::string out;
  CHECK(run_cli("verify q --nmax 2 --dims 3..4", &out) == 1);
  CHECK(out.find("FAIL q.derive.N1") != std::string::npos);
  CHECK(out.find("coefficients differ") != std::string::npos);
  unsetenv("QLAB_GOLDEN_DIR");
}

TEST_CASE("reports are byte-identical modulo the timestamp") {
  TempDir tmp;
  setenv("QLAB_GOLDEN_DIR", QLAB_GOLDEN_SRC, 1);
  const std::string r1 = (tmp.path / "r1.json").string();
  const std::string r2 = (tmp.path / "r2.json").string();
  std::string out;
  CHECK(run_cli("verify all --nmax 3 --dims 3..6 --jobs 1 --output " + r1, &out) == 0);
  CHECK(run_cli("verify all --nmax 3 --dims 3..6 --jobs 4 --output " + r2, &out) == 0);
  CHECK(strip_timestamp(read_file(r1)) == strip_timestamp(read_file(r2)));
  unsetenv("QLAB_GOLDEN_DIR");
}

TEST_CASE("json report on stdout mirrors the file") {
  TempDir tmp;
  setenv("QLAB_GOLDEN_DIR", QLAB_GOLDEN_SRC, 1);
  const std::string path = (tmp.path / "r.json").string();
  std::string out;
  CHECK(run_cli("verify series --nmax 2 --format json --output " + path, &out) == 0);
  CHECK(out == read_file(path));
  const auto j = nlohmann::json::parse(out);
  CHECK(j["suite"] == "series");
  CHECK(j["summary"]["failed"] == 0);
  unsetenv("QLAB_GOLDEN_DIR");
}

TEST_CASE("skip records surface in the human summary") {
  std::string out;
  CHECK(run_cli("verify sphere --nmax 3 --dims 4", &out) == 0);
  CHECK(out.find("SKIP") != std::string::npos);
  CHECK(out.find("even-dimension truncation") != std::string::npos);
}
