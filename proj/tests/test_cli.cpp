#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

int run(const std::string& args) {
  const std::string cmd = shell_quote(g_binary) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("no arguments fails") { CHECK(run("") != 0); }

TEST_CASE("unknown subcommand fails") { CHECK(run("frobnicate") != 0); }

TEST_CASE("encode writes the polynomial and layout") {
  TempDir dir("latfold_cli_encode");
  const std::string out = shell_quote(dir.path.string());
  CHECK(run("encode --seq HPPHP --model hp --encoding turn-ancilla --out-dir " + out) == 0);
  CHECK(std::filesystem::exists(dir.path / "poly.json"));
  CHECK(std::filesystem::exists(dir.path / "layout.json"));
  const std::string poly = slurp(dir.path / "poly.json");
  CHECK(poly.find("\"nvars\": 10") != std::string::npos);
}

TEST_CASE("encode is deterministic") {
  TempDir a("latfold_cli_det_a"), b("latfold_cli_det_b");
  for (const auto* dir : {&a, &b})
    CHECK(run("encode --seq PSVKMA --model mj --encoding turn-ancilla --lambda-overlap 10 "
              "--out-dir " + shell_quote(dir->path.string())) == 0);
  CHECK(slurp(a.path / "poly.json") == slurp(b.path / "poly.json"));
  CHECK(slurp(a.path / "layout.json") == slurp(b.path / "layout.json"));
}

TEST_CASE("reduce emits a 2-local qubo") {
  TempDir dir("latfold_cli_reduce");
  const std::string out = shell_quote(dir.path.string());
  CHECK(run("reduce --seq HPPHP --model hp --encoding turn-ancilla --out-dir " + out) == 0);
  const std::string qubo = slurp(dir.path / "qubo.txt");
  CHECK(qubo.rfind("qubo ", 0) == 0);
  CHECK(std::filesystem::exists(dir.path / "qubo_matrix.txt"));
}

TEST_CASE("export produces every requested format") {
  TempDir dir("latfold_cli_export");
  const std::string out = shell_quote(dir.path.string());
  CHECK(run("export --seq HPPH --model hp --encoding turn-ancilla --to wcnf --out-dir " + out) == 0);
  const std::string wcnf = slurp(dir.path / "problem.wcnf");
  CHECK(wcnf.find("p wcnf") != std::string::npos);
  CHECK(run("export --seq HPPH --model hp --encoding turn-ancilla --to lp --out-dir " + out) == 0);
  CHECK(slurp(dir.path / "problem.lp").find("Minimize") != std::string::npos);
  CHECK(run("export --seq HPPH --model hp --encoding turn-ancilla --to ising --out-dir " + out) == 0);
  CHECK(slurp(dir.path / "ising.txt").rfind("ising ", 0) == 0);
}

TEST_CASE("solve reports the ground state") {
  TempDir dir("latfold_cli_solve");
  const std::string out = shell_quote(dir.path.string());
  CHECK(run("solve --seq HPPHP --model hp --encoding turn-ancilla --solve exhaustive "
            "--out-dir " + out) == 0);
  const std::string solution = slurp(dir.path / "solution.json");
  CHECK(solution.find("-1") != std::string::npos);
  CHECK(solution.find("fold") != std::string::npos);
}

TEST_CASE("verify exits zero on a sound encoding") {
  CHECK(run("verify --seq HPPH --model hp --encoding diamond") == 0);
  CHECK(run("verify --seq HPPHP --model hp --encoding turn-circuit") == 0);
}

TEST_CASE("bad sequences are rejected") {
  CHECK(run("encode --seq H --model hp --encoding turn-ancilla") != 0);
  CHECK(run("encode --seq HPXH --model hp --encoding turn-ancilla") != 0);
}

int main(int argc, char** argv) {
  if (argc < 2) return 1;
  g_binary = argv[1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv + 1);
  return context.run();
}
