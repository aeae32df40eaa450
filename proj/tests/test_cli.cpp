#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(DISSOC_CLI_PATH) + " " + args +
                    " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, out};
}

std::string fresh_cache_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("dissoc-cli-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("enumerate emits one row per product") {
  auto r3 = run_cli("enumerate 3 --no-such-flag");
  CHECK(r3.exit_code != 0);

  auto ok = run_cli("enumerate 3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("x0 x1 x2") != std::string::npos);
  int lines = 0;
  for (char c : ok.output) lines += (c == '\n');
  CHECK(lines == 2);

  auto four = run_cli("enumerate 4 --format csv");
  int rows = 0;
  for (char c : four.output) rows += (c == '\n');
  CHECK(rows == 6);  // header + 5 products

  auto one = run_cli("enumerate 1");
  CHECK(one.output.find("x0") != std::string::npos);
}

TEST_CASE("identity checking drives the exit code") {
  auto holds = run_cli(
      "identity \"((x*y)*z)*z = ((x*y)*(x*z))*(x*z)\" B");
  CHECK(holds.exit_code == 0);
  CHECK(holds.output.find("holds") != std::string::npos);

  auto fails = run_cli(
      "identity \"((x*y)*z)*z = ((x*y)*(x*z))*(x*z)\" CI3_3");
  CHECK(fails.exit_code == 1);
  CHECK(fails.output.find("x=0") != std::string::npos);
  CHECK(fails.output.find("lhs=1") != std::string::npos);

  auto assoc = run_cli("identity \"(x*(y*z)) = ((x*y)*z)\" 2:7");
  CHECK(assoc.exit_code == 0);

  auto usage = run_cli("identity \"x*y*z = x\" B");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("analyze reports the reference values") {
  auto env = "DISSOC_CACHE_DIR=" + fresh_cache_dir();
  auto r = run_cli("analyze E --kmax 6", env);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1 2 5 10 21") != std::string::npos);
  CHECK(r.output.find("first non-dissociative arity: 5") != std::string::npos);

  auto t10 = run_cli("analyze 2:10 --kmax 4", env);
  CHECK(t10.output.find("first non-dissociative arity: 4") != std::string::npos);

  auto semi = run_cli("analyze 2:7 --kmax 6", env);
  CHECK(semi.output.find("class counts (k=2..6): 1 1 1 1 1") !=
        std::string::npos);
}

TEST_CASE("certify exit codes") {
  auto b = run_cli("certify B --T 0,1,2,3 --K 6");
  CHECK(b.exit_code == 0);
  CHECK(b.output.find("verdict:") != std::string::npos);

  auto imp = run_cli("certify 2:13 --T 0,1 --K 8");
  CHECK(imp.exit_code == 0);
  CHECK(imp.output.find("certified-to-8") != std::string::npos);

  auto nand = run_cli("certify 2:14 --K 6");
  CHECK(nand.exit_code == 1);
  CHECK(nand.output.find("failed") != std::string::npos);
}

TEST_CASE("census cache replays byte-identical results") {
  auto env = "DISSOC_CACHE_DIR=" + fresh_cache_dir();
  auto first = run_cli("census 2 --kmax 6", env);
  REQUIRE(first.exit_code == 0);
  auto second = run_cli("census 2 --kmax 6", env);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);

  // 16 rows + header.
  int rows = 0;
  for (char c : first.output) rows += (c == '\n');
  CHECK(rows == 17);
  CHECK(first.output.find("10,0,4") != std::string::npos);
  CHECK(first.output.find("14,0,none") != std::string::npos);
  CHECK(first.output.find("7,1,3") != std::string::npos);

  auto fresh = run_cli("census 2 --kmax 6 --no-cache", env);
  CHECK(fresh.output == first.output);
}

TEST_CASE("table file references") {
  auto dir = std::filesystem::temp_directory_path();
  auto path = dir / "dissoc-test-table.json";
  {
    std::ofstream out(path);
    out << R"({"n": 2, "entries": [1, 1, 0, 1], "name": "imp"})";
  }
  auto r = run_cli("analyze " + path.string() + " --kmax 5 --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("imp") != std::string::npos);
  CHECK(r.output.find("dissociative at every arity") != std::string::npos);

  auto missing = run_cli("analyze /no/such/file.json --kmax 4");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("mnk and represent") {
  auto env = "DISSOC_CACHE_DIR=" + fresh_cache_dir();
  auto m = run_cli("mnk 2 3", env);
  CHECK(m.exit_code == 0);
  CHECK(m.output.find(": 0") != std::string::npos);
  CHECK(m.output.find("10 12") != std::string::npos);

  // The fixed unrepresentable ternary target: ones at 001, 100, 101 =
  // bits 1, 4, 5 -> 0x32.
  auto bad = run_cli("represent 32 --mode propagate");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("unrepresentable") != std::string::npos);

  auto proj = run_cli("represent f0");  // x0 at arity 3
  CHECK(proj.exit_code == 0);
  CHECK(proj.output.find("representable") != std::string::npos);

  auto res_limit = run_cli("mnk 4 3", env);
  CHECK(res_limit.exit_code == 3);
}

TEST_CASE("user-provided split templates load") {
  auto dir = std::filesystem::temp_directory_path();
  auto path = dir / "dissoc-test-templates.txt";
  {
    std::ofstream out(path);
    out << "# extra patterns\n";
    out << "1^{i} 0^{j-i} 2^{k-j}\n";
  }
  auto r = run_cli("certify D --T 0,1 --K 6 --templates " + path.string());
  CHECK(r.exit_code == 0);

  auto bad = run_cli("certify D --T 0,1 --K 6 --templates /no/such/file");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("nand-check passes") {
  auto r = run_cli("nand-check --kmax 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("paper-check subset") {
  auto r = run_cli("paper-check 1 2 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("criterion 01") != std::string::npos);
  CHECK(r.output.find("criterion 02") != std::string::npos);
  CHECK(r.output.find("criterion 04") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}
