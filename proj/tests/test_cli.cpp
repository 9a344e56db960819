#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(IGG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("classify command") {
  RunResult r = run("classify C12 --classes cograph,cluster");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "cograph true"));
  CHECK(contains(r.out, "cluster false"));
  CHECK(contains(r.out, "witness="));
}

TEST_CASE("graph command formats") {
  RunResult text = run("graph C12");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "vertices 3"));
  CHECK(contains(text.out, "1 -- 2"));

  RunResult dot = run("--format dot graph C12");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out == "graph iggraf {\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n}\n");

  RunResult json = run("--format json graph C6");
  CHECK(json.exit_code == 0);
  CHECK(contains(json.out, "\"edges\":[[0,1]]"));
}

TEST_CASE("lattice command") {
  RunResult r = run("lattice S4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "subgroups 30"));
  RunResult j = run("--format json lattice C6");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"order\":6"));
  CHECK(contains(j.out, "\"generators\""));
}

TEST_CASE("exit codes: parse, cap, domain") {
  CHECK(run("classify Q12").exit_code == 3);
  CHECK(run("classify").exit_code == 3);
  CHECK(run("classify S8").exit_code == 2);
  CHECK(run("suzuki-check 7").exit_code == 1);
  CHECK(contains(run("classify Q12").out, "error[spec]:"));
  CHECK(contains(run("classify S8").out, "error[cap]:"));
  CHECK(contains(run("suzuki-check 7").out, "error[domain]:"));
}

TEST_CASE("large cyclic groups use the divisor route") {
  RunResult r = run("classify C2310 --classes perfect");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "perfect false"));
  RunResult g = run("graph C2310");
  CHECK(g.exit_code == 0);
  CHECK(contains(g.out, "vertices 30"));
}

TEST_CASE("zgraph command") {
  RunResult r = run("zgraph 12 --classes cograph,chordal");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "cograph false"));
  CHECK(contains(r.out, "chordal false"));
  RunResult g = run("zgraph 10");
  CHECK(contains(g.out, "vertices 9"));
  CHECK(run("zgraph 2000").exit_code == 2);
}

TEST_CASE("suzuki and catalan commands") {
  RunResult r = run("suzuki-check 32");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "31 = 31 -> ok"));
  CHECK(contains(r.out, "25 = 5^2 -> ok"));
  CHECK(contains(r.out, "41 = 41 -> ok"));
  CHECK(contains(r.out, "condition true"));
  CHECK(contains(r.out, "q8-flag false"));

  RunResult q8 = run("suzuki-check 8");
  CHECK(contains(q8.out, "q8-flag true"));

  RunResult j = run("--format json suzuki-check 2048");
  CHECK(contains(j.out, "\"value\":2047,\"factorization\":\"23*89\""));

  RunResult c = run("catalan 1000000");
  CHECK(c.exit_code == 0);
  CHECK(c.out == "3^2 - 2^3 = 1\n");
  CHECK(run("catalan 5").out == "none\n");
  int big_limit_exit = run("catalan 2000000").exit_code;
  CHECK(big_limit_exit == 1); // out-of-range limits are domain errors
}

TEST_CASE("verify command reports refuted classification entries") {
  RunResult r = run("--format json verify --max-order 20");
  CHECK(r.exit_code == 1); // firm disagreements exist from order 8 on
  CHECK(contains(r.out, "\"summary\""));
  CHECK(contains(r.out, "\"group\":\"D4\",\"class\":\"cograph\""));
  RunResult small = run("verify --max-order 7");
  CHECK(small.exit_code == 0);
  CHECK(contains(small.out, "firm disagreements: 0"));
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  RunResult a = run("--format json --jobs 1 verify --max-order 30");
  RunResult b = run("--format json --jobs 4 verify --max-order 30");
  RunResult c = run("--format json --jobs 4 verify --max-order 30");
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  RunResult g1 = run("--format dot graph S4");
  RunResult g2 = run("--format dot graph S4");
  CHECK(g1.out == g2.out);
}

TEST_CASE("--out writes the payload to a file") {
  std::string path = "/tmp/iggraf_test_out.dot";
  std::remove(path.c_str());
  RunResult r = run("--format dot --out " + path + " graph C12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content == "graph iggraf {\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n}\n");
  std::remove(path.c_str());
}
