#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "circ/config_io.hpp"
#include "circ/metric.hpp"
#include "circ/synthesis.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CIRC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve") {
  Run r = run("solve 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("a* = 1.843542") != std::string::npos);
  CHECK(r.out.find("d* = 0.25085") != std::string::npos);
  r = run("solve 8");
  CHECK(r.code == 0);
  CHECK(r.out.find("d* = 0.58222452") != std::string::npos);
  CHECK(run("solve x").code != 0);
  CHECK(run("solve 1").code != 0);
}

TEST_CASE("verify exits 0 with every line passing") {
  Run r = run("verify");
  CHECK(r.code == 0);
  CHECK(r.out.find("74/74 pass") != std::string::npos);
  r = run("verify --extended");
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  r = run("verify --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("make, diam, dist, cover") {
  const std::string file = tmp("circ_cli_six.json");
  CHECK(run("make 6 -o " + file).code == 0);
  Run r = run("diam " + file + " --step 0.01");
  CHECK(r.code == 0);
  CHECK(r.out.find("lo = 2.570796327") != std::string::npos);
  CHECK(r.out.find("legs = ") != std::string::npos);

  r = run("dist " + file + " 0 pi");
  CHECK(r.code == 0);
  CHECK(r.out.find("distance = 2\n") != std::string::npos);
  CHECK(r.out.find("shortcut #0") != std::string::npos);

  CHECK(run("cover " + file + " 0.57079632").code == 0);
  CHECK(run("cover " + file + " 0.6").code == 1);
  std::remove(file.c_str());
}

TEST_CASE("file round trip reproduces the in-memory diameter bit for bit") {
  const std::string file = tmp("circ_cli_u3.json");
  REQUIRE(run("make 3 -o " + file).code == 0);
  const circ::DiameterOptions opt{0.01, true};
  const circ::DiameterBound mem = circ::diameter_bounds(circ::uniform_config(3), opt);
  const circ::DiameterBound disk = circ::diameter_bounds(circ::load_config(file), opt);
  CHECK(mem.lo == disk.lo);
  CHECK(mem.hi == disk.hi);
  CHECK(mem.p == disk.p);
  CHECK(mem.q == disk.q);
  std::remove(file.c_str());
}

TEST_CASE("render") {
  const std::string file = tmp("circ_cli_u2.json"), svg = tmp("circ_cli_u2.svg");
  REQUIRE(run("make 2 -o " + file).code == 0);
  CHECK(run("render strip " + file + " -o " + svg).code == 0);
  const std::string text = slurp(svg);
  std::size_t regions = 0;
  for (std::size_t p = text.find("class=\"region\""); p != std::string::npos; p = text.find("class=\"region\"", p + 1))
    ++regions;
  CHECK(regions == 4);
  CHECK(text.find("class=\"gap\"") == std::string::npos);

  Run r = run("render circle " + file);
  CHECK(r.code == 0);
  CHECK(r.out.find("class=\"shortcut\"") != std::string::npos);
  std::remove(file.c_str());
  std::remove(svg.c_str());
}

TEST_CASE("make asym") {
  const Run r = run("make asym 4");
  CHECK(r.code == 0);
  CHECK(circ::config_from_json(r.out).size() == circ::asymptotic_config(4).total());
  CHECK(run("make asym").code != 0);
  CHECK(run("make 7").code != 0);
}

TEST_CASE("errors") {
  CHECK(run("").code != 0);
  CHECK(run("frobnicate").code != 0);
  CHECK(run("diam /nonexistent/file.json").code == 2);
  const std::string bad = tmp("circ_cli_bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(run("diam " + bad).code == 2);
  CHECK(run("dist " + bad + " 0 1").code == 2);
  std::remove(bad.c_str());
  const std::string plain = tmp("circ_cli_plain.json");
  std::ofstream(plain) << R"({"version": 1, "shortcuts": [{"u": 0, "v": 2}]})";
  CHECK(run("render strip " + plain).code == 2);
  CHECK(run("render strip " + plain + " --dstar 0.2").code == 0);
  CHECK(run("render square " + plain).code != 0);
  std::remove(plain.c_str());
}
