#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using bb::cli::parse_and_dispatch;

namespace {

fs::path tmp(const std::string& name) {
  const fs::path dir(BB_TEST_TMPDIR);
  fs::create_directories(dir);
  return dir / name;
}

fs::path fresh(const std::string& name) {
  const auto p = tmp(name);
  fs::remove(p);
  return p;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> data_rows(const fs::path& p) {
  std::vector<std::string> rows;
  for (auto& l : lines_of(p)) {
    if (l.empty() || l[0] == '#' || l.rfind("target,", 0) == 0 || l.rfind("n,", 0) == 0) continue;
    rows.push_back(l);
  }
  return rows;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("detect") {
  const auto g = tmp("diamond.txt");
  write_file(g, "0 1\n0 2\n1 2\n1 3\n2 3\n");
  auto r = cli({"detect", "--graph", g.string(), "--pattern", "k4m"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(cli({"detect", "--graph", g.string(), "--pattern", "tk:2"}).out == "false\n");
  CHECK(cli({"detect", "--graph", g.string(), "--pattern", "c4"}).out == "true\n");

  const auto path = tmp("path.txt");
  write_file(path, "0 1\n1 2\n2 3\n");
  CHECK(cli({"detect", "--graph", path.string(), "--pattern", "triangle"}).out == "false\n");

  r = cli({"detect", "--graph", tmp("missing.txt").string(), "--pattern", "k4m"});
  CHECK(r.code == 2);
  r = cli({"detect", "--graph", g.string(), "--pattern", "k5"});
  CHECK(r.code == 2);
}

TEST_CASE("run appends one row per trial") {
  const auto out = fresh("trials.csv");
  const std::vector<std::string> args = {"run",     "--target", "k4m", "--n",    "400",
                                         "--t",     "2000",     "--b",   "2560", "--trials",
                                         "200",     "--seed",   "7",     "--out", out.string()};
  auto r = cli(args);
  REQUIRE(r.code == 0);
  CHECK(data_rows(out).size() == 200);
  CHECK(lines_of(out)[0] == "# budget-builder v0.1.0, seed 7");
  r = cli(args);
  REQUIRE(r.code == 0);
  const auto all = lines_of(out);
  CHECK(all.size() == 402);
  CHECK(data_rows(out).size() == 400);
  CHECK(r.out.find("strategy=k4m-short") != std::string::npos);
}

TEST_CASE("a trials row replays as a single trial from its seed") {
  const auto out = fresh("replay.csv");
  REQUIRE(cli({"run", "--target", "tk", "--k", "2", "--n", "300", "--t-exp", "1.25",
               "--b-exp", "1.0", "--trials", "12", "--seed", "40", "--out", out.string()})
              .code == 0);
  const auto rows = data_rows(out);
  REQUIRE(rows.size() == 12);
  for (std::size_t i : {0u, 5u, 11u}) {
    const auto fields = split(rows[i]);
    const auto single = fresh("single.csv");
    REQUIRE(cli({"run", "--target", "tk", "--k", "2", "--n", "300", "--t-exp", "1.25",
                 "--b-exp", "1.0", "--trials", "1", "--seed", fields[6], "--out",
                 single.string()})
                .code == 0);
    const auto again = data_rows(single);
    REQUIRE(again.size() == 1);
    CHECK(again[0] == rows[i]);
  }
}

TEST_CASE("configuration errors exit 2 and name the flag") {
  auto r = cli({"sweep", "--target", "k4m", "--n-list", "100", "--x-min", "1.4", "--x-max",
                "1.3", "--trials", "2", "--out", fresh("bad.csv").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("--x-min") != std::string::npos);

  r = cli({"run", "--n", "100", "--t", "300", "--b", "10", "--bogus", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);

  r = cli({"run", "--n", "100", "--t", "300", "--t-exp", "1.2", "--b", "10"});
  CHECK(r.code == 2);
  r = cli({"run", "--n", "100", "--t", "300"});
  CHECK(r.code == 2);
  r = cli({"run", "--n", "10", "--t", "46", "--b", "1", "--out", fresh("x.csv").string()});
  CHECK(r.code == 2);  // more steps than pairs
  r = cli({"sweep", "--target", "k4m", "--n-list", "100", "--x-min", "0.5", "--trials", "1"});
  CHECK(r.code == 2);
  r = cli({"probe", "--adversary", "random", "--n-list", "100"});
  CHECK(r.code == 2);
  r = cli({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("seed falls back to BB_SEED") {
  const auto out = fresh("env.csv");
  setenv("BB_SEED", "99", 1);
  auto r = cli({"run", "--n", "50", "--t", "100", "--b", "20", "--out", out.string()});
  unsetenv("BB_SEED");
  REQUIRE(r.code == 0);
  CHECK(lines_of(out)[0] == "# budget-builder v0.1.0, seed 99");

  setenv("BB_SEED", "abc", 1);
  r = cli({"run", "--n", "50", "--t", "100", "--b", "20", "--out", fresh("env2.csv").string()});
  unsetenv("BB_SEED");
  CHECK(r.code == 2);
}

TEST_CASE("config file values sit under command-line flags") {
  const auto conf = tmp("run.conf");
  write_file(conf, "# defaults\ntrials = 3\nseed = 5\nn = 60\nt = 200\nb = 30\n");
  const auto out = fresh("conf.csv");
  auto r = cli({"run", "--config", conf.string(), "--trials", "4", "--out", out.string()});
  REQUIRE(r.code == 0);
  CHECK(data_rows(out).size() == 4);
  CHECK(lines_of(out)[0] == "# budget-builder v0.1.0, seed 5");

  write_file(conf, "trials: 3\n");
  CHECK(cli({"run", "--config", conf.string()}).code == 2);
}

TEST_CASE("sweep and probe output does not depend on --jobs") {
  auto sweep = [](const std::string& jobs) {
    const auto out = fresh("sweep" + jobs + ".csv");
    const auto r = cli({"sweep", "--target", "k4m", "--n-list", "100,150", "--x-min", "1.2",
                        "--x-max", "1.4", "--x-step", "0.1", "--y-min", "0.4", "--y-max",
                        "1.2", "--y-step", "0.4", "--trials", "8", "--seed", "3", "--jobs",
                        jobs, "--out", out.string()});
    REQUIRE(r.code == 0);
    return lines_of(out);
  };
  const auto a = sweep("1");
  CHECK(a.size() == 2 + 2 * 3 * 3);
  CHECK(a == sweep("3"));

  auto probe = [](const std::string& jobs) {
    const auto out = fresh("probe" + jobs + ".csv");
    const auto r = cli({"probe", "--adversary", "degree-greedy", "--n-list", "100,200",
                        "--t-exp", "1.3", "--b-exp", "1.1", "--trials", "3", "--seed", "2",
                        "--jobs", jobs, "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("log-log slope") != std::string::npos);
    return lines_of(out);
  };
  const auto p = probe("1");
  CHECK(p.size() == 2 + 6);
  CHECK(p[1] ==
        "n,t,b,adversary,triangles,c4,k3plus,p4,tl1_centers,tl2_centers,tl3_centers,"
        "scale_tri,scale_c4");
  CHECK(p == probe("2"));
}
