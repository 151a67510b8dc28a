// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <doctest.h>

#include "support/instances.hpp"
#include "wmnroute/cli.hpp"
#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"

using namespace wmnroute;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

const std::string kCg = WMNROUTE_FIXTURE_DIR "/canonical_cg.json";

std::size_t lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("model specs") {
  CHECK(std::get<ConstantModel>(parse_model("const:2")).value == 2.0);
  const auto u = std::get<UniformModel>(parse_model("uniform:1:10"));
  CHECK(u.lo == 1.0);
  CHECK(u.hi == 10.0);
  CHECK(model_spec(parse_model("uniform:1:10")) == "uniform:1:10");
  CHECK_THROWS_AS(parse_model("normal:1:2"), InvalidParams);
  CHECK_THROWS_AS(parse_model("const:x"), InvalidParams);
}

TEST_CASE("gen") {
  testing::ScratchDir dir("wmnroute-cli-gen");
  const std::string out = (dir.path() / "g.json").string();
  const Run r = cli({"gen", "--n", "50", "--area", "1000", "--radius", "200", "--seed", "7",
                     "--out", out});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "nodes: 50\nlinks: 115\n");
  const GraphFile f = load_graph(out);
  CHECK(f.graph.node_count() == 50);
  REQUIRE(f.generator);
  CHECK(f.generator->seed == 7);

  CHECK(cli({"gen", "--n", "1", "--out", out}).out == "nodes: 1\nlinks: 0\n");
  CHECK(cli({"gen", "--radius", "0", "--out", out}).code == kExitUsage);
  CHECK(cli({"gen", "--rate-model", "bogus", "--out", out}).code == kExitUsage);
  CHECK(cli({"gen", "--n", "abc", "--out", out}).code == kExitUsage);
  CHECK(cli({"gen", "--out", "/nonexistent-dir/g.json"}).code == kExitIo);
}

TEST_CASE("route") {
  const Run mra = cli({"route", "--in", kCg, "--algo", "mra", "--src", "u", "--dst", "y",
                       "--tau", "6", "--tick", "2"});
  CHECK(mra.code == kExitOk);
  CHECK(mra.out == "status: found\npath: u a w y\nrate_mbps: 5\ndelay_ms: 6\n");

  const Run self = cli({"route", "--in", kCg, "--src", "u", "--dst", "u", "--tau", "6"});
  CHECK(self.out == "status: found\npath: u\nrate_mbps: inf\ndelay_ms: 0\n");

  const Run tight = cli({"route", "--in", kCg, "--src", "u", "--dst", "y", "--tau", "4"});
  CHECK(tight.code == kExitInfeasible);
  CHECK(tight.out == "status: infeasible\n");

  const Run json = cli({"route", "--in", kCg, "--algo", "oracle", "--src", "u", "--dst", "y",
                        "--tau", "6", "--json"});
  CHECK(nlohmann::json::parse(json.out)["rate_mbps"] == "5");

  CHECK(cli({"route", "--in", kCg, "--algo", "brute-force", "--src", "u", "--dst", "y", "--tau",
             "6"})
            .code == kExitOk);
  CHECK(cli({"route", "--in", kCg, "--algo", "astar", "--src", "u", "--dst", "y", "--tau", "6"})
            .code == kExitUsage);
  CHECK(cli({"route", "--in", kCg, "--src", "q", "--dst", "y", "--tau", "6"}).code == kExitUsage);
  CHECK(cli({"route", "--in", kCg, "--src", "u", "--dst", "y"}).code == kExitUsage);
  CHECK(cli({"route", "--in", "/nonexistent.json", "--src", "u", "--dst", "y", "--tau", "6"})
            .code == kExitIo);
}

TEST_CASE("compare") {
  testing::ScratchDir dir("wmnroute-cli-compare");
  const std::string csv = (dir.path() / "agree.csv").string();
  const std::string cx = (dir.path() / "cx").string();
  const Run r = cli({"compare", "--trials", "100", "--n", "8", "--tau", "10", "--seed", "1",
                     "--out", csv, "--cx-dir", cx});
  CHECK(r.code == kExitOk);
  const std::string text = read_text_file(csv);
  CHECK(lines(text) == 101);
  CHECK(r.out.find("instances: 100\n") != std::string::npos);
  CHECK(r.out.find("violations: 0\n") != std::string::npos);
  CHECK(cli({"compare", "--trials", "0"}).code == kExitUsage);

  const Run again = cli({"compare", "--trials", "100", "--n", "8", "--tau", "10", "--seed", "1"});
  CHECK(again.out == text);
}

TEST_CASE("bench") {
  const Run r = cli({"bench", "--algos", "fw", "--sizes", "10,20,40,80", "--reps", "5"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == 6);
  CHECK(r.out.rfind("algo,n,L,reps,median_ms,slope\n", 0) == 0);
  CHECK(r.out.find("floyd-warshall,,,,,") != std::string::npos);
  CHECK(cli({"bench", "--reps", "4"}).code == kExitUsage);
  CHECK(cli({"bench", "--algos", "nope"}).code == kExitUsage);
}

TEST_CASE("export") {
  const Run plain = cli({"export", "--in", kCg});
  CHECK(plain.code == kExitOk);
  CHECK(plain.out == cli({"export", "--in", kCg}).out);
  const Run lit = cli({"export", "--in", kCg, "--route", "u,a,w,y"});
  std::size_t hits = 0;
  for (auto p = lit.out.find("penwidth"); p != std::string::npos; p = lit.out.find("penwidth", p + 1)) {
    ++hits;
  }
  CHECK(hits == 3);
  CHECK(cli({"export", "--in", kCg, "--route", "u,w"}).code == kExitUsage);
  CHECK(cli({"export", "--in", "/nonexistent.json"}).code == kExitIo);
}

TEST_CASE("help and usage") {
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
}
