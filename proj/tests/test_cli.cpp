#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "lieindex/json_io.hpp"

using lieindex::Json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

std::string scratch(const std::string& name) { return ::testing::TempDir() + "lieindex_cli_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// Runs the tool through the shell; `env` is prepended verbatim.
CliRun run_cli(const std::string& args, const std::string& env = "") {
  const std::string err_path = scratch("stderr.txt");
  const std::string cmd = env + " '" LIEINDEX_CLI "' " + args + " 2>'" + err_path + "'";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  return r;
}

Json ok_json(const std::string& args, const std::string& env = "") {
  const CliRun r = run_cli(args, env);
  EXPECT_EQ(r.status, 0) << args << "\n" << r.err;
  return lieindex::parse_json_text(r.out);
}

std::string construct_to_file(const std::string& name, const std::string& args) {
  const std::string path = scratch(name + ".json");
  const CliRun r = run_cli("construct " + args + " -o '" + path + "'");
  EXPECT_EQ(r.status, 0) << args << "\n" << r.err;
  EXPECT_TRUE(r.out.empty());
  return path;
}

}  // namespace

TEST(Cli, ConstructDimensions) {
  EXPECT_EQ(ok_json("construct free --generators 3 --class 3").at("dim"), 14);
  EXPECT_EQ(ok_json("construct free --generators 3 --class 3 --triple-basis").at("dim"), 14);
  EXPECT_EQ(ok_json("construct metabelian --generators 2 --class 5").at("dim"), 12);
  EXPECT_EQ(ok_json("construct filiform --family G --dim 7 --k 5").at("dim"), 7);
  EXPECT_EQ(ok_json("construct filiform --family random --dim 9 --seed 2").at("dim"), 9);
  EXPECT_EQ(ok_json("construct graph --complete 4").at("dim"), 10);
  EXPECT_EQ(ok_json("construct graph --cycle 5").at("dim"), 10);
  EXPECT_EQ(ok_json("construct graph --random 6 --seed 3").at("brackets").size(),
            ok_json("construct graph --random 6 --seed 3").at("dim").get<int>() - 6);
}

TEST(Cli, IndexOfFreeAlgebras) {
  const Json f34 = ok_json("index '" + construct_to_file("f34", "free --generators 3 --class 4") + "'");
  EXPECT_EQ(f34.at("dim"), 32);
  EXPECT_EQ(f34.at("index"), 24);
  EXPECT_EQ(f34.at("generic_rank"), 8);
  EXPECT_EQ(f34.at("method").at("kind"), "randomized");
  EXPECT_TRUE(f34.at("witness").is_null());

  const Json f35 = ok_json("index '" + construct_to_file("f35", "free --generators 3 --class 5") + "'");
  EXPECT_EQ(f35.at("dim"), 80);
  EXPECT_EQ(f35.at("index"), 68);

  const Json certified =
      ok_json("index --certify --witness '" + construct_to_file("g95", "filiform --family G --dim 9 --k 5") + "'");
  EXPECT_EQ(certified.at("index"), 5);
  EXPECT_EQ(certified.at("method").at("kind"), "certified");
  EXPECT_EQ(certified.at("witness").size(), 9u);
}

TEST(Cli, IndexFromStdin) {
  const Json j = ok_json("index - < '" + construct_to_file("ab", "graph --path 1") + "'");
  EXPECT_EQ(j.at("dim"), 1);
  EXPECT_EQ(j.at("index"), 1);
  const std::string abelian = scratch("abelian4.json");
  write_file(abelian, R"({"dim":4,"brackets":[]})");
  EXPECT_EQ(ok_json("index '" + abelian + "'").at("index"), 4);
}

TEST(Cli, InvariantsStabilizerGraphIndex) {
  const std::string l6 = construct_to_file("l6", "filiform --family L --dim 6");
  const Json inv = ok_json("invariants '" + l6 + "'");
  EXPECT_EQ(inv.at("lower_central_series"), Json({6, 4, 3, 2, 1, 0}));
  EXPECT_EQ(inv.at("nilpotency_class"), 5);
  EXPECT_EQ(inv.at("center_dim"), 1);

  const std::string q8 = construct_to_file("q8", "filiform --family Q --dim 8");
  const std::string ell = scratch("ell8.json");
  write_file(ell, R"({"coords":[0,0,0,0,0,0,0,1]})");
  const Json st = ok_json("stabilizer '" + q8 + "' --ell '" + ell + "'");
  EXPECT_EQ(st.at("dim"), 2);
  EXPECT_EQ(st.at("codim"), 6);
  EXPECT_EQ(st.at("basis").size(), 2u);

  const std::string petersen = scratch("petersen.json");
  write_file(petersen, R"({"vertices":10,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4],[0,5],[1,6],[2,7],[3,8],[4,9],)"
                       R"([5,7],[7,9],[6,9],[6,8],[5,8]]})");
  const Json gi = ok_json("graph-index '" + petersen + "'");
  EXPECT_EQ(gi.at("matching_number"), 5);
  EXPECT_EQ(gi.at("index"), 15);
  EXPECT_EQ(gi.at("via_rank"), 15);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
  EXPECT_EQ(run_cli("index /nonexistent.json").status, 2);
  const std::string garbage = scratch("garbage.json");
  write_file(garbage, "{not json");
  const CliRun bad = run_cli("index '" + garbage + "'");
  EXPECT_EQ(bad.status, 2);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_EQ(run_cli("construct filiform --family Q --dim 5").status, 2);
  EXPECT_EQ(run_cli("construct free --generators 1 --class 3").status, 2);
  EXPECT_EQ(run_cli("index --trials 0 '" + garbage + "'").status, 2);

  const CliRun big = run_cli("construct free --generators 3 --class 4 --ceiling 20");
  EXPECT_EQ(big.status, 3);
  EXPECT_TRUE(big.out.empty());

  const std::string broken = scratch("broken.json");
  write_file(broken, R"({"dim":3,"brackets":[{"i":0,"j":1,"c":{"2":"1"}},{"i":0,"j":2,"c":{"0":"1"}}]})");
  EXPECT_EQ(run_cli("index '" + broken + "'").status, 4);
  EXPECT_EQ(run_cli("invariants '" + broken + "'").status, 4);

  const std::string f35 = construct_to_file("f35_gate", "free --generators 3 --class 5");
  const CliRun gated = run_cli("index --certify '" + f35 + "'");
  EXPECT_EQ(gated.status, 5);
  EXPECT_TRUE(gated.out.empty());
  const std::string f34 = construct_to_file("f34_gate", "free --generators 3 --class 4");
  EXPECT_EQ(run_cli("index --certify --certify-gate 31 '" + f34 + "'").status, 5);
  const Json certified = ok_json("index --certify '" + f34 + "'");
  EXPECT_EQ(certified.at("index"), 24);
  EXPECT_EQ(certified.at("method").at("kind"), "certified");

  EXPECT_EQ(run_cli("verify-paper --section 9").status, 2);
  EXPECT_EQ(run_cli("--version").status, 0);
}

TEST(Cli, DeterministicAndPretty) {
  const std::string f = construct_to_file("f44", "free --generators 4 --class 3");
  const CliRun a = run_cli("index --witness '" + f + "'");
  const CliRun b = run_cli("index --witness '" + f + "'");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli("construct free --generators 3 --class 4").out,
            run_cli("construct free --generators 3 --class 4").out);

  const CliRun compact = run_cli("index '" + f + "'");
  const CliRun pretty = run_cli("--pretty index '" + f + "'");
  EXPECT_EQ(std::count(compact.out.begin(), compact.out.end(), '\n'), 1);
  EXPECT_GT(std::count(pretty.out.begin(), pretty.out.end(), '\n'), 3);
  EXPECT_EQ(lieindex::parse_json_text(compact.out), lieindex::parse_json_text(pretty.out));
  EXPECT_EQ(run_cli("construct graph --complete 3 --pretty").out, run_cli("--pretty construct graph --complete 3").out);
}

TEST(Cli, PrimeFromEnvironment) {
  const std::string f = construct_to_file("f33", "free --generators 3 --class 3");
  const Json j = ok_json("index '" + f + "'", "LIEINDEX_PRIME=4611686018427388039");
  EXPECT_EQ(j.at("method").at("prime"), "4611686018427388039");
  EXPECT_EQ(j.at("index"), ok_json("index '" + f + "'").at("index"));
  EXPECT_EQ(run_cli("index '" + f + "'", "LIEINDEX_PRIME=15").status, 2);
}

TEST(Cli, VerifySection) {
  const CliRun r = run_cli("verify-paper --section 3");
  EXPECT_EQ(r.status, 0) << r.err;
  const Json j = lieindex::parse_json_text(r.out);
  EXPECT_EQ(j.at("failed"), 0);
  EXPECT_GT(j.at("passed").get<int>(), 0);
  for (const auto& c : j.at("cases")) EXPECT_EQ(c.at("section"), "3");

  const CliRun table = run_cli("verify-paper --section 2 --table");
  EXPECT_EQ(table.status, 0);
  EXPECT_NE(table.out.find("prop2.5"), std::string::npos);
}
