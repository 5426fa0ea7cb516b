#include "conductor/cli.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace conductor {
namespace {

struct cli_result {
  int code = 0;
  std::string out;
  std::string err;
};

cli_result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(cli, sgp_info_text) {
  const auto r = run_cli({"sgp", "info", "--gens", "3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "⟨3,5⟩ F=7 g=4 symmetric\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(cli, sgp_info_json_is_byte_stable) {
  const auto r = run_cli({"sgp", "info", "--gens", "3,5", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"gens\":[3,5],\"frobenius\":7,\"genus\":4,\"symmetric\":true}\n");
  const auto again = run_cli({"sgp", "info", "--gens", "3,5", "--format", "json"});
  EXPECT_EQ(again.out, r.out);
}

TEST(cli, sgp_overs_lists_all) {
  const auto r = run_cli({"sgp", "overs", "--gens", "3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "⟨3,5⟩ F=7 g=4 symmetric\n"
            "⟨3,5,7⟩ F=4 g=3\n"
            "⟨3,4,5⟩ F=2 g=2\n"
            "⟨2,3⟩ F=1 g=1 symmetric\n"
            "⟨1⟩ F=-1 g=0 symmetric\n");
}

TEST(cli, sgp_enumerate_counts) {
  const auto r = run_cli({"sgp", "enumerate", "--genus", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
}

TEST(cli, ideal_dual_fixture) {
  const auto r = run_cli({"ideal", "dual", "--gens", "3,5", "--ideal", "3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0,3}∪[5,∞) over ⟨3,5⟩\n");
}

TEST(cli, ideal_with_negative_generator) {
  const auto r = run_cli({"ideal", "hull", "--gens", "3,5", "--ideal=-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

TEST(cli, ideal_stable_and_ulrich_flags) {
  EXPECT_EQ(run_cli({"ideal", "stable", "--gens", "3,5", "--ideal", "3,5"}).out, "not stable\n");
  EXPECT_EQ(run_cli({"ideal", "stable", "--gens", "2,3", "--ideal", "2,3"}).out, "stable\n");
  const auto r = run_cli({"ideal", "ulrich", "--gens", "2,3", "--ideal", "2,3", "--format", "json"});
  EXPECT_EQ(r.out, "{\"ulrich\":true}\n");
}

TEST(cli, ideal_enumerate_counts_classes) {
  const auto r = run_cli({"ideal", "enumerate", "--gens", "3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
}

TEST(cli, ext_conductor_fixture) {
  const auto r = run_cli({"ext", "conductor", "--base", "3,5", "--over", "3,5,7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{3,5,6}∪[8,∞) over ⟨3,5⟩\n");
  const auto json =
      run_cli({"ext", "conductor", "--base", "2,5", "--over", "2,3", "--format", "json"});
  EXPECT_EQ(json.out, "{\"base\":[2,5],\"min\":2,\"window\":[2],\"tail\":4}\n");
}

TEST(cli, ext_verify_reports_conditions) {
  const auto r = run_cli({"ext", "verify", "--base", "3,5", "--over", "3,5,7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cond1m=false cond2=false cond3=false cond4m=false all_agree=true\n");
  const auto good = run_cli({"ext", "verify", "--base", "2,5", "--over", "2,3"});
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(good.out, "cond1m=true cond2=true cond3=true cond4m=true all_agree=true\n");
}

TEST(cli, ext_verify_json) {
  const auto r =
      run_cli({"ext", "verify", "--base", "2,5", "--over", "2,3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"cond1m\":true,\"cond2\":true,\"cond3\":true,\"cond4m\":true,"
            "\"all_agree\":true,\"witnesses\":[]}\n");
}

TEST(cli, ext_bijection_fixture) {
  const auto r = run_cli({"ext", "bijection", "--base", "3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "bijection holds over ⟨3,5⟩\n");
}

TEST(cli, census_run_small) {
  const auto r = run_cli({"census", "run", "--genus", "2", "--threads", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 9), "base,over");
  // 1 + 2 + 3 + 3 rows for the four bases up to genus two, plus a header.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
  const auto jsonl =
      run_cli({"census", "run", "--genus", "2", "--threads", "1", "--format", "jsonl"});
  EXPECT_EQ(std::count(jsonl.out.begin(), jsonl.out.end(), '\n'), 9);
}

TEST(cli, oracle_run_small) {
  const auto r = run_cli({"oracle", "run", "--cases", "200"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("cases="), 0u);
  EXPECT_NE(r.out.find(" failures=0"), std::string::npos);
}

TEST(cli, usage_errors_exit_two) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"sgp"}).code, 2);
  EXPECT_EQ(run_cli({"sgp", "info"}).code, 2);
  EXPECT_EQ(run_cli({"sgp", "info", "--gens"}).code, 2);
  EXPECT_EQ(run_cli({"nonsense"}).code, 2);
  EXPECT_EQ(run_cli({"sgp", "info", "--gens", "3,5", "--format", "yaml"}).code, 2);
  // Valid syntax, invalid mathematics: gcd must be 1.
  const auto r = run_cli({"sgp", "info", "--gens", "4,6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("gcd"), std::string::npos);
  // Base must sit inside the oversemigroup.
  EXPECT_EQ(run_cli({"ext", "conductor", "--base", "2,3", "--over", "3,5"}).code, 2);
}

TEST(cli, help_exits_zero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sgp"), std::string::npos);
  EXPECT_NE(r.out.find("census"), std::string::npos);
}

}  // namespace
}  // namespace conductor
