#include <gtest/gtest.h>

#include "jackbetti/errors.hpp"
#include "jackbetti_cli/commands.hpp"

using namespace jb;
using jb::cli::json;
using jb::cli::run;

namespace {

cli::CommandResult run_json(std::vector<std::string> args) {
  args.push_back("--json");
  return run(args);
}

}  // namespace

TEST(Cli, JackSymExample) {
  auto r = run({"jack", "sym", "--n", "4", "--lambda", "7,0,0,0", "--c", "3/2"});
  EXPECT_EQ(r.exit_code, cli::kExitPass);
  EXPECT_NE(r.text.find("well-defined"), std::string::npos);
  auto j = run_json({"jack", "sym", "--n", "4", "--lambda", "7,0,0,0", "--c", "3/2"}).to_json();
  EXPECT_EQ(j["command"], "jack sym");
  EXPECT_EQ(j["result"]["well_defined"], true);
  auto p = cli::qpoly_from_json(j["result"]["poly"]);
  EXPECT_EQ(p, jack::sym_jack(combinat::Partition{7}, 4, exactnum::Rational(3, 2)));
  for (const char* key : {"command", "params", "result", "checks", "version"}) EXPECT_TRUE(j.contains(key));
}

TEST(Cli, VerifyT11Example) {
  auto r = run_json({"verify", "t11", "--n", "4", "--k", "1", "--r", "4", "--s", "2", "--d", "1", "--lambda", "7,0,0,0"});
  EXPECT_EQ(r.exit_code, cli::kExitPass);
  auto j = r.to_json();
  EXPECT_EQ(j["checks"].back()["observed"], "4");
  auto rep = cli::report_from_json(j["result"]);
  EXPECT_EQ(rep.claim, "T1.1");
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(cli::to_json(rep), j["result"]);
}

TEST(Cli, BettiOracleGridByteExact) {
  auto r = run({"betti", "oracle", "--n", "7", "--m", "5", "--char", "2"});
  EXPECT_EQ(r.exit_code, cli::kExitPass);
  EXPECT_EQ(r.output(),
            "       0  1  2  3 4 5\n"
            "total: 1 14 21 14 7 1\n"
            "    0: 1  .  .  . . .\n"
            "    1: .  .  .  . . .\n"
            "    2: . 14 21  . . .\n"
            "    3: .  .  . 14 6 1\n"
            "    4: .  .  .  . 1 .\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"jack", "nonsym", "--n", "2", "--mu", "1,0", "--c", "1"}).exit_code, cli::kExitNotWellDefined);
  EXPECT_EQ(run({"jack", "nonsym", "--n", "2", "--mu", "1,0"}).exit_code, cli::kExitInvalid);
  EXPECT_EQ(run({"jack", "nonsym", "--n", "2", "--mu", "1,0", "--c", "1/0"}).exit_code, cli::kExitInvalid);
  EXPECT_EQ(run({"betti", "oracle", "--n", "7", "--m", "5", "--char", "4"}).exit_code, cli::kExitInvalid);
  EXPECT_EQ(run({"frobnicate"}).exit_code, cli::kExitInvalid);
  EXPECT_EQ(run({"admissible", "--regime", "t11", "--lambda", "6", "--n", "4", "--k", "1", "--r", "4", "--s", "2"})
                .exit_code,
            cli::kExitFail);
  EXPECT_EQ(run({"verify", "t34", "--mu", "0,0,0,6", "--ell", "1", "--m", "2", "--s", "1", "--n", "4"}).exit_code,
            cli::kExitInvalid);
  EXPECT_EQ(run({"--help"}).exit_code, cli::kExitPass);
  EXPECT_EQ(run({"betti", "oracle", "--n", "6", "--m", "3"}).exit_code, cli::kExitFail);
}

TEST(Cli, PoleReportedInJson) {
  auto j = run_json({"jack", "nonsym", "--n", "2", "--mu", "1,0", "--c", "1"}).to_json();
  EXPECT_EQ(j["result"]["well_defined"], false);
}

TEST(Cli, DeterministicBytes) {
  const std::vector<std::string> args{"verify", "c12", "--n", "4", "--s", "2", "--m", "2", "--degree-bound", "4", "--json"};
  EXPECT_EQ(run(args).output(), run(args).output());
  const std::vector<std::string> b{"betti", "conjecture", "--n", "11", "--m", "5", "--json"};
  EXPECT_EQ(run(b).output(), run(b).output());
}

TEST(Cli, PayloadsRoundTrip) {
  auto bt = run_json({"betti", "conjecture", "--n", "7", "--m", "5"}).to_json();
  auto t = cli::betti_from_json(bt["result"]["table"]);
  EXPECT_TRUE(betti::same_numbers(t, betti::quotient_table(betti::conjectural_resolution(7, 5))));
  EXPECT_TRUE(betti::same_labels(t, betti::quotient_table(betti::conjectural_resolution(7, 5))));
  EXPECT_EQ(cli::to_json(t), bt["result"]["table"]);

  auto hj = run_json({"hilbert", "--n", "7", "--m", "5", "--range", "0..8"}).to_json();
  auto h = cli::hilbert_from_json(hj["result"]);
  EXPECT_EQ(h.numerator, (std::vector<exactnum::Integer>{1, 4, 10, 6}));
  EXPECT_EQ(cli::to_json(h), hj["result"]);

  auto gj = run_json({"jack", "nonsym", "--n", "2", "--mu", "1,0", "--generic"}).to_json();
  auto g = cli::cpoly_from_json(gj["result"]["poly"]);
  EXPECT_EQ(g, jack::nonsym_jack_generic({1, 0}).poly);

  auto pj = run_json({"pm", "--lambda", "4,4,3", "--m", "5", "--n", "11", "--c", "1/5"}).to_json();
  auto e = cli::pm_entry_from_json(pj["result"]["entries"][9]);
  EXPECT_EQ(e.hd, 6);
  EXPECT_EQ(e.c, exactnum::Rational(22));
  EXPECT_EQ(cli::to_json(e), pj["result"]["entries"][9]);

  auto aj = run_json({"admissible", "--regime", "t36", "--lambda", "8,8,4,4,4,4", "--n", "10", "--ell", "3", "--m", "5",
                      "--s", "1"})
                .to_json();
  auto a = cli::admissibility_from_json(aj["result"]);
  EXPECT_TRUE(a.admissible);
  EXPECT_EQ(cli::to_json(a), aj["result"]);

  auto sj = run_json({"symfunc", "lemma54", "--n", "4", "--i", "2", "--lambda", "3,1"}).to_json();
  auto lhs = cli::symfunc_from_json(sj["result"]["cases"][0]["lhs"]);
  EXPECT_EQ(lhs, symfunc::lemma54_sides(combinat::Partition{3, 1}, 2).lhs);
}

TEST(Cli, MinimalLambdaFlagsClosedFormula) {
  auto j = run_json({"minimal-lambda", "--regime", "t36", "--ell", "3", "--m", "5", "--s", "1", "--n", "10"}).to_json();
  EXPECT_EQ(j["result"]["minimal"], json({8, 8, 4, 4, 4, 4, 0, 0, 0, 0}));
  EXPECT_EQ(j["result"]["closed_formula_agrees"], false);
}

TEST(Cli, ExponentNotation) {
  auto a = run_json({"abacus", "--lambda", "4^2,3", "--m", "5"}).to_json();
  EXPECT_EQ(a["result"]["lambda"], json({4, 4, 3}));
  EXPECT_EQ(a["result"]["hd"], 0);
}
