#include <cstdlib>
#include <sys/wait.h>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace bruhat_rook;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Hull) {
  auto r = run({"hull", "35124"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "###..\n#####\n#####\n.####\n...##\n");
  EXPECT_EQ(run({"hull", "1"}).out, "#\n");
  EXPECT_EQ(run({"hull", "21", "--side", "left"}).out, ".#\n#.\n");
  EXPECT_EQ(run({"hull", "12", "--side", "left"}).out, "##\n##\n");
  r = run({"hull", "1 1 2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"hull", "21", "--side", "up"}).code, 2);
}

TEST(Cli, Check) {
  auto r = run({"check", "687594123"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"avoids\":true,\"violating_pattern\":null,\"positions\":null}\n");
  r = run({"check", "4231"});
  EXPECT_EQ(r.out, "{\"avoids\":false,\"violating_pattern\":\"4231\",\"positions\":[1,2,3,4]}\n");
  const auto j = nlohmann::json::parse(run({"check", "351624"}).out);
  EXPECT_FALSE(j["avoids"].get<bool>());
  EXPECT_EQ(j["violating_pattern"], "351624");
  EXPECT_EQ(run({"check", "x"}).code, 2);
}

TEST(Cli, PoincareTypeA) {
  const std::string expect = "{\"min_exp\":0,\"coeffs\":[\"1\",\"3\",\"5\",\"4\",\"1\"]}\n";
  for (const char* m : {"formula", "rook", "brute"}) {
    const auto r = run({"poincare", "--type", "A", "--n", "4", "--k", "2", "--method", m});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, expect) << m;
    EXPECT_EQ(laurent_from_json_string(r.out), theoremA_poincare(4, 2));
  }
  EXPECT_EQ(run({"poincare", "--n", "4", "--k", "2", "--method", "dp", "--at-one"}).out, "14\n");
  EXPECT_EQ(run({"poincare", "--n", "4", "--k", "2", "--at-one"}).out, "14\n");
  EXPECT_EQ(run({"poincare", "--n", "4", "--k", "2", "--method", "dp"}).code, 2);
  EXPECT_EQ(run({"poincare", "--n", "4", "--k", "4"}).code, 2);
  EXPECT_EQ(run({"poincare", "--n", "12", "--k", "6", "--method", "brute"}).code, 2);
  EXPECT_EQ(run({"poincare", "--type", "A", "--n", "4"}).code, 2);
}

TEST(Cli, PoincareTypeB) {
  for (const char* m : {"formula", "rook", "brute"}) {
    const auto r = run({"poincare", "--type", "B", "--n", "2", "--method", m});
    EXPECT_EQ(r.out, "{\"min_exp\":0,\"coeffs\":[\"1\",\"2\",\"2\",\"1\"]}\n") << m << r.err;
  }
  EXPECT_EQ(run({"poincare", "--type", "B", "--n", "3", "--at-one"}).out, "26\n");
  EXPECT_EQ(run({"poincare", "--type", "B", "--n", "2", "--method", "dp", "--at-one"}).code, 2);
}

TEST(Cli, PoincarePair) {
  const auto brute = bruhat_interval(Permutation::parse("562314978"), Permutation::parse("687594123")).size();
  auto r = run({"poincare", "--u", "562314978", "--w", "687594123", "--method", "rook", "--at-one"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, std::to_string(brute) + "\n");
  r = run({"poincare", "--w", "4231"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("4231"), std::string::npos);
  EXPECT_NE(r.err.find("1,2,3,4"), std::string::npos);
  EXPECT_EQ(run({"poincare", "--w", "4231", "--method", "brute"}).out,
            to_json_string(poincare_brute(Permutation::identity(4), Permutation::parse("4231"))) + "\n");
  EXPECT_EQ(run({"poincare", "--u", "21", "--w", "12"}).code, 2);
  EXPECT_EQ(run({"poincare", "--w", "3412", "--method", "dp", "--at-one"}).out, "14\n");
  EXPECT_EQ(run({"poincare", "--w", "3412", "--method", "formula"}).code, 2);
}

TEST(Cli, Count) {
  auto r = run({"count", "--board", "-", "--k", "2"}, "##\n##\n");
  EXPECT_EQ(r.out, "2\n");
  r = run({"count", "--board", "-", "--k", "1", "--q"}, "##\n##\n");
  EXPECT_EQ(r.out, "{\"min_exp\":1,\"coeffs\":[\"1\",\"2\",\"1\"]}\n");
  EXPECT_EQ(run({"count", "--board", "-"}, "#.\n##\n").out, "1\n");
  EXPECT_EQ(run({"count", "--board", "-"}, "#.\n#\n").code, 2);
  EXPECT_EQ(run({"count", "--board", "/nonexistent/board.txt"}).code, 2);
  EXPECT_EQ(run({"count", "--w", "3412"}).out, "14\n");
  EXPECT_EQ(run({"count", "--w", "4321"}).out, "24\n");
  EXPECT_EQ(run({"count", "--w", "4231"}).out, "20\n");
  EXPECT_EQ(run({"count"}).code, 2);
}

TEST(Cli, NumberCommands) {
  EXPECT_EQ(run({"qstirling", "--n", "3", "--k", "2"}).out, "{\"min_exp\":1,\"coeffs\":[\"2\",\"1\"]}\n");
  EXPECT_EQ(run({"qstirling", "--n", "3", "--k", "2", "--at-one"}).out, "3\n");
  EXPECT_EQ(run({"qstirling", "--n", "3", "--k", "5"}).out, "{\"min_exp\":0,\"coeffs\":[\"0\"]}\n");
  EXPECT_EQ(run({"qstirling", "--n", "-1", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"polybernoulli", "--n", "2", "--k", "2"}).out, "14\n");
  EXPECT_EQ(run({"polybernoulli", "--n", "4", "--k", "2"}).out, "146\n");
  EXPECT_EQ(run({"polybernoulli", "--n", "4", "--k", "-2"}).code, 2);
  EXPECT_EQ(run({"polybernoulli", "--n", "4"}).code, 2);
}

TEST(Cli, Tables) {
  auto r = run({"table", "qstirling", "--n", "3"});
  EXPECT_EQ(r.out, "3\t1\t2q + q^2\tq^3\n");
  r = run({"table", "polybernoulli", "--max-n", "4", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[2][2], "14");
  EXPECT_EQ(j[4][2], "146");
  EXPECT_EQ(j[1][1], "2");
  for (int i = 0; i <= 4; ++i) {
    EXPECT_EQ(j[0][i], "1");
    EXPECT_EQ(j[i][0], "1");
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(j[i][k], j[k][i]);
  }
  r = run({"table", "polybernoulli", "--max-n", "2"});
  EXPECT_EQ(r.out, "n\\k\t0\t1\t2\n0\t1\t1\t1\n1\t1\t2\t4\n2\t1\t4\t14\n");
  r = run({"table", "theorem8", "--max-n", "6", "--format", "json"});
  const auto t = nlohmann::json::parse(r.out);
  EXPECT_EQ(t.size(), 15u);
  for (const auto& row : t) {
    EXPECT_EQ(row["stirling_product_sum"], row["alternating_sum"]);
    EXPECT_EQ(row["alternating_sum"], row["poly_bernoulli"]);
    EXPECT_EQ(row["poly_bernoulli"], row["dp"]);
  }
  EXPECT_EQ(run({"table", "cubes"}).code, 2);
  EXPECT_EQ(run({"table", "qstirling", "--max-n", "-1"}).code, 2);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--suite", "stirling", "--max-n", "6"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS staircase q-rook numbers"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = run({"verify", "--suite", "intervals", "--max-n", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS hull configurations = [id,p] iff p avoids 4231,35142,42513,351624 (n <= 5) [157 cases]"),
            std::string::npos)
      << r.out;
  r = run({"verify", "--suite", "typeB", "--max-n", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"verify", "--suite", "typeB", "--max-n", "9"});
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "theorem8", "--max-n", "7"}, {"verify", "--suite", "stirling", "--max-n", "5"},
           {"poincare", "--type", "B", "--n", "3"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

#ifdef BRUHAT_ROOK_CLI_PATH
TEST(Cli, ExecutableExitCodes) {
  const std::string exe = BRUHAT_ROOK_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int s = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(status("check 4231"), 0);
  EXPECT_EQ(status("hull 11"), 2);
  EXPECT_EQ(status("poincare --w 4231"), 3);
}
#endif
