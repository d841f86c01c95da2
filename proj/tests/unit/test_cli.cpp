// Copyright 2026 The graphzeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "graphzeta/cli/cli.hpp"
#include "graphzeta/cli/verify.hpp"
#include "graphzeta/families.hpp"
#include "graphzeta/json_io.hpp"
#include "graphzeta/zeta.hpp"

namespace graphzeta::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = {}) {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string family_json(const std::vector<std::string>& args) {
  std::vector<std::string> full{"family"};
  full.insert(full.end(), args.begin(), args.end());
  const Outcome o = invoke(full);
  EXPECT_EQ(o.code, kExitOk) << o.err;
  return o.out;
}

TEST(Cli, FamilyCommands) {
  const CuspidalGraph chain = json::parse_graph(family_json({"chain", "--q", "3", "--k", "4"}));
  EXPECT_EQ(chain.core.vertex_count(), 1u);
  ASSERT_EQ(chain.cusps.size(), 1u);
  EXPECT_EQ(chain.cusps[0].alpha, 4);

  const CuspidalGraph star = json::parse_graph(family_json({"star", "--q", "3", "--parts", "2,2"}));
  EXPECT_EQ(star.cusps.size(), 2u);

  const CuspidalGraph loops = json::parse_graph(family_json({"loops", "--q", "3", "--N", "2"}));
  EXPECT_EQ(loops.core.vertex_count(), 5u);
  EXPECT_EQ(loops.cusps.size(), 1u);

  EXPECT_EQ(family_json({"pgl2", "--q", "3"}), json::write_graph(families::pgl2(3)));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"family", "moebius", "--q", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"family", "star", "--q", "3", "--parts", "3,2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"family", "chain", "--q", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"family", "pgl2", "--q", "x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "loops", "--q", "3", "--N", "5..2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "stars", "--q", "3", "--N", "1..2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"zeta", "/nonexistent/graph.json"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--max-m", "0", "-"}, family_json({"pgl2", "--q", "2"})).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, Q2LoopsWarns) {
  const Outcome o = invoke({"family", "loops", "--q", "2", "--N", "1"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.err.find("warning"), std::string::npos);
}

TEST(Cli, MalformedJsonHasNoOutput) {
  const Outcome o = invoke({"zeta", "-"}, "{\"q\": 3,");
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_TRUE(o.out.empty());
  EXPECT_FALSE(o.err.empty());
  EXPECT_EQ(invoke({"zeta", "-"}, R"({"q": 3, "vertices": [], "edges": [], "bad": 1})").code, kExitUsage);
}

TEST(Cli, ZetaRoundTripMatchesLibrary) {
  for (const auto& c : {families::pgl2(2), families::star(3, {2, 2}), families::loop_family(3, 3)}) {
    const Outcome o = invoke({"zeta", "-"}, json::write_graph(c));
    ASSERT_EQ(o.code, kExitOk) << o.err;
    EXPECT_EQ(o.out, json::write_zeta(bass_ihara_zeta(c)));
  }
  const Outcome series = invoke({"zeta", "--series", "4", "-"}, family_json({"chain", "--q", "3", "--k", "4"}));
  EXPECT_EQ(series.code, kExitOk);
  const ZetaResult z = bass_ihara_zeta(families::chain(3, 4));
  const CountingSeries s = counting_series(z, 4);
  json::ZetaReportOptions options;
  options.series = &s;
  EXPECT_EQ(series.out, json::write_zeta(z, options));
  EXPECT_EQ(s.N, (std::vector<Rational>{0, 12, 0, 144}));
}

TEST(Cli, CountWithOracle) {
  const Outcome o = invoke({"count", "--M", "12", "--oracle", "-"}, family_json({"loops", "--q", "3", "--N", "1"}));
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("\"agree\": true"), std::string::npos);
}

TEST(Cli, PolesAndSweep) {
  const Outcome poles = invoke({"poles", "-"}, family_json({"star", "--q", "3", "--parts", "2,2"}));
  EXPECT_EQ(poles.code, kExitOk);
  EXPECT_NE(poles.out.find("\"moduli_clusters\""), std::string::npos);
  EXPECT_NE(poles.out.find("0.333333333333333"), std::string::npos);
  EXPECT_EQ(invoke({"poles", "--tol", "0", "-"}, family_json({"pgl2", "--q", "3"})).code, kExitUsage);
  EXPECT_EQ(invoke({"poles", "--tol", "-1", "-"}, family_json({"pgl2", "--q", "3"})).code, kExitUsage);

  const Outcome sweep = invoke({"sweep", "loops", "--q", "3", "--N", "1..8"});
  ASSERT_EQ(sweep.code, kExitOk);
  std::istringstream lines(sweep.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "N,R,second_modulus,ramanujan");
  double previous = 1;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(cells[0], std::to_string(rows));
    const double second = std::stod(cells[2]);
    EXPECT_LT(second, previous);
    previous = second;
  }
  EXPECT_EQ(rows, 8);
}

TEST(Cli, Deterministic) {
  const std::string g = family_json({"loops", "--q", "3", "--N", "2"});
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"zeta", "--series", "10", "--expand-selberg", "-"}, {"poles", "-"}, {"count", "-"}, {"verify", "-"}}) {
    EXPECT_EQ(invoke(args, g).out, invoke(args, g).out);
  }
  EXPECT_EQ(invoke({"sweep", "loops", "--q", "3", "--N", "1..6"}).out,
            invoke({"sweep", "loops", "--q", "3", "--N", "1..6"}).out);
}

TEST(Cli, VerifyPasses) {
  for (const auto& g : {family_json({"pgl2", "--q", "3"}), family_json({"star", "--q", "3", "--parts", "2,2"})}) {
    const Outcome o = invoke({"verify", "--max-m", "10", "--fixtures", "-"}, g);
    EXPECT_EQ(o.code, kExitOk) << o.out;
    EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  }
}

TEST(Cli, VerifyBudgetFailureExitsOne) {
  const Outcome o = invoke({"verify", "--max-m", "15", "-"}, family_json({"pgl2", "--q", "2"}));
  EXPECT_EQ(o.code, kExitFailure);
  EXPECT_NE(o.out.find("FAIL euler_product"), std::string::npos);
  EXPECT_NE(o.out.find("budget exceeded"), std::string::npos);
}

TEST(Verify, CorruptedWeightReportsFirstFailingM) {
  const CuspidalGraph c = families::loop_family(3, 1);
  CuspidalGraph corrupted = c;
  // a_1 -> c carries weight q; lowering it changes cycles of length 2N + 1 = 3 first.
  corrupted.core = c.core.with_weight(1, Rational(2));
  VerifyOptions options;
  options.engine_graph = &corrupted;
  const RunReport report = run_verification(c, options);
  EXPECT_FALSE(report.ok());
  ASSERT_FALSE(report.checks.empty());
  EXPECT_FALSE(report.checks[0].pass);
  EXPECT_NE(report.checks[0].name.find("first failing m="), std::string::npos);
  EXPECT_NE(report.checks[0].engine, report.checks[0].reference);
  EXPECT_NE(format_report(report).find("FAIL counts first failing m="), std::string::npos);
}

}  // namespace
}  // namespace graphzeta::cli
