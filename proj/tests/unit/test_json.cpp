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

#include "graphzeta/error.hpp"
#include "graphzeta/families.hpp"
#include "graphzeta/json_io.hpp"
#include "graphzeta/zeta.hpp"

namespace graphzeta {
namespace {

TEST(GraphJson, RoundTripIsByteIdentical) {
  for (const auto& c : {families::pgl2(3), families::chain(3, 4), families::star(3, {2, 2}),
                        families::loop_family(3, 2)}) {
    const std::string text = json::write_graph(c);
    const CuspidalGraph back = json::parse_graph(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(json::write_graph(back), text);
  }
}

TEST(GraphJson, DefaultsAndRationalWeights) {
  const CuspidalGraph c = json::parse_graph(R"({"q": 3, "vertices": ["x", "y"],
      "edges": [{"a": "x", "b": "y", "wa": "3/2", "wb": 2}],
      "cusps": [{"vertex": "x", "alpha": 2}]})");
  EXPECT_EQ(c.central_order, 1);
  ASSERT_EQ(c.cusps.size(), 1u);
  EXPECT_EQ(c.cusps[0].ray_q, 3);
  EXPECT_EQ(c.core.edge(0).weight, Rational(3, 2));
  EXPECT_NE(json::write_graph(c).find("\"3/2\""), std::string::npos);
}

TEST(GraphJson, RejectsBadInput) {
  EXPECT_THROW(json::parse_graph("{"), ParseError);
  EXPECT_THROW(json::parse_graph("[]"), ParseError);
  EXPECT_THROW(json::parse_graph(R"({"vertices": [], "edges": []})"), ParseError);
  EXPECT_THROW(json::parse_graph(R"({"q": 3, "vertices": ["x"], "edges": [], "extra": 1})"), ParseError);
  EXPECT_THROW(json::parse_graph(R"({"q": 3, "vertices": ["x", "y"],
      "edges": [{"a": "x", "b": "y", "wa": 1, "wb": 1, "w": 2}]})"),
               ParseError);
  EXPECT_THROW(json::parse_graph(R"({"q": 3, "vertices": ["x"], "edges": [{"a": "x", "b": "z", "wa": 1, "wb": 1}]})"),
               ParseError);
  EXPECT_THROW(json::parse_graph(R"({"q": 3, "vertices": ["x", "x"], "edges": []})"), ParseError);
  EXPECT_THROW(json::parse_graph(R"({"q": 3, "vertices": ["x", "y"], "edges": [{"a": "x", "b": "y", "wa": 1.5, "wb": 1}]})"),
               ParseError);
  EXPECT_THROW(json::parse_graph(R"({"q": 3, "vertices": ["x", "y"], "edges": []})"), ValidationError);
  EXPECT_THROW(json::parse_graph(R"({"q": 3, "vertices": ["x"], "edges": [], "cusps": [{"vertex": "x", "alpha": 2, "ray_q": 1}]})"),
               ValidationError);
}

TEST(ZetaJson, Pgl2Report) {
  const std::string text = json::write_zeta(bass_ihara_zeta(families::pgl2(2)));
  const std::string compact = [&] {
    std::string s;
    for (char ch : text) {
      if (ch != ' ' && ch != '\n') s += ch;
    }
    return s;
  }();
  EXPECT_EQ(compact, R"({"bass_ihara":{"num":[1,0,-2],"den":[1,0,-4]},"c_gamma":1,"cusps":1})");
}

TEST(ZetaJson, SeriesAndSelberg) {
  const ZetaResult z = bass_ihara_zeta(families::pgl2(3));
  const CountingSeries s = counting_series(z, 3);
  json::ZetaReportOptions options;
  options.series = &s;
  options.expand_selberg = true;
  const std::string text = json::write_zeta(z, options);
  EXPECT_NE(text.find("\"selberg\""), std::string::npos);
  EXPECT_NE(text.find("\"series\""), std::string::npos);
  EXPECT_NE(text.find("\"c_gamma\": 2"), std::string::npos);
}

TEST(ZetaJson, HugeIntegersBecomeStrings) {
  const CountingSeries s = counting_series(families::pgl2(3), 60);
  const std::string text = json::write_counting(s);
  EXPECT_NE(text.find('"' + s.N[59].to_string() + '"'), std::string::npos);
}

TEST(PoleJson, Rounding) {
  EXPECT_EQ(json::round15(1.0 / 3), 0.333333333333333);
  EXPECT_EQ(json::round15(0.0), 0.0);
  const PoleReport r = pole_report(bass_ihara_zeta(families::star(3, {2, 2})).bass_ihara);
  const std::string text = json::write_poles(r);
  EXPECT_NE(text.find("0.333333333333333"), std::string::npos);
  EXPECT_NE(text.find("\"gap\": 0.666666666666667"), std::string::npos);
  EXPECT_NE(json::write_poles(pole_report(RatFunc())).find("\"R\": null"), std::string::npos);
}

}  // namespace
}  // namespace graphzeta
