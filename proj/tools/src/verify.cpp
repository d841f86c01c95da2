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

#include "graphzeta/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "graphzeta/error.hpp"
#include "graphzeta/families.hpp"
#include "graphzeta/oracle.hpp"
#include "graphzeta/series.hpp"
#include "graphzeta/zeta.hpp"

namespace graphzeta::cli {

namespace {

std::string join(const std::vector<Rational>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].to_string();
  out << ']';
  return out.str();
}

Check counts_check(const CuspidalGraph& engine_graph, const CuspidalGraph& c, std::size_t max_m) {
  const std::vector<Rational> engine = counting_series(engine_graph, max_m).N;
  const std::vector<Rational> oracle = oracle::trace_powers_cuspidal(c, max_m);
  for (std::size_t m = 1; m <= max_m; ++m) {
    if (engine[m - 1] != oracle[m - 1]) {
      return {"counts first failing m=" + std::to_string(m), false, engine[m - 1].to_string(),
              oracle[m - 1].to_string()};
    }
  }
  return {"counts m=1.." + std::to_string(max_m), true, join(engine), join(oracle)};
}

Check euler_check(const CuspidalGraph& engine_graph, const CuspidalGraph& c, std::size_t max_m) {
  const std::string name = "euler_product order " + std::to_string(max_m);
  const PowerSeries engine = series_expand(bass_ihara_zeta(engine_graph).bass_ihara, max_m);
  try {
    const EdgeIndexedGraph finite = truncate(c, oracle::truncation_depth_for(max_m));
    const auto cycles = oracle::enumerate_primitive_cycles(finite, max_m);
    const PowerSeries product = oracle::euler_product_series(cycles, max_m);
    return {name, engine == product, join(engine.coefficients()), join(product.coefficients())};
  } catch (const BudgetExceeded& e) {
    return {name, false, join(engine.coefficients()), std::string("budget exceeded: ") + e.what()};
  }
}

Check relabel_check(const CuspidalGraph& engine_graph, const CuspidalGraph& c, std::uint64_t seed) {
  std::vector<VertexId> ids;
  for (const auto& v : c.core.vertices()) ids.push_back(v.id);
  std::vector<VertexId> shuffled = ids;
  std::mt19937_64 rng(seed);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::map<VertexId, VertexId> permutation;
  for (std::size_t i = 0; i < ids.size(); ++i) permutation[ids[i]] = shuffled[i];
  const RatFunc engine = bass_ihara_zeta(engine_graph).bass_ihara;
  const RatFunc relabeled = bass_ihara_zeta(relabel(c, permutation)).bass_ihara;
  return {"relabel_invariance seed=" + std::to_string(seed), engine == relabeled, engine.to_string(),
          relabeled.to_string()};
}

struct Fixture {
  const char* name;
  std::function<CuspidalGraph()> build;
  Poly num;
  Poly den;
};

std::vector<Fixture> fixtures() {
  return {
      {"pgl2(2)", [] { return families::pgl2(2); }, Poly{1, 0, -2}, Poly{1, 0, -4}},
      {"chain(3,4)", [] { return families::chain(3, 4); }, Poly{1, 0, -3}, Poly{1, 0, -9}},
      {"star(3,(2,2))", [] { return families::star(3, {2, 2}); }, Poly{1, 0, -6, 0, 9}, Poly{1, 0, -10, 0, 9}},
      {"loops(3,1)", [] { return families::loop_family(3, 1); }, Poly{1, 0, -3},
       Poly{1, 0, -5, -6, -20, 6, -3, 0, 27}},
  };
}

}  // namespace

bool RunReport::ok() const { return failures() == 0; }

std::size_t RunReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

RunReport run_verification(const CuspidalGraph& c, const VerifyOptions& options, std::string input) {
  if (options.max_m < 1) throw InvalidArgument("--max-m must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const CuspidalGraph& engine_graph = options.engine_graph != nullptr ? *options.engine_graph : c;
  RunReport report;
  report.input = std::move(input);
  report.checks.push_back(counts_check(engine_graph, c, options.max_m));
  report.checks.push_back(euler_check(engine_graph, c, options.max_m));
  report.checks.push_back(relabel_check(engine_graph, c, options.seed));
  if (options.fixtures) {
    for (const auto& f : fixtures()) {
      const RatFunc expected = RatFunc::reduce(f.num, f.den);
      const RatFunc engine = bass_ihara_zeta(f.build()).bass_ihara;
      report.checks.push_back({std::string("fixture ") + f.name, engine == expected, engine.to_string(),
                               expected.to_string()});
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const RunReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": engine=" << c.engine << " reference=" << c.reference << '\n';
  }
  if (report.ok()) {
    out << "verify: all " << report.checks.size() << " checks passed\n";
  } else {
    out << "verify: " << report.failures() << " of " << report.checks.size() << " checks failed\n";
  }
  return out.str();
}

}  // namespace graphzeta::cli
