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

#ifndef GRAPHZETA_CLI_VERIFY_HPP_
#define GRAPHZETA_CLI_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphzeta/graph.hpp"

namespace graphzeta::cli {

struct Check {
  std::string name;
  bool pass = false;
  std::string engine;
  std::string reference;
};

struct RunReport {
  std::string input;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool ok() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::size_t max_m = 10;
  bool fixtures = false;
  // Seed of the vertex permutation used by the relabeling check.
  std::uint64_t seed = 1;
  // When set, the engine side of every comparison runs on this graph while
  // the oracle keeps the original. Used as a negative control.
  const CuspidalGraph* engine_graph = nullptr;
};

// Engine-vs-oracle N_m for m = 1..max_m, Euler product through u^max_m,
// relabeling invariance and, optionally, the embedded closed-form fixtures.
// Never throws for budget overruns; they become failing checks.
RunReport run_verification(const CuspidalGraph& c, const VerifyOptions& options, std::string input = {});

// One "PASS|FAIL name: engine=... reference=..." line per check plus a summary.
std::string format_report(const RunReport& report);

}  // namespace graphzeta::cli

#endif  // GRAPHZETA_CLI_VERIFY_HPP_
