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

#ifndef GRAPHZETA_JSON_IO_HPP_
#define GRAPHZETA_JSON_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphzeta/graph.hpp"
#include "graphzeta/spectra.hpp"
#include "graphzeta/zeta.hpp"

namespace graphzeta::json {

// Graph JSON:
//   {"q": int, "central_order": int, "vertices": [string...],
//    "edges": [{"a": string, "b": string, "wa": int, "wb": int}...],
//    "cusps": [{"vertex": string, "alpha": int, "ray_q": int}...]}
// "central_order" defaults to 1, "cusps" to [] and "ray_q" to q. Weights may
// also be given as "p/q" strings. Unknown fields are rejected. Throws
// ParseError on malformed input and ValidationError on an invalid graph.
CuspidalGraph parse_graph(std::string_view text);

// Canonical form: two-space indentation, keys in the order above, trailing
// newline. parse_graph(write_graph(c)) reproduces c for graphs whose oriented
// edges come in consecutive inverse pairs.
std::string write_graph(const CuspidalGraph& c);

struct ZetaReportOptions {
  const CountingSeries* series = nullptr;
  bool expand_selberg = false;
};

std::string write_zeta(const ZetaResult& zeta, const ZetaReportOptions& options = {});

std::string write_counting(const CountingSeries& series, const std::vector<Rational>* oracle = nullptr);

std::string write_poles(const PoleReport& report, const RamanujanVerdict* verdict = nullptr);

// Rounds to 15 significant digits; the shortest representation of the
// rounded value is what gets printed.
double round15(double x);

}  // namespace graphzeta::json

#endif  // GRAPHZETA_JSON_IO_HPP_
