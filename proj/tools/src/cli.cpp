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

#include "graphzeta/cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "graphzeta/cli/verify.hpp"
#include "graphzeta/error.hpp"
#include "graphzeta/families.hpp"
#include "graphzeta/json_io.hpp"
#include "graphzeta/oracle.hpp"
#include "graphzeta/spectra.hpp"
#include "graphzeta/zeta.hpp"

namespace graphzeta::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};


std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", json::round15(x));
  return buf;
}

std::vector<std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoll(text, &used);
      if (used != text.size()) throw UsageError("");
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      lo = std::stoll(a, &used);
      if (used != a.size()) throw UsageError("");
      hi = std::stoll(b, &used);
      if (used != b.size()) throw UsageError("");
    }
  } catch (const std::exception&) {
    throw UsageError("range must look like A..B, got \"" + text + "\"");
  }
  if (lo > hi) throw UsageError("empty range " + text);
  std::vector<std::int64_t> values;
  for (std::int64_t n = lo; n <= hi; ++n) values.push_back(n);
  return values;
}

struct FamilyArgs {
  std::string name;
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> parts;
};

std::string cmd_family(const FamilyArgs& a, std::ostream& err) {
  CuspidalGraph c;
  if (a.name == "pgl2") {
    c = families::pgl2(a.q);
  } else if (a.name == "chain") {
    if (a.k == 0) throw UsageError("family chain needs --k");
    c = families::chain(a.q, a.k);
  } else if (a.name == "star") {
    if (a.parts.empty()) throw UsageError("family star needs --parts");
    c = families::star(a.q, a.parts);
  } else {
    if (a.n == 0) throw UsageError("family loops needs --N");
    c = families::loop_family(a.q, a.n);
    if (families::loop_family_is_degenerate(a.q)) {
      err << "warning: q = 2 gives the ray attachment a backtrack weight of q - 2 = 0; the loop family is degenerate\n";
    }
  }
  return json::write_graph(c);
}

std::string cmd_zeta(const std::string& input, std::size_t series, bool expand, std::istream& in) {
  const CuspidalGraph c = json::parse_graph(read_input(input, in));
  const ZetaResult zeta = bass_ihara_zeta(c);
  json::ZetaReportOptions options;
  options.expand_selberg = expand;
  CountingSeries counts;
  if (series > 0) {
    counts = counting_series(zeta, series);
    options.series = &counts;
  }
  return json::write_zeta(zeta, options);
}

std::string cmd_count(const std::string& input, std::size_t order, bool with_oracle, std::istream& in,
                      bool& failed) {
  const CuspidalGraph c = json::parse_graph(read_input(input, in));
  const CountingSeries counts = counting_series(c, order);
  if (!with_oracle) return json::write_counting(counts);
  const std::vector<Rational> traces = oracle::trace_powers_cuspidal(c, order);
  failed = traces != counts.N;
  return json::write_counting(counts, &traces);
}

std::string cmd_poles(const std::string& input, double tol, std::istream& in) {
  const CuspidalGraph c = json::parse_graph(read_input(input, in));
  const PoleReport report = pole_report(bass_ihara_zeta(c).bass_ihara, tol);
  if (c.q >= 2) {
    const RamanujanVerdict verdict = ramanujan_check(report, c.q);
    return json::write_poles(report, &verdict);
  }
  return json::write_poles(report);
}

std::string cmd_sweep(const std::string& family, std::int64_t q, const std::string& range) {
  if (family != "loops") throw UsageError("sweep supports only the loops family");
  const auto rows = pole_gap_sweep(q, parse_range(range));
  std::ostringstream out;
  out << "N,R,second_modulus,ramanujan\n";
  for (const auto& r : rows) {
    out << r.N << ',' << format_double(r.R) << ',' << (r.second_modulus ? format_double(*r.second_modulus) : "")
        << ',' << (r.ramanujan ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string cmd_verify(const std::string& input, const VerifyOptions& options, std::istream& in, std::ostream& err,
                       bool& failed) {
  const CuspidalGraph c = json::parse_graph(read_input(input, in));
  const RunReport report = run_verification(c, options, input);
  failed = !report.ok();
  err << "verify: " << report.checks.size() << " checks in " << format_double(report.elapsed_ms) << " ms\n";
  return format_report(report);
}

void require_positive(double tol) {
  if (!(tol > 0)) throw UsageError("--tol must be positive");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Zeta functions, prime cycle counts and poles of weighted and cuspidal graphs", "graphzeta"};
  app.require_subcommand(1);

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Emit a builtin family as graph JSON");
  family->add_option("name", fam.name, "pgl2, chain, star or loops")
      ->required()
      ->check(CLI::IsMember({"pgl2", "chain", "star", "loops"}));
  family->add_option("--q", fam.q, "Regularity parameter")->required();
  family->add_option("--k", fam.k, "Chain cusp weight");
  family->add_option("--parts", fam.parts, "Star cusp weights, comma separated")->delimiter(',');
  family->add_option("--N", fam.n, "Loop family size");

  std::string input = "-";
  std::size_t series = 0;
  bool expand = false;
  auto* zeta = app.add_subcommand("zeta", "Bass-Ihara and Selberg zeta functions of a graph");
  zeta->add_option("graph", input, "Graph JSON file, - for standard input");
  zeta->add_option("--series", series, "Also print N_m and R_m through this order")
      ->check(CLI::Range(std::size_t{1}, kMaxGrowthOrder));
  zeta->add_flag("--expand-selberg", expand, "Print Z_A^c multiplied out");

  std::size_t count_order = 10;
  bool with_oracle = false;
  auto* count = app.add_subcommand("count", "Prime cycle counts N_m and R_m");
  count->add_option("graph", input, "Graph JSON file, - for standard input");
  count->add_option("--M", count_order, "Highest m")->check(CLI::Range(std::size_t{1}, kMaxGrowthOrder));
  count->add_flag("--oracle", with_oracle, "Compare against brute-force trace powers");

  double tol = 1e-12;
  auto* poles = app.add_subcommand("poles", "Poles, radius of convergence and Ramanujan test");
  poles->add_option("graph", input, "Graph JSON file, - for standard input");
  poles->add_option("--tol", tol, "Root-finding tolerance");

  std::string sweep_family;
  std::int64_t sweep_q = 3;
  std::string sweep_range;
  auto* sweep = app.add_subcommand("sweep", "Pole-gap table over a family parameter range, as CSV");
  sweep->add_option("family", sweep_family, "Family name (loops)")->required();
  sweep->add_option("--q", sweep_q, "Regularity parameter")->required();
  sweep->add_option("--N", sweep_range, "Range A..B")->required();

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Check the engine against the brute-force oracle");
  verify->add_option("graph", input, "Graph JSON file, - for standard input");
  verify->add_option("--max-m", verify_options.max_m, "Highest cycle length checked")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--fixtures", verify_options.fixtures, "Also check the embedded closed-form fixtures");
  verify->add_option("--seed", verify_options.seed, "Seed of the relabeling permutation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string result;
    bool failed = false;
    if (family->parsed()) {
      result = cmd_family(fam, err);
    } else if (zeta->parsed()) {
      result = cmd_zeta(input, series, expand, in);
    } else if (count->parsed()) {
      result = cmd_count(input, count_order, with_oracle, in, failed);
    } else if (poles->parsed()) {
      require_positive(tol);
      result = cmd_poles(input, tol, in);
    } else if (sweep->parsed()) {
      result = cmd_sweep(sweep_family, sweep_q, sweep_range);
    } else {
      result = cmd_verify(input, verify_options, in, err, failed);
    }
    out << result;
    out.flush();
    return failed ? kExitFailure : kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace graphzeta::cli
