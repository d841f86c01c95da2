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

#include "graphzeta/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <set>

#include <json.hpp>

#include "graphzeta/error.hpp"

namespace graphzeta::json {

namespace {

using Json = nlohmann::ordered_json;

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  const std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!names.contains(key)) throw ParseError("unknown field \"" + key + "\" in " + where);
  }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field \"" + std::string(key) + "\" in " + where);
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ParseError(what + " is out of range");
  }
  return v.get<std::int64_t>();
}

std::string as_string(const Json& v, const std::string& what) {
  if (!v.is_string()) throw ParseError(what + " must be a string");
  return v.get<std::string>();
}

Rational as_weight(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(as_int(v, what));
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw ParseError(what + " must be an integer or a \"p/q\" string");
}

// Integers that fit 64 bits print as numbers, everything else as "p/q".
Json rational_value(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return Json(static_cast<std::int64_t>(r.numerator().get_si()));
  return Json(r.to_string());
}

Json rational_array(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_value(v));
  return out;
}

Json poly_array(const Poly& p) {
  if (p.is_zero()) return Json::array({0});
  return rational_array(p.coefficients());
}

Json ratfunc_object(const RatFunc& f) {
  Json out = Json::object();
  out["num"] = poly_array(f.num());
  out["den"] = poly_array(f.den());
  return out;
}

Json number_or_null(double x) {
  if (!std::isfinite(x)) return Json(nullptr);
  return Json(round15(x));
}

Json complex_pair(std::complex<double> z) { return Json::array({round15(z.real()), round15(z.imag())}); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

double round15(double x) {
  if (!std::isfinite(x) || x == 0) return x == 0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  double out = 0;
  std::from_chars(buf, buf + std::char_traits<char>::length(buf), out);
  return out;
}

CuspidalGraph parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph must be a JSON object");
  reject_unknown(doc, {"q", "central_order", "vertices", "edges", "cusps"}, "graph");

  CuspidalGraph c;
  c.q = as_int(field(doc, "q", "graph"), "q");
  if (doc.contains("central_order")) c.central_order = as_int(doc["central_order"], "central_order");

  const Json& vertices = field(doc, "vertices", "graph");
  if (!vertices.is_array()) throw ParseError("vertices must be an array");
  for (const auto& v : vertices) {
    try {
      c.core.add_vertex(as_string(v, "vertex id"));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }

  const Json& edges = field(doc, "edges", "graph");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Json& e = edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (!e.is_object()) throw ParseError(where + " must be an object");
    reject_unknown(e, {"a", "b", "wa", "wb"}, where);
    const std::string a = as_string(field(e, "a", where), where + " endpoint a");
    const std::string b = as_string(field(e, "b", where), where + " endpoint b");
    const Rational wa = as_weight(field(e, "wa", where), where + " weight wa");
    const Rational wb = as_weight(field(e, "wb", where), where + " weight wb");
    try {
      c.core.add_edge(a, b, wa, wb);
    } catch (const InvalidArgument& err) {
      throw ParseError(where + ": " + err.what());
    }
  }

  if (doc.contains("cusps")) {
    const Json& cusps = doc["cusps"];
    if (!cusps.is_array()) throw ParseError("cusps must be an array");
    for (std::size_t i = 0; i < cusps.size(); ++i) {
      const Json& k = cusps[i];
      const std::string where = "cusp " + std::to_string(i);
      if (!k.is_object()) throw ParseError(where + " must be an object");
      reject_unknown(k, {"vertex", "alpha", "ray_q"}, where);
      Cusp cusp;
      cusp.vertex = as_string(field(k, "vertex", where), where + " vertex");
      cusp.alpha = as_int(field(k, "alpha", where), where + " alpha");
      cusp.ray_q = k.contains("ray_q") ? as_int(k["ray_q"], where + " ray_q") : c.q;
      c.cusps.push_back(std::move(cusp));
    }
  }

  require_valid(c);
  return c;
}

std::string write_graph(const CuspidalGraph& c) {
  Json doc = Json::object();
  doc["q"] = c.q;
  doc["central_order"] = c.central_order;
  Json vertices = Json::array();
  for (const auto& v : c.core.vertices()) vertices.push_back(v.id);
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : c.core.edges()) {
    if (e.inverse < e.id) continue;
    const OrientedEdge& back = c.core.edge(e.inverse);
    Json item = Json::object();
    item["a"] = e.source;
    item["b"] = e.target;
    item["wa"] = rational_value(e.weight);
    item["wb"] = rational_value(back.weight);
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  Json cusps = Json::array();
  for (const auto& k : c.cusps) {
    Json item = Json::object();
    item["vertex"] = k.vertex;
    item["alpha"] = k.alpha;
    item["ray_q"] = k.ray_q;
    cusps.push_back(std::move(item));
  }
  doc["cusps"] = std::move(cusps);
  return dump(doc);
}

std::string write_zeta(const ZetaResult& zeta, const ZetaReportOptions& options) {
  Json doc = Json::object();
  doc["bass_ihara"] = ratfunc_object(zeta.bass_ihara);
  doc["c_gamma"] = zeta.selberg.exponent;
  doc["cusps"] = zeta.cusp_count;
  if (options.expand_selberg) doc["selberg"] = ratfunc_object(zeta.selberg.expand());
  if (options.series != nullptr) {
    Json series = Json::object();
    series["N"] = rational_array(options.series->N);
    series["R"] = rational_array(options.series->R);
    doc["series"] = std::move(series);
  }
  return dump(doc);
}

std::string write_counting(const CountingSeries& series, const std::vector<Rational>* oracle) {
  Json doc = Json::object();
  doc["N"] = rational_array(series.N);
  doc["R"] = rational_array(series.R);
  if (oracle != nullptr) {
    doc["oracle_N"] = rational_array(*oracle);
    doc["agree"] = *oracle == series.N;
  }
  return dump(doc);
}

std::string write_poles(const PoleReport& report, const RamanujanVerdict* verdict) {
  Json doc = Json::object();
  Json poles = Json::array();
  for (const auto& p : report.poles) {
    Json item = Json::object();
    item["value"] = complex_pair(p.value);
    item["modulus"] = round15(std::abs(p.value));
    item["multiplicity"] = p.multiplicity;
    poles.push_back(std::move(item));
  }
  doc["poles"] = std::move(poles);
  Json clusters = Json::array();
  for (double m : report.moduli_clusters) clusters.push_back(round15(m));
  doc["moduli_clusters"] = std::move(clusters);
  doc["R"] = number_or_null(report.R);
  doc["gap"] = report.gap ? number_or_null(*report.gap) : Json(nullptr);
  if (verdict != nullptr) {
    doc["ramanujan"] = verdict->ramanujan;
    Json offending = Json::array();
    for (const auto& p : verdict->offending) offending.push_back(complex_pair(p.value));
    doc["offending"] = std::move(offending);
  }
  return dump(doc);
}

}  // namespace graphzeta::json
