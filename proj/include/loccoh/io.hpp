#pragma once

// JSON encodings. Input ideal documents:
//   {"variables": ["x1", ...],
//    "ideal": {"generators": [["x1","y1"], ...]}            or
//    "ideal": {"intersection_of_primes": [["x1","x2"], ...]}}
// Cohomology tables list nonzero {"i", "pattern", "dim"} triples sorted by
// i and then lexicographically by pattern.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "loccoh/analysis.hpp"
#include "loccoh/cech.hpp"
#include "loccoh/graphs.hpp"
#include "loccoh/ideals.hpp"

namespace loccoh {

using json = nlohmann::json;

inline constexpr const char* kEngineVersion = "loccoh-1.0.0";

inline json names_json(const VariableContext& ctx, VarSet s) { return ctx.names_of(s); }

inline SquareFreeIdeal parse_ideal(const json& doc, const Limits& limits = {}) {
  try {
    if (!doc.is_object()) throw InputError("ideal document must be a JSON object");
    if (!doc.contains("variables") || !doc.at("variables").is_array())
      throw InputError("ideal document needs a 'variables' array");
    auto ctx = std::make_shared<const VariableContext>(doc.at("variables").get<std::vector<std::string>>(), limits);
    if (!doc.contains("ideal") || !doc.at("ideal").is_object()) throw InputError("ideal document needs an 'ideal' object");
    const json& ideal = doc.at("ideal");
    const bool has_gens = ideal.contains("generators");
    const bool has_primes = ideal.contains("intersection_of_primes");
    if (has_gens == has_primes)
      throw InputError("'ideal' must have exactly one of 'generators' or 'intersection_of_primes'");
    std::vector<VarSet> sets;
    for (const auto& entry : ideal.at(has_gens ? "generators" : "intersection_of_primes")) {
      sets.push_back(ctx->set_of(entry.get<std::vector<std::string>>()));
    }
    if (has_gens) return {ctx, std::move(sets)};
    for (VarSet s : sets)
      if (s.empty()) throw InputError("a prime in 'intersection_of_primes' has no variables");
    if (sets.empty()) throw InputError("'intersection_of_primes' needs at least one prime");
    return intersection_of_primes(ctx, sets);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ideal document: ") + e.what());
  }
}

inline SquareFreeIdeal parse_ideal_text(const std::string& text, const Limits& limits = {}) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_ideal(doc, limits);
}

inline SquareFreeIdeal load_ideal(const std::string& path, const Limits& limits = {}) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str(), limits);
}

inline json ideal_to_json(const SquareFreeIdeal& I) {
  json gens = json::array();
  for (VarSet g : I.generators()) gens.push_back(names_json(*I.context(), g));
  return {{"variables", I.context()->names()}, {"ideal", {{"generators", gens}}}};
}

// "x1*y2", "x1,y2" or "x1 y2".
inline SquareFreeMonomial parse_monomial(const VariableContext& ctx, const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized)
    if (c == '*' || c == ',') c = ' ';
  std::istringstream in(normalized);
  VarSet s;
  std::string name;
  while (in >> name) {
    const int idx = ctx.index_of(name);
    if (s.contains(idx)) throw InputError("monomial repeats variable '" + name + "'; only square-free monomials are supported");
    s = s.with(idx);
  }
  return {s};
}

inline json table_to_json(const CohomologyTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries()) {
    entries.push_back({{"i", e.i}, {"pattern", names_json(*t.ideal().context(), e.pattern)}, {"dim", e.dim}});
  }
  return {{"field", t.field().label()}, {"ideal", ideal_to_json(t.ideal())}, {"entries", entries}};
}

inline FieldSpec parse_field(const std::string& label) {
  if (label == "QQ" || label == "Q" || label == "rationals") return FieldSpec::rationals();
  std::string digits = label;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
  try {
    std::size_t used = 0;
    const unsigned long long p = std::stoull(digits, &used);
    if (used != digits.size()) throw InputError("bad field '" + label + "'");
    return FieldSpec::prime_field(p);
  } catch (const std::logic_error&) {
    throw InputError("bad field '" + label + "': expected QQ or a prime");
  }
}

inline CohomologyTable table_from_json(const json& doc, const Limits& limits = {}) {
  try {
    CohomologyTable t(parse_ideal(doc.at("ideal"), limits), parse_field(doc.at("field").get<std::string>()));
    const auto& ctx = *t.ideal().context();
    for (const auto& e : doc.at("entries")) {
      const int i = e.at("i").get<int>();
      if (i < 0 || i > t.n()) throw InputError("table entry degree out of range");
      const auto dim = e.at("dim").get<std::size_t>();
      if (dim == 0) throw InputError("table lists a zero entry");
      t.set(i, ctx.set_of(e.at("pattern").get<std::vector<std::string>>()), dim);
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed cohomology table: ") + e.what());
  }
}

inline json graph_to_json(const ConnectivityGraph& g, const VariableContext& ctx) {
  json vertices = json::array(), edges = json::array();
  for (const auto& p : g.vertices) vertices.push_back(prime_label(ctx, p));
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  json out = {{"kind", to_string(g.kind)}, {"vertices", vertices}, {"edges", edges}};
  out["connected"] = g.vertices.empty() ? false : is_connected(g);
  return out;
}

inline json report_to_json(const AnalysisReport& rep) {
  const auto& ctx = *rep.ideal.context();
  json primes = json::array();
  for (const auto& p : rep.minimal_primes) primes.push_back(names_json(ctx, p.variables()));
  json hyps = json::array();
  for (const auto& h : rep.hypotheses) {
    hyps.push_back({{"name", h.name},
                    {"holds", h.holds},
                    {"evidence", h.evidence},
                    {"model_level", h.model_level},
                    {"vacuous", h.vacuous}});
  }
  const auto& v = rep.verdicts;
  json verdicts = {{"connected", v.connected},
                   {"vanishing_top_minus_one", v.vanishing_top_minus_one},
                   {"agreement", v.agreement},
                   {"applicable", v.applicable},
                   {"cd", v.cd},
                   {"depth", v.depth},
                   {"dim_quotient", v.dim_quotient},
                   {"height", v.height}};
  verdicts["q"] = v.q ? json(*v.q) : json(nullptr);
  return {{"ideal", ideal_to_json(rep.ideal)},
          {"field", rep.field.label()},
          {"minimal_primes", primes},
          {"hypotheses", hyps},
          {"verdicts", verdicts},
          {"sentinels", {{"hlv", v.hlv}, {"grade", v.grade}}},
          {"timings_ms", rep.timings_ms}};
}

inline json sweep_to_json(const SweepSummary& s) {
  json out = {{"n", s.n},           {"requested", s.requested}, {"seed", s.seed},
              {"field", s.field},   {"trials", s.trials},       {"agreements", s.agreements},
              {"failures", s.failures}, {"skipped", s.skipped}, {"planted", s.planted},
              {"planted_agreements", s.planted_agreements}};
  out["first_counterexample"] = s.first_counterexample ? ideal_to_json(*s.first_counterexample) : json(nullptr);
  return out;
}

} // namespace loccoh
