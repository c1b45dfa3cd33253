#pragma once

// Assembly of the documents printed by the command-line front end.

#include <optional>
#include <sstream>
#include <string>

#include "loccoh/analysis.hpp"
#include "loccoh/cache.hpp"
#include "loccoh/graphs.hpp"
#include "loccoh/io.hpp"

namespace loccoh {

struct RunOptions {
  TableOptions table{};
  // No cache when empty.
  std::optional<std::filesystem::path> cache_dir;
};

struct TableLookup {
  CohomologyTable table;
  std::string cache_status;  // "hit", "miss" or "disabled"
};

inline TableLookup obtain_table(const SquareFreeIdeal& I, const RunOptions& opts) {
  if (!opts.cache_dir) return {local_cohomology_table(I, opts.table), "disabled"};
  const TableCache cache(*opts.cache_dir);
  if (auto hit = cache.lookup(I, opts.table.field)) return {std::move(*hit), "hit"};
  TableLookup out{local_cohomology_table(I, opts.table), "miss"};
  cache.store(out.table);
  return out;
}

inline json analyze_document(const SquareFreeIdeal& I, const RunOptions& opts) {
  const TableLookup lookup = obtain_table(I, opts);
  const AnalysisReport rep = svt_check(I, opts.table, &lookup.table);
  json doc = report_to_json(rep);
  const auto& ctx = *I.context();
  doc["graphs"] = {{"theta", graph_to_json(theta_graph(I, opts.table.limits), ctx)},
                   {"gamma", graph_to_json(gamma_graph(I, opts.table.limits), ctx)}};
  doc["table"] = table_to_json(lookup.table)["entries"];
  doc["cache"] = lookup.cache_status;
  doc["engine_version"] = kEngineVersion;
  return doc;
}

// "a.b.c: value" lines, one per leaf, in key order.
inline void flatten_json(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_json(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_json(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

inline std::string to_text(const json& j) {
  std::ostringstream out;
  flatten_json(j, "", out);
  return out.str();
}

} // namespace loccoh
