// loccoh: command-line front end for the local cohomology workbench.
//
// Exit codes: 0 success, 1 input error, 2 cap or budget refusal,
// 3 failed sentinel check (hlv, grade, Mayer-Vietoris, sweep disagreement).
// Errors are reported as a JSON object on standard error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "loccoh/loccoh.hpp"

namespace {

using loccoh::json;

struct Config {
  std::string input;
  std::string output;
  std::string field = "QQ";
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "json";
  int max_vars = loccoh::Limits{}.max_vars;
  int max_generators = loccoh::Limits{}.max_generators;
  std::uint64_t budget = loccoh::Limits{}.matrix_cell_budget;
  unsigned threads = 1;
  int verbosity = 0;

  std::string kind = "theta";
  std::string dot;
  int degree = 0;
  std::string monomial;
  std::string second;
  int vars = 4;
  int trials = 100;
  std::uint64_t seed = 1;
  int generators = 4;
  std::string log;
  bool clear = false;
  bool stats = false;
};

constexpr int kInputError = 1;
constexpr int kCapError = 2;
constexpr int kSentinelFailure = 3;

loccoh::Limits limits_of(const Config& c) {
  if (c.max_vars <= 0 || c.max_generators <= 0 || c.budget == 0) {
    throw loccoh::InputError("caps must be positive");
  }
  return {c.max_vars, c.max_generators, c.budget};
}

loccoh::RunOptions run_options(const Config& c) {
  loccoh::RunOptions opts;
  opts.table.field = loccoh::parse_field(c.field);
  opts.table.limits = limits_of(c);
  opts.table.threads = c.threads;
  if (!c.no_cache) opts.cache_dir = c.cache_dir.empty() ? loccoh::default_cache_dir() : std::filesystem::path(c.cache_dir);
  return opts;
}

void emit(const Config& c, const json& doc) {
  const std::string text = c.format == "text" ? loccoh::to_text(doc) : doc.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::trunc);
  if (!out) throw loccoh::InputError("cannot write '" + c.output + "'");
  out << text;
}

void log_info(const Config& c, const std::string& msg) {
  if (c.verbosity > 0) std::cerr << "loccoh: " << msg << '\n';
}

int cmd_analyze(const Config& c) {
  const auto opts = run_options(c);
  const auto I = loccoh::load_ideal(c.input, opts.table.limits);
  json doc = loccoh::analyze_document(I, opts);
  log_info(c, "cohomology table cache " + doc["cache"].get<std::string>());
  emit(c, doc);
  const bool ok = doc["sentinels"]["hlv"].get<bool>() && doc["sentinels"]["grade"].get<bool>();
  return ok ? 0 : kSentinelFailure;
}

int cmd_cohomology(const Config& c) {
  const auto opts = run_options(c);
  const auto I = loccoh::load_ideal(c.input, opts.table.limits);
  const auto lookup = loccoh::obtain_table(I, opts);
  json doc = loccoh::table_to_json(lookup.table);
  doc["cache"] = lookup.cache_status;
  emit(c, doc);
  return 0;
}

int cmd_svt(const Config& c) {
  const auto opts = run_options(c);
  const auto I = loccoh::load_ideal(c.input, opts.table.limits);
  const auto lookup = loccoh::obtain_table(I, opts);
  emit(c, loccoh::report_to_json(loccoh::svt_check(I, opts.table, &lookup.table)));
  return 0;
}

int cmd_graph(const Config& c) {
  const auto limits = limits_of(c);
  const auto I = loccoh::load_ideal(c.input, limits);
  if (c.kind != "theta" && c.kind != "gamma") throw loccoh::InputError("--kind must be theta or gamma");
  const auto g = c.kind == "theta" ? loccoh::theta_graph(I, limits) : loccoh::gamma_graph(I, limits);
  if (!c.dot.empty()) {
    std::ofstream out(c.dot, std::ios::trunc);
    if (!out) throw loccoh::InputError("cannot write '" + c.dot + "'");
    out << loccoh::to_dot(g, *I.context());
  }
  emit(c, loccoh::graph_to_json(g, *I.context()));
  return 0;
}

int cmd_surjectivity(const Config& c) {
  const auto opts = run_options(c);
  const auto I = loccoh::load_ideal(c.input, opts.table.limits);
  const auto x = loccoh::parse_monomial(*I.context(), c.monomial);
  const auto lookup = loccoh::obtain_table(I, opts);
  const loccoh::CechLattice lattice(I, opts.table.limits);
  json per_variable = json::object();
  for (int j : x.support.elements()) {
    per_variable[I.context()->name(j)] = loccoh::is_multiplication_surjective(
        lookup.table, lattice, c.degree, loccoh::SquareFreeMonomial{loccoh::VarSet::singleton(j)});
  }
  json doc = {{"degree", c.degree},
              {"monomial", loccoh::names_json(*I.context(), x.support)},
              {"surjective", loccoh::is_multiplication_surjective(lookup.table, lattice, c.degree, x)},
              {"per_variable", per_variable},
              {"divisible", loccoh::is_divisible(lookup.table, lattice, c.degree)},
              {"field", opts.table.field.label()}};
  emit(c, doc);
  return 0;
}

int cmd_mv(const Config& c) {
  const auto opts = run_options(c);
  const auto I = loccoh::load_ideal(c.input, opts.table.limits);
  const auto J = loccoh::load_ideal(c.second, opts.table.limits);
  loccoh::detail::require_same_context(I, J);
  const auto s = loccoh::sum(I, J);
  const auto meet = loccoh::intersect(I, J);
  for (const auto* ideal : {&I, &J, &s, &meet})
    loccoh::detail::require_proper_nonzero(*ideal, "mayer_vietoris_check");
  const bool holds = loccoh::mayer_vietoris_check(
      loccoh::obtain_table(I, opts).table, loccoh::obtain_table(J, opts).table,
      loccoh::obtain_table(s, opts).table, loccoh::obtain_table(meet, opts).table);
  emit(c, json{{"mayer_vietoris", holds},
               {"sum", loccoh::ideal_to_json(s)},
               {"intersection", loccoh::ideal_to_json(meet)}});
  return holds ? 0 : kSentinelFailure;
}

int cmd_sweep(const Config& c) {
  const auto opts = run_options(c);
  const auto summary = loccoh::random_svt_sweep(c.vars, c.generators, c.trials, c.seed, opts.table);
  const json doc = loccoh::sweep_to_json(summary);
  std::filesystem::path log = c.log;
  if (log.empty() && opts.cache_dir) log = *opts.cache_dir / "sweeps.jsonl";
  if (!log.empty()) {
    if (log.has_parent_path()) std::filesystem::create_directories(log.parent_path());
    std::ofstream out(log, std::ios::app);
    if (!out) throw loccoh::InputError("cannot append to '" + log.string() + "'");
    out << doc.dump() << '\n';
  }
  emit(c, doc);
  return summary.failures == 0 ? 0 : kSentinelFailure;
}

int cmd_cache(const Config& c) {
  const auto dir = c.cache_dir.empty() ? loccoh::default_cache_dir() : std::filesystem::path(c.cache_dir);
  const loccoh::TableCache cache(dir);
  if (c.clear == c.stats) throw loccoh::InputError("cache needs exactly one of --clear or --stats");
  if (c.clear) {
    emit(c, json{{"directory", dir.string()}, {"removed", cache.clear()}});
  } else {
    const auto s = cache.stats();
    emit(c, json{{"directory", dir.string()}, {"entries", s.entries}, {"bytes", s.bytes}});
  }
  return 0;
}

int report_error(const char* kind, const std::string& message, int code) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

} // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Local cohomology of square-free monomial ideals"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("-i,--input", c.input, "ideal JSON file");
    if (needs_input) in->required();
    sub->add_option("-o,--output", c.output, "write the result here instead of stdout");
    sub->add_option("--field", c.field, "QQ (default) or a prime p");
    sub->add_option("--cache-dir", c.cache_dir, "cache directory (default $LOCCOH_CACHE_DIR)");
    sub->add_flag("--no-cache", c.no_cache, "bypass the table cache");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-vars", c.max_vars, "variable cap");
    sub->add_option("--max-generators", c.max_generators, "generator cap");
    sub->add_option("--budget", c.budget, "matrix cell budget for Čech complexes");
    sub->add_option("--threads", c.threads, "worker threads for the table");
    sub->add_flag("-v,--verbose", c.verbosity, "progress messages on stderr");
  };

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  add_common(analyze, true);
  auto* cohomology = app.add_subcommand("cohomology", "multigraded local cohomology table");
  add_common(cohomology, true);
  auto* svt = app.add_subcommand("svt", "second vanishing theorem check");
  add_common(svt, true);
  auto* graph = app.add_subcommand("graph", "connectivity graph of the minimal primes");
  add_common(graph, true);
  graph->add_option("--kind", c.kind, "theta or gamma")->check(CLI::IsMember({"theta", "gamma"}));
  graph->add_option("--dot", c.dot, "write a DOT rendering here");
  auto* surj = app.add_subcommand("surjectivity", "is multiplication by a monomial surjective on H^i");
  add_common(surj, true);
  surj->add_option("--degree", c.degree, "cohomological degree i")->required();
  surj->add_option("--monomial", c.monomial, "monomial such as x1*x2")->required();
  auto* mv = app.add_subcommand("mv", "Mayer-Vietoris consistency check");
  add_common(mv, true);
  mv->add_option("--second", c.second, "second ideal JSON file")->required();
  auto* sweep = app.add_subcommand("sweep", "randomized second vanishing theorem sweep");
  add_common(sweep, false);
  sweep->add_option("--vars", c.vars, "number of variables")->required();
  sweep->add_option("--trials", c.trials, "number of random ideals");
  sweep->add_option("--seed", c.seed, "PRNG seed");
  sweep->add_option("--generators", c.generators, "upper bound on generators per ideal");
  sweep->add_option("--log", c.log, "JSONL log to append the summary to");
  auto* cache = app.add_subcommand("cache", "inspect or clear the table cache");
  cache->add_option("--cache-dir", c.cache_dir, "cache directory");
  cache->add_flag("--clear", c.clear, "remove all entries");
  cache->add_flag("--stats", c.stats, "count entries");
  cache->add_option("-o,--output", c.output, "write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kInputError);
  }

  try {
    if (*analyze) return cmd_analyze(c);
    if (*cohomology) return cmd_cohomology(c);
    if (*svt) return cmd_svt(c);
    if (*graph) return cmd_graph(c);
    if (*surj) return cmd_surjectivity(c);
    if (*mv) return cmd_mv(c);
    if (*sweep) return cmd_sweep(c);
    if (*cache) return cmd_cache(c);
  } catch (const loccoh::CapExceeded& e) {
    return report_error(e.kind(), e.what(), kCapError);
  } catch (const loccoh::Error& e) {
    return report_error(e.kind(), e.what(), kInputError);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), kInputError);
  }
  return kInputError;
}
