#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "loccoh/ideals.hpp"

namespace loccoh {

enum class GraphKind { Theta, Gamma };

inline const char* to_string(GraphKind k) { return k == GraphKind::Theta ? "theta" : "gamma"; }

// Graph on minimal primes. Vertices are in lexicographic order of their
// variable sets; edges are pairs (i, j) with i < j, sorted.
struct ConnectivityGraph {
  GraphKind kind;
  std::vector<CoordinatePrime> vertices;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::pair{a, b});
  }
};

// Θ: edge {i, j} iff p_i + p_j is not m-primary. Sums of coordinate primes
// are coordinate primes, so that is the case iff their variables miss some x_k.
inline ConnectivityGraph theta_graph(const SquareFreeIdeal& I, const Limits& limits = {}) {
  ConnectivityGraph g{GraphKind::Theta, minimal_primes(I, limits), {}};
  const VarSet all = VarSet::full(I.n());
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if ((g.vertices[a].variables() | g.vertices[b].variables()) != all) g.edges.emplace_back(a, b);
  return g;
}

// Height of the coordinate prime P in S/I. A saturated chain of primes of S/I
// ending at P starts at some minimal prime q ⊆ P and adds one variable per
// step, so the longest one has |P| - min{|q| : q ⊆ P} steps. Returns nullopt
// when P contains no minimal prime (P ∌ I).
inline std::optional<int> height_over(const std::vector<CoordinatePrime>& min_primes, VarSet P) {
  std::optional<int> smallest;
  for (const auto& q : min_primes)
    if (q.variables().subset_of(P) && (!smallest || q.height() < *smallest)) smallest = q.height();
  if (!smallest) return std::nullopt;
  return P.size() - *smallest;
}

// Γ: vertices are the minimal primes of maximal dimension; edge {i, j} iff
// p_i + p_j has height one in S/I.
inline ConnectivityGraph gamma_graph(const SquareFreeIdeal& I, const Limits& limits = {}) {
  auto primes = minimal_primes(I, limits);
  int min_height = I.n();
  for (const auto& p : primes) min_height = std::min(min_height, p.height());
  ConnectivityGraph g{GraphKind::Gamma, {}, {}};
  for (const auto& p : primes)
    if (p.height() == min_height) g.vertices.push_back(p);
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      auto h = height_over(primes, g.vertices[a].variables() | g.vertices[b].variables());
      if (h && *h == 1) g.edges.emplace_back(a, b);
    }
  return g;
}

// A vertex order in which every prefix induces a connected subgraph (BFS
// from vertex 0, neighbours in index order); nullopt if the graph is disconnected.
inline std::optional<std::vector<int>> connected_ordering(const ConnectivityGraph& g) {
  if (g.vertices.empty()) throw InputError("connectivity of a graph without vertices is undefined");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    order.push_back(v);
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        frontier.push(w);
      }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

inline bool is_connected(const ConnectivityGraph& g) { return connected_ordering(g).has_value(); }

// The punctured spectrum of S/I is connected iff Θ is connected.
inline bool punctured_spectrum_connected(const SquareFreeIdeal& I, const Limits& limits = {}) {
  return is_connected(theta_graph(I, limits));
}

inline std::string prime_label(const VariableContext& ctx, const CoordinatePrime& p) {
  std::string s = "P{";
  bool first = true;
  for (const auto& name : ctx.names_of(p.variables())) {
    if (!first) s += ',';
    s += name;
    first = false;
  }
  return s + "}";
}

inline std::string to_dot(const ConnectivityGraph& g, const VariableContext& ctx) {
  std::ostringstream out;
  out << "graph " << to_string(g.kind) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << prime_label(ctx, g.vertices[v]) << "\"];\n";
  for (auto [a, b] : g.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace loccoh
