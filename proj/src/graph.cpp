#include "niep/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "niep/error.hpp"

namespace niep {

void UndirectedGraph::validate() const {
  if (vertex_count == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidArgument, "loops are not allowed");
    if (!seen.insert(std::minmax(u, v)).second)
      throw Error(ErrorCode::InvalidArgument,
                  "repeated edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
  }
}

std::vector<std::vector<std::size_t>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

UndirectedGraph path_graph(std::size_t n) {
  UndirectedGraph g{n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

UndirectedGraph star_graph(std::size_t leaves) {
  UndirectedGraph g{leaves + 1, {}};
  for (std::size_t i = 1; i <= leaves; ++i) g.edges.emplace_back(0, i);
  return g;
}

UndirectedGraph cycle_graph(std::size_t n) {
  auto g = path_graph(n);
  if (n >= 3) g.edges.emplace_back(n - 1, 0);
  return g;
}

Bipartition bipartition(const UndirectedGraph& g) {
  g.validate();
  const auto adj = g.adjacency();
  const std::size_t none = g.vertex_count;
  std::vector<int> colour(g.vertex_count, -1);
  std::vector<std::size_t> parent(g.vertex_count, none);
  Bipartition out;
  for (std::size_t root = 0; root < g.vertex_count; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          parent[v] = u;
          q.push(v);
        } else if (colour[v] == colour[u]) {
          // Both tree paths reach the root; splice them at the lowest common ancestor.
          std::vector<std::size_t> pu{u}, pv{v};
          while (parent[pu.back()] != none) pu.push_back(parent[pu.back()]);
          while (parent[pv.back()] != none) pv.push_back(parent[pv.back()]);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          out.odd_cycle = pu;
          for (std::size_t i = pv.size() - 1; i-- > 0;) out.odd_cycle.push_back(pv[i]);
          return out;
        }
      }
    }
  }
  for (std::size_t v = 0; v < g.vertex_count; ++v) (colour[v] == 0 ? out.left : out.right).push_back(v);
  return out;
}

namespace {

std::string cycle_text(const std::vector<std::size_t>& c) {
  std::string s;
  for (std::size_t v : c) s += (s.empty() ? "" : "-") + std::to_string(v + 1);
  return s;
}

}  // namespace

std::size_t matching_number(const UndirectedGraph& g) {
  const auto parts = bipartition(g);
  if (!parts.bipartite()) throw Error(ErrorCode::NotBipartite, "odd cycle " + cycle_text(parts.odd_cycle));
  const auto adj = g.adjacency();
  const std::size_t none = g.vertex_count;
  std::vector<std::size_t> mate(g.vertex_count, none);  // right vertex -> left partner
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (mate[v] == none || augment(mate[v])) {
        mate[v] = u;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (std::size_t u : parts.left) {
    visited.assign(g.vertex_count, 0);
    if (augment(u)) ++size;
  }
  return size;
}

Decision decide_bipartite_sniep(const UndirectedGraph& g, std::span<const double> values, double tol) {
  if (values.size() != g.vertex_count)
    throw Error(ErrorCode::DimensionMismatch, std::to_string(values.size()) + " values for a graph on " +
                                                  std::to_string(g.vertex_count) + " vertices");
  const std::size_t m = matching_number(g);
  std::vector<double> l(values.begin(), values.end());
  std::sort(l.begin(), l.end(), std::greater<>());
  const std::size_t n = l.size();
  double unit = 1.0;
  for (double x : l) unit = std::max(unit, std::abs(x));
  const double slack = tol * unit;
  for (std::size_t i = 0; i < m; ++i)
    if (l[i] + l[n - 1 - i] < -slack)
      return {Outcome::NotRealizable, "pair_sum",
              Witness{{static_cast<long long>(i + 1), static_cast<long long>(n - i)}, 0.0, l[i] + l[n - 1 - i]},
              {}};
  for (std::size_t i = m; i < n - m; ++i)
    if (l[i] < -slack)
      return {Outcome::NotRealizable, "middle_value", Witness{{static_cast<long long>(i + 1)}, 0.0, l[i]}, {}};
  return {Outcome::Realizable, "bipartite_clauses", std::nullopt, {"matching_number=" + std::to_string(m)}};
}

}  // namespace niep
