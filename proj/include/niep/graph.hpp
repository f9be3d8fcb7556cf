#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "niep/deciders.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Simple undirected graph on vertices 0..vertex_count-1.
struct UndirectedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Throws InvalidArgument on out-of-range endpoints, loops or repeated edges.
  void validate() const;
  std::vector<std::vector<std::size_t>> adjacency() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
};

UndirectedGraph path_graph(std::size_t n);
UndirectedGraph star_graph(std::size_t leaves);
UndirectedGraph cycle_graph(std::size_t n);

struct Bipartition {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  /// When the graph is not bipartite: an odd cycle, listed in walk order.
  std::vector<std::size_t> odd_cycle;

  bool bipartite() const { return odd_cycle.empty(); }
};

/// Two-colouring by breadth-first search, one component at a time.
Bipartition bipartition(const UndirectedGraph& g);

/// Maximum matching size by augmenting paths. Throws NotBipartite.
std::size_t matching_number(const UndirectedGraph& g);

/// Symmetric nonnegative matrix subordinate to g with this real spectrum:
/// lambda_i + lambda_{n-i+1} >= 0 for i <= m and lambda_i >= 0 for
/// m < i <= n - m, where m is the matching number.
Decision decide_bipartite_sniep(const UndirectedGraph& g, std::span<const double> values,
                                double tol = kDefaultTolerance);

}  // namespace niep
