#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bagcd/bernstein.hpp"

namespace bagcd {

struct RootEdge {
  int left = 0;
  int right = 0;
  int capacity = 1;  // min of the two endpoint multiplicities
};

// Bipartite graph over the clusters of P (left) and Q (right). An edge joins
// clusters whose centers are within `threshold`.
struct RootGraph {
  std::vector<RootCluster> left;
  std::vector<RootCluster> right;
  std::vector<RootEdge> edges;
  double threshold = 0.0;
};

struct MatchedPair {
  int left = 0;
  int right = 0;
  int multiplicity = 1;  // t_s, the edge capacity
};

struct Matching {
  std::vector<MatchedPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

RootGraph build_root_graph(std::span<const RootCluster> left, std::span<const RootCluster> right,
                           double sigma, double edge_factor = 2.0);

/// Maximum-cardinality matching on an adjacency-list bipartite graph.
/// Returns, for each left vertex, its matched right vertex or -1.
/// Adjacency lists are scanned in the order given, which fixes tie-breaking.
std::vector<int> maximum_bipartite_matching(int left_count, int right_count,
                                            const std::vector<std::vector<int>>& adjacency);

/// Hopcroft-Karp on a root graph. Clusters are single nodes; each matched
/// pair carries its edge capacity as the common multiplicity.
Matching hopcroft_karp(const RootGraph& graph);

/// Weighted norm of [r_k - t_match(k)] over the assigned pairs.
/// Unassigned roots do not contribute.
double root_semimetric(std::span<const Complex> r_roots, std::span<const Complex> t_roots,
                       std::span<const std::pair<int, int>> assignment, const NormSpec& spec = {});

/// Assignment of every root of the shorter list to a distinct root of the
/// longer one that minimises the largest paired distance. Found by
/// bisecting over candidate thresholds with maximum matching.
std::vector<std::pair<int, int>> bottleneck_assignment(std::span<const Complex> r_roots,
                                                       std::span<const Complex> t_roots);

}  // namespace bagcd
