#include "bagcd/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "bagcd/error.hpp"

namespace bagcd {

RootGraph build_root_graph(std::span<const RootCluster> left, std::span<const RootCluster> right,
                           double sigma, double edge_factor) {
  if (left.empty() || right.empty()) {
    throw Error(ErrorCode::nothing_to_match, "nothing to match: a cluster list is empty");
  }
  if (!(sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "sigma must be > 0");
  if (!(edge_factor > 0.0)) throw Error(ErrorCode::invalid_argument, "edge factor must be > 0");

  RootGraph graph{{left.begin(), left.end()}, {right.begin(), right.end()}, {}, edge_factor * sigma};
  for (int i = 0; i < static_cast<int>(left.size()); ++i) {
    for (int j = 0; j < static_cast<int>(right.size()); ++j) {
      const RootCluster& l = left[static_cast<std::size_t>(i)];
      const RootCluster& r = right[static_cast<std::size_t>(j)];
      if (std::abs(l.center - r.center) <= graph.threshold) {
        graph.edges.push_back({i, j, std::min(l.multiplicity, r.multiplicity)});
      }
    }
  }
  return graph;
}

namespace {

// Phase structure: a BFS from all free left vertices builds layers, then
// DFS finds a maximal set of vertex-disjoint shortest augmenting paths.
class HopcroftKarp {
 public:
  HopcroftKarp(int left_count, int right_count, const std::vector<std::vector<int>>& adjacency)
      : adjacency_(adjacency),
        match_left_(static_cast<std::size_t>(left_count), -1),
        match_right_(static_cast<std::size_t>(right_count), -1),
        layer_(static_cast<std::size_t>(left_count), 0) {}

  std::vector<int> run() {
    while (build_layers()) {
      next_edge_.assign(match_left_.size(), 0);
      for (int u = 0; u < static_cast<int>(match_left_.size()); ++u) {
        if (match_left_[static_cast<std::size_t>(u)] == -1) augment(u);
      }
    }
    return match_left_;
  }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  bool build_layers() {
    std::queue<int> frontier;
    for (std::size_t u = 0; u < match_left_.size(); ++u) {
      if (match_left_[u] == -1) {
        layer_[u] = 0;
        frontier.push(static_cast<int>(u));
      } else {
        layer_[u] = kUnreached;
      }
    }
    bool found_free = false;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : adjacency_[static_cast<std::size_t>(u)]) {
        const int w = match_right_[static_cast<std::size_t>(v)];
        if (w == -1) {
          found_free = true;
        } else if (layer_[static_cast<std::size_t>(w)] == kUnreached) {
          layer_[static_cast<std::size_t>(w)] = layer_[static_cast<std::size_t>(u)] + 1;
          frontier.push(w);
        }
      }
    }
    return found_free;
  }

  bool augment(int u) {
    const auto& neighbours = adjacency_[static_cast<std::size_t>(u)];
    for (std::size_t& k = next_edge_[static_cast<std::size_t>(u)]; k < neighbours.size(); ++k) {
      const int v = neighbours[k];
      const int w = match_right_[static_cast<std::size_t>(v)];
      if (w == -1 || (layer_[static_cast<std::size_t>(w)] == layer_[static_cast<std::size_t>(u)] + 1 &&
                      augment(w))) {
        match_left_[static_cast<std::size_t>(u)] = v;
        match_right_[static_cast<std::size_t>(v)] = u;
        ++k;
        return true;
      }
    }
    layer_[static_cast<std::size_t>(u)] = kUnreached;
    return false;
  }

  const std::vector<std::vector<int>>& adjacency_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> layer_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace

std::vector<int> maximum_bipartite_matching(int left_count, int right_count,
                                            const std::vector<std::vector<int>>& adjacency) {
  if (static_cast<int>(adjacency.size()) != left_count) {
    throw Error(ErrorCode::invalid_argument, "adjacency must have one list per left vertex");
  }
  for (const auto& list : adjacency) {
    for (int v : list) {
      if (v < 0 || v >= right_count) throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    }
  }
  return HopcroftKarp(left_count, right_count, adjacency).run();
}

Matching hopcroft_karp(const RootGraph& graph) {
  const int left_count = static_cast<int>(graph.left.size());
  const int right_count = static_cast<int>(graph.right.size());
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(left_count));
  std::vector<std::vector<int>> capacity(static_cast<std::size_t>(left_count),
                                         std::vector<int>(static_cast<std::size_t>(right_count), 0));
  for (const RootEdge& e : graph.edges) {
    adjacency[static_cast<std::size_t>(e.left)].push_back(e.right);
    capacity[static_cast<std::size_t>(e.left)][static_cast<std::size_t>(e.right)] = e.capacity;
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  const std::vector<int> mate = maximum_bipartite_matching(left_count, right_count, adjacency);
  Matching matching;
  for (int i = 0; i < left_count; ++i) {
    const int j = mate[static_cast<std::size_t>(i)];
    if (j >= 0) {
      matching.pairs.push_back(
          {i, j, capacity[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    }
  }
  return matching;
}

double root_semimetric(std::span<const Complex> r_roots, std::span<const Complex> t_roots,
                       std::span<const std::pair<int, int>> assignment, const NormSpec& spec) {
  std::vector<bool> used_r(r_roots.size(), false);
  std::vector<bool> used_t(t_roots.size(), false);
  std::vector<Complex> diff;
  diff.reserve(assignment.size());
  for (const auto& [i, j] : assignment) {
    if (i < 0 || j < 0 || i >= static_cast<int>(r_roots.size()) || j >= static_cast<int>(t_roots.size())) {
      throw Error(ErrorCode::invalid_argument, "assignment index out of range");
    }
    if (used_r[static_cast<std::size_t>(i)] || used_t[static_cast<std::size_t>(j)]) {
      throw Error(ErrorCode::invalid_argument, "assignment repeats a root index");
    }
    used_r[static_cast<std::size_t>(i)] = true;
    used_t[static_cast<std::size_t>(j)] = true;
    diff.push_back(r_roots[static_cast<std::size_t>(i)] - t_roots[static_cast<std::size_t>(j)]);
  }
  return weighted_norm(std::span<const Complex>(diff), spec);
}

std::vector<std::pair<int, int>> bottleneck_assignment(std::span<const Complex> r_roots,
                                                       std::span<const Complex> t_roots) {
  const bool swapped = r_roots.size() > t_roots.size();
  const auto shorter = swapped ? t_roots : r_roots;
  const auto longer = swapped ? r_roots : t_roots;
  const int m = static_cast<int>(shorter.size());
  const int n = static_cast<int>(longer.size());
  if (m == 0) return {};

  std::vector<double> candidates;
  candidates.reserve(static_cast<std::size_t>(m * n));
  for (const Complex& a : shorter) {
    for (const Complex& b : longer) candidates.push_back(std::abs(a - b));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto match_within = [&](double threshold) {
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (std::abs(shorter[static_cast<std::size_t>(i)] - longer[static_cast<std::size_t>(j)]) <= threshold) {
          adjacency[static_cast<std::size_t>(i)].push_back(j);
        }
      }
    }
    return maximum_bipartite_matching(m, n, adjacency);
  };
  auto is_complete = [](const std::vector<int>& mate) {
    return std::none_of(mate.begin(), mate.end(), [](int j) { return j < 0; });
  };

  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // the largest distance admits every edge
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (is_complete(match_within(candidates[mid]))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::vector<int> mate = match_within(candidates[lo]);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i) {
    const int j = mate[static_cast<std::size_t>(i)];
    out.emplace_back(swapped ? j : i, swapped ? i : j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bagcd
