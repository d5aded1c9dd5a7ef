#include <doctest.h>

#include <random>
#include <set>

#include "bagcd/error.hpp"
#include "bagcd/matching.hpp"
#include "oracles.hpp"

using namespace bagcd;

namespace {

RootGraph graph_from_edges(int left, int right, const std::vector<std::pair<int, int>>& edges) {
  RootGraph g;
  g.left.assign(static_cast<std::size_t>(left), RootCluster{0.0, 1});
  g.right.assign(static_cast<std::size_t>(right), RootCluster{0.0, 1});
  for (const auto& [u, v] : edges) g.edges.push_back({u, v, 1});
  return g;
}

void check_valid(const RootGraph& g, const Matching& m) {
  std::set<int> lefts;
  std::set<int> rights;
  std::set<std::pair<int, int>> edges;
  for (const RootEdge& e : g.edges) edges.insert({e.left, e.right});
  for (const MatchedPair& p : m.pairs) {
    CHECK(lefts.insert(p.left).second);
    CHECK(rights.insert(p.right).second);
    CHECK(edges.count({p.left, p.right}) == 1);
  }
}

}  // namespace

TEST_CASE("worked example root graph and matching") {
  const std::vector<RootCluster> p{{1.036, 3}, {5.3, 1}};
  const std::vector<RootCluster> q{{3.19, 1}, {4.99, 1}, {1.12, 1}};
  const RootGraph g = build_root_graph(p, q, 0.7, 2.0);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].left == 0);
  CHECK(g.edges[0].right == 2);
  CHECK(g.edges[0].capacity == 1);
  CHECK(g.edges[1].left == 1);
  CHECK(g.edges[1].right == 1);
  CHECK(g.edges[1].capacity == 1);

  const Matching m = hopcroft_karp(g);
  REQUIRE(m.size() == 2);
  CHECK(m.pairs[0].left == 0);
  CHECK(m.pairs[0].right == 2);
  CHECK(m.pairs[1].left == 1);
  CHECK(m.pairs[1].right == 1);
}

TEST_CASE("root graph edge cases") {
  const std::vector<RootCluster> a{{0.0, 1}, {1.0, 2}};
  const std::vector<RootCluster> b{{0.5, 1}};
  CHECK(build_root_graph(a, b, 1e-6).edges.empty());

  const std::vector<RootCluster> one{{0.25, 3}};
  const std::vector<RootCluster> other{{0.25, 2}};
  const RootGraph g = build_root_graph(one, other, 0.1);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].capacity == 2);

  try {
    build_root_graph({}, b, 1.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::nothing_to_match);
  }
  CHECK_THROWS_AS(build_root_graph(a, b, 0.0), Error);
  CHECK_THROWS_AS(build_root_graph(a, b, 1.0, 0.0), Error);
}

TEST_CASE("a factor of one reproduces the sigma threshold") {
  const std::vector<RootCluster> a{{0.0, 1}};
  const std::vector<RootCluster> b{{0.15, 1}};
  CHECK(build_root_graph(a, b, 0.1, 1.0).edges.empty());
  CHECK(build_root_graph(a, b, 0.1, 2.0).edges.size() == 1);
}

TEST_CASE("Hopcroft-Karp small graphs") {
  CHECK(hopcroft_karp(graph_from_edges(2, 2, {})).empty());

  const Matching single = hopcroft_karp(graph_from_edges(1, 1, {{0, 0}}));
  REQUIRE(single.size() == 1);
  CHECK(single.pairs[0].left == 0);
  CHECK(single.pairs[0].right == 0);

  // The only size-2 matching is {(u1, v2), (u2, v1)}.
  const Matching m = hopcroft_karp(graph_from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}}));
  REQUIRE(m.size() == 2);
  CHECK(m.pairs[0].left == 0);
  CHECK(m.pairs[0].right == 1);
  CHECK(m.pairs[1].left == 1);
  CHECK(m.pairs[1].right == 0);
  CHECK(oracle::brute_force_matching(2, 2, {{0, 0}, {0, 1}, {1, 0}}) == 2);
}

TEST_CASE("Hopcroft-Karp agrees with brute force on random graphs") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    const int left = 1 + static_cast<int>(rng() % 8);
    const int right = 1 + static_cast<int>(rng() % 8);
    const int edge_count = static_cast<int>(rng() % 21);
    std::set<std::pair<int, int>> unique;
    for (int k = 0; k < edge_count; ++k) {
      unique.insert({static_cast<int>(rng() % static_cast<unsigned>(left)),
                     static_cast<int>(rng() % static_cast<unsigned>(right))});
    }
    const std::vector<std::pair<int, int>> edges(unique.begin(), unique.end());
    const RootGraph g = graph_from_edges(left, right, edges);
    const Matching m = hopcroft_karp(g);
    check_valid(g, m);
    CHECK(static_cast<int>(m.size()) == oracle::brute_force_matching(left, right, edges));
  }
}

TEST_CASE("swapping the sides transposes the edge set") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RootCluster> a(1 + rng() % 6);
    std::vector<RootCluster> b(1 + rng() % 6);
    for (auto& c : a) c = {Complex(u(rng), u(rng)), 1 + static_cast<int>(rng() % 3)};
    for (auto& c : b) c = {Complex(u(rng), u(rng)), 1 + static_cast<int>(rng() % 3)};
    const RootGraph ab = build_root_graph(a, b, 0.2);
    const RootGraph ba = build_root_graph(b, a, 0.2);
    std::set<std::tuple<int, int, int>> forward;
    std::set<std::tuple<int, int, int>> backward;
    for (const auto& e : ab.edges) forward.insert({e.left, e.right, e.capacity});
    for (const auto& e : ba.edges) backward.insert({e.right, e.left, e.capacity});
    CHECK(forward == backward);
  }
}

TEST_CASE("root semimetric") {
  const std::vector<Complex> r{1.0, 4.0};
  const std::vector<std::pair<int, int>> identity{{0, 0}, {1, 1}};
  CHECK(root_semimetric(r, r, identity) == 0.0);

  const std::vector<Complex> a{1.0};
  const std::vector<Complex> b{1.5};
  const std::vector<std::pair<int, int>> one{{0, 0}};
  CHECK(root_semimetric(a, b, one) == doctest::Approx(0.5));

  const std::vector<Complex> t{1.1, 3.8};
  CHECK(root_semimetric(r, t, identity) == doctest::Approx(std::sqrt(0.01 + 0.04)));

  const std::vector<std::pair<int, int>> repeated{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(root_semimetric(r, t, repeated), Error);
  const std::vector<std::pair<int, int>> out_of_range{{0, 2}};
  CHECK_THROWS_AS(root_semimetric(r, t, out_of_range), Error);
}

TEST_CASE("root semimetric symmetry and permutation bound") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 5;
    const std::size_t n = m + rng() % 2;
    std::vector<Complex> r(m);
    std::vector<Complex> t(n);
    for (auto& z : r) z = Complex(u(rng), u(rng));
    for (auto& z : t) z = Complex(u(rng), u(rng));

    const auto assignment = bottleneck_assignment(r, t);
    REQUIRE(assignment.size() == m);
    const double matched = root_semimetric(r, t, assignment);
    CHECK(oracle::min_over_permutations(r, t) <= matched + 1e-12);

    std::vector<std::pair<int, int>> inverse;
    for (const auto& [i, j] : assignment) inverse.emplace_back(j, i);
    CHECK(root_semimetric(t, r, inverse) == doctest::Approx(matched));

    double worst = 0.0;
    for (const auto& [i, j] : assignment) {
      worst = std::max(worst, std::abs(r[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)]));
    }
    CHECK(worst == doctest::Approx(oracle::min_bottleneck(r, t)));
  }
}

TEST_CASE("bottleneck assignment handles a longer first list") {
  const std::vector<Complex> r{0.0, 1.0, 2.0};
  const std::vector<Complex> t{1.05};
  const auto a = bottleneck_assignment(r, t);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == std::pair<int, int>{1, 0});
  CHECK(bottleneck_assignment({}, t).empty());
}
