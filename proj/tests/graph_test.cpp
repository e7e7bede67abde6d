#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "tricount/generators.hpp"
#include "tricount/graph.hpp"
#include "tricount/intersect.hpp"
#include "tricount/oracle.hpp"

namespace tricount {
namespace {

// Full scan of every Graph invariant, written without the Graph helpers.
void ExpectWellFormed(const Graph& g) {
  const auto off = g.row_offsets();
  const auto idx = g.column_indices();
  ASSERT_EQ(off.size(), g.num_vertices() + 1);
  EXPECT_EQ(off.front(), 0u);
  EXPECT_EQ(off.back(), idx.size());
  EXPECT_EQ(g.num_directed_edges() % 2, 0u);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (auto k = off[v]; k < off[v + 1]; ++k) {
      EXPECT_NE(idx[k], v);
      if (k > off[v]) {
        EXPECT_LT(idx[k - 1], idx[k]);
      }
      const VertexId w = idx[k];
      bool back = false;
      for (auto t = off[w]; t < off[w + 1]; ++t) back = back || idx[t] == v;
      EXPECT_TRUE(back) << v << "->" << w;
    }
  }
}

TEST(BuildGraph, DropsSelfLoopsAndDuplicates) {
  const Graph g = build_graph({{0, 1}, {1, 0}, {2, 2}}, 3);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_directed_edges(), 2u);
  EXPECT_EQ(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()), std::vector<VertexId>{1});
  EXPECT_EQ(std::vector<VertexId>(g.neighbors(1).begin(), g.neighbors(1).end()), std::vector<VertexId>{0});
  EXPECT_TRUE(g.neighbors(2).empty());
  ExpectWellFormed(g);
}

TEST(BuildGraph, SampleGraphDegrees) {
  const Graph g = sample_graph();
  EXPECT_EQ(g.num_directed_edges(), 20u);
  std::vector<VertexId> degrees;
  for (VertexId v : g.vertices()) degrees.push_back(g.degree(v));
  EXPECT_EQ(degrees, (std::vector<VertexId>{3, 3, 3, 3, 3, 4, 1}));
  ExpectWellFormed(g);
}

TEST(BuildGraph, EmptyEdgeList) {
  const Graph g = build_graph(std::vector<Edge>{}, 5);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_directed_edges(), 0u);
}

TEST(BuildGraph, OutOfRangeNamesThePair) {
  try {
    build_graph({{0, 1}, {2, 7}}, 3);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(2, 7)"), std::string::npos) << e.what();
  }
  const std::vector<std::pair<int, int>> negative{{0, -1}};
  EXPECT_THROW(build_graph(negative, 3), InputError);
}

TEST(BuildGraph, RandomInputsAreWellFormed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SplitMix64 rng(seed);
    const std::uint64_t n = 1 + rng.below(40);
    std::vector<Edge> raw;
    for (int k = 0; k < 120; ++k)
      raw.emplace_back(static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)));
    const Graph g = build_graph(raw, n);
    ExpectWellFormed(g);
    for (auto [u, v] : raw)
      if (u != v) {
        EXPECT_TRUE(g.has_edge(u, v) && g.has_edge(v, u));
      }
  }
}

TEST(Graph, CheckedConstructorRejectsBadCsr) {
  EXPECT_NO_THROW(Graph({0, 1, 2}, {1, 0}));
  EXPECT_THROW(Graph({0, 1, 1}, {1}), InputError);        // asymmetric
  EXPECT_THROW(Graph({0, 1, 2}, {0, 0}), InputError);     // self-loop
  EXPECT_THROW(Graph({0, 2, 3, 4}, {2, 1, 0, 0}), InputError);  // unsorted slice
  EXPECT_THROW(Graph({0, 1, 2}, {5, 0}), InputError);     // out of range
  EXPECT_THROW(Graph({1, 2}, {0}), InputError);
}

// Independent SSD oracle: count occurrences of each id in the index array.
std::uint64_t SsdByOccurrence(const Graph& g) {
  std::vector<std::uint64_t> occurrences(g.num_vertices(), 0);
  for (VertexId w : g.column_indices()) ++occurrences[w];
  std::uint64_t s = 0;
  for (auto d : occurrences) s += d * d;
  return s;
}

TEST(DegreeStats, SampleGraph) {
  const Graph g = sample_graph();
  const DegreeStats s = degree_stats(g);
  EXPECT_EQ(s.degrees, (std::vector<VertexId>{3, 3, 3, 3, 3, 4, 1}));
  EXPECT_EQ(s.max_degree, 4u);
  EXPECT_EQ(SsdByOccurrence(g), 62u);
  EXPECT_EQ(s.ssd, 62u);
}

TEST(DegreeStats, TriangleAndStar) {
  EXPECT_EQ(degree_stats(complete_graph(3)).ssd, 12u);
  const Graph star = star_graph(4);
  EXPECT_EQ(SsdByOccurrence(star), 20u);
  EXPECT_EQ(degree_stats(star).ssd, 20u);
}

TEST(DegreeStats, SsdBoundsDirectedEdges) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gnp_graph(60, 0.05, seed);
    const DegreeStats s = degree_stats(g);
    EXPECT_EQ(s.ssd, SsdByOccurrence(g));
    EXPECT_GE(s.ssd, g.num_directed_edges());
    if (s.max_degree <= 1) {
      EXPECT_EQ(s.ssd, g.num_directed_edges());
    }
  }
}

TEST(DegreeOrder, SortsByDegreeThenId) {
  const std::vector<VertexId> degrees{3, 1, 2};
  const Permutation p = degree_order_permutation(degrees);
  EXPECT_EQ(p.inverse, (std::vector<VertexId>{1, 2, 0}));
  EXPECT_EQ(p.forward, (std::vector<VertexId>{2, 0, 1}));
  EXPECT_TRUE(p.is_valid());

  const Graph g = build_graph({{0, 2}, {0, 3}, {0, 4}, {2, 4}}, 5);  // degrees [3,0,2,1,2]
  EXPECT_EQ(degree_order_permutation(g).inverse, (std::vector<VertexId>{1, 3, 2, 4, 0}));
}

TEST(DegreeOrder, EqualDegreesGiveIdentity) {
  EXPECT_EQ(degree_order_permutation(complete_graph(6)), Permutation::identity(6));
}

TEST(DegreeOrder, SampleGraphMatchesStableSortOracle) {
  const Graph g = sample_graph();
  std::vector<std::pair<VertexId, VertexId>> keyed;  // (degree, id)
  for (VertexId v : g.vertices()) keyed.emplace_back(g.degree(v), v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<VertexId> expected;
  for (auto [d, v] : keyed) expected.push_back(v);
  EXPECT_EQ(expected, (std::vector<VertexId>{6, 0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(degree_order_permutation(g).inverse, expected);
}

TEST(ApplyPermutation, IdentityIsNoOp) {
  const Graph g = sample_graph();
  EXPECT_EQ(apply_permutation(g, Permutation::identity(g.num_vertices())), g);
}

TEST(ApplyPermutation, CompleteGraphIsFixed) {
  const Graph k3 = complete_graph(3);
  const Permutation p = Permutation::from_order({2, 0, 1});
  EXPECT_EQ(apply_permutation(k3, p), k3);
}

TEST(ApplyPermutation, DegreeOrderMakesDegreesNonDecreasing) {
  const Graph g = sample_graph();
  const Graph h = apply_permutation(g, degree_order_permutation(g));
  for (VertexId v = 1; v < h.num_vertices(); ++v) EXPECT_LE(h.degree(v - 1), h.degree(v));
  ExpectWellFormed(h);
}

TEST(ApplyPermutation, RejectsBadPermutations) {
  const Graph g = sample_graph();
  EXPECT_THROW(apply_permutation(g, Permutation::identity(3)), InputError);
  Permutation broken = Permutation::identity(7);
  broken.forward[0] = 1;
  EXPECT_THROW(apply_permutation(g, broken), InputError);
}

TEST(ApplyPermutation, PreservesSsdEdgesAndTriangles) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = gnp_graph(50, 0.15, seed);
    SplitMix64 rng(seed + 1000);
    std::vector<VertexId> order(g.num_vertices());
    std::iota(order.begin(), order.end(), VertexId{0});
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    const Permutation p = Permutation::from_order(order);
    const Graph h = apply_permutation(g, p);
    ExpectWellFormed(h);
    EXPECT_EQ(h.num_directed_edges(), g.num_directed_edges());
    EXPECT_EQ(degree_stats(h).ssd, degree_stats(g).ssd);
    for (auto [u, v] : g.undirected_edges()) EXPECT_TRUE(h.has_edge(p.forward[u], p.forward[v]));
    EXPECT_EQ(brute_force_count(h).count, brute_force_count(g).count);
    EXPECT_EQ(count_triangles_intersect(h, {.threads = 1}).count, count_triangles_intersect(g, {.threads = 1}).count);
  }
}

}  // namespace
}  // namespace tricount
