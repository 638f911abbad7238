#include "kforce/error.hpp"
#include "kforce/generators.hpp"
#include "kforce/graph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace kforce {
namespace {

ErrorKind kind_of(auto && f)
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorKind::ParseError;
}

TEST(Graph, BuildsSmallGraphs)
{
    Graph k2(2, {{0, 1}});
    EXPECT_EQ(k2.order(), 2);
    EXPECT_EQ(k2.size(), 1);

    Graph p3(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(p3.degree(0), 1);
    EXPECT_EQ(p3.degree(1), 2);
    EXPECT_EQ(p3.degree(2), 1);
    EXPECT_TRUE(p3.adjacent(2, 1));
    EXPECT_FALSE(p3.adjacent(0, 2));
}

TEST(Graph, RejectsInvalidEdges)
{
    EXPECT_EQ(kind_of([] { Graph(3, {{0, 1}, {0, 1}}); }), ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([] { Graph(3, {{0, 1}, {1, 0}}); }), ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([] { Graph(3, {{1, 1}}); }), ErrorKind::SelfLoop);
    EXPECT_EQ(kind_of([] { Graph(3, {{0, 3}}); }), ErrorKind::VertexOutOfRange);
    EXPECT_EQ(kind_of([] { Graph(3, {{-1, 0}}); }), ErrorKind::VertexOutOfRange);
}

TEST(Graph, DegreeSummaries)
{
    auto c5 = degrees(generate(FamilySpec::cycle(5)));
    EXPECT_EQ(c5.delta_min, 2);
    EXPECT_EQ(c5.delta_max, 2);
    auto k5 = degrees(generate(FamilySpec::complete(5)));
    EXPECT_EQ(k5.delta_min, 4);
    EXPECT_EQ(k5.delta_max, 4);
    auto star = degrees(generate(FamilySpec::complete_bipartite(1, 4)));
    EXPECT_EQ(star.delta_min, 1);
    EXPECT_EQ(star.delta_max, 4);
    EXPECT_EQ(star.degree_sequence, (std::vector<int>{1, 1, 1, 1, 4}));

    EXPECT_EQ(kind_of([] { degrees(Graph(0, {})); }), ErrorKind::EmptyGraph);
}

TEST(Graph, Connectivity)
{
    EXPECT_TRUE(is_connected(generate(FamilySpec::path(4))));
    EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    EXPECT_TRUE(is_connected(Graph(1, {})));
    EXPECT_EQ(kind_of([] { is_connected(Graph(0, {})); }), ErrorKind::EmptyGraph);
}

TEST(Graph, KConnectivity)
{
    EXPECT_TRUE(is_k_connected(generate(FamilySpec::cycle(5)), 2));
    EXPECT_FALSE(is_k_connected(generate(FamilySpec::path(4)), 2));
    EXPECT_TRUE(is_k_connected(generate(FamilySpec::complete(4)), 3));
    EXPECT_TRUE(is_k_connected(generate(FamilySpec::petersen()), 3));
    EXPECT_FALSE(is_k_connected(generate(FamilySpec::petersen()), 4));
    EXPECT_EQ(kind_of([] { is_k_connected(generate(FamilySpec::complete(4)), 4); }), ErrorKind::TooFewVertices);
}

TEST(Graph, Components)
{
    Graph g(5, {{0, 3}, {1, 4}});
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 3U);
    EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(comps[1], (std::vector<Vertex>{1, 4}));
    EXPECT_EQ(comps[2], (std::vector<Vertex>{2}));
}

TEST(GraphProperty, SymmetryAndConnectivityLevels)
{
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 9;
        auto g = oracle::random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);

        int degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            degree_sum += g.degree(v);
            for (auto w : g.neighbors(v)) {
                ASSERT_GE(w, 0);
                ASSERT_LT(w, n);
                ASSERT_TRUE(g.adjacent(w, v));
            }
        }
        ASSERT_EQ(2 * g.size(), degree_sum);

        ASSERT_EQ(is_k_connected(g, 1), is_connected(g));
        for (int k = 2; k < n; ++k)
            if (is_k_connected(g, k))
                ASSERT_TRUE(is_k_connected(g, k - 1)) << "n=" << n << " k=" << k;
    }
}

}  // namespace
}  // namespace kforce
