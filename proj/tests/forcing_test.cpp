#include "kforce/error.hpp"
#include "kforce/forcing.hpp"
#include "kforce/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace kforce {
namespace {

std::set<int> as_set(const VertexSet & s)
{
    auto m = s.members();
    return {m.begin(), m.end()};
}

TEST(Closure, PathChain)
{
    auto p3 = generate(FamilySpec::path(3));
    auto trace = closure(p3, std::vector<Vertex>{0}, 1);
    EXPECT_TRUE(trace.final.is_full());
    EXPECT_EQ(trace.rounds, 2);
    ASSERT_EQ(trace.events.size(), 2U);
    EXPECT_EQ(trace.events[0], (ForcingEvent{1, 0, {1}}));
    EXPECT_EQ(trace.events[1], (ForcingEvent{2, 1, {2}}));
    EXPECT_EQ(format_trace(trace), "1 0 -> 1\n2 1 -> 2\n");
}

TEST(Closure, StallsImmediatelyOnCycle)
{
    auto trace = closure(generate(FamilySpec::cycle(4)), std::vector<Vertex>{0}, 1);
    EXPECT_EQ(trace.final.members(), (std::vector<Vertex>{0}));
    EXPECT_TRUE(trace.events.empty());
    EXPECT_EQ(trace.rounds, 0);
}

TEST(Closure, SimultaneousForcersAreAllRecorded)
{
    auto trace = closure(generate(FamilySpec::complete(4)), std::vector<Vertex>{0, 1, 2}, 1);
    EXPECT_TRUE(trace.final.is_full());
    EXPECT_EQ(trace.rounds, 1);
    ASSERT_EQ(trace.events.size(), 3U);
    for (Vertex v = 0; v < 3; ++v)
        EXPECT_EQ(trace.events[v], (ForcingEvent{1, v, {3}}));
}

TEST(Closure, RejectsOutOfRangeSeed)
{
    try {
        closure(generate(FamilySpec::path(3)), std::vector<Vertex>{3}, 1);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::VertexOutOfRange);
    }
    EXPECT_THROW(closure(generate(FamilySpec::path(3)), std::vector<Vertex>{0}, 0), Error);
}

TEST(ForcingSet, Examples)
{
    EXPECT_TRUE(is_k_forcing_set(generate(FamilySpec::path(5)), std::vector<Vertex>{0}, 1));
    EXPECT_TRUE(is_k_forcing_set(generate(FamilySpec::path(5)), std::vector<Vertex>{4}, 1));
    EXPECT_FALSE(is_k_forcing_set(generate(FamilySpec::cycle(6)), std::vector<Vertex>{0}, 1));
    EXPECT_TRUE(is_k_forcing_set(generate(FamilySpec::cycle(6)), std::vector<Vertex>{0, 1}, 1));
}

TEST(ForcingSet, WholeVertexSetAlwaysForces)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(1 + trial % 12, 0.4, rng);
        ASSERT_TRUE(is_k_forcing_set(g, VertexSet::full(g.order()), 1));
        ASSERT_FALSE(is_k_forcing_set(g, VertexSet(g.order()), 1));
    }
}

TEST(StalledFrontier, Examples)
{
    auto c4 = generate(FamilySpec::cycle(4));
    EXPECT_EQ(stalled_frontier(c4, VertexSet(4, {0}), 1), (std::vector<StalledVertex>{{0, 2}}));
    EXPECT_TRUE(stalled_frontier(generate(FamilySpec::path(3)), VertexSet::full(3), 1).empty());
    auto star = generate(FamilySpec::complete_bipartite(1, 4));
    EXPECT_EQ(stalled_frontier(star, VertexSet(5, {0}), 1), (std::vector<StalledVertex>{{0, 4}}));

    try {
        stalled_frontier(generate(FamilySpec::path(3)), VertexSet(3, {0}), 1);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAFixedPoint);
    }
}

// Random graphs, random seeds: the round-synchronous trace, the worklist
// closure and a random-order asynchronous oracle agree, and the trace
// replays.
TEST(ClosureProperty, ScheduleIndependenceAndReplay)
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 12;
        auto g = oracle::random_graph(n, 0.15 + 0.1 * (trial % 6), rng);
        const auto adj = oracle::adjacency_of(g);
        const int k = 1 + trial % 3;
        VertexSet seed(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0)
                seed.insert(v);

        auto trace = closure(g, seed, k);
        ASSERT_EQ(closed_set(g, seed, k), trace.final);
        ASSERT_EQ(replay(g, trace, k), trace.final);
        auto init = as_set(seed);
        ASSERT_EQ(as_set(trace.final), oracle::async_closure(adj, init, k, rng));
        ASSERT_EQ(as_set(trace.final), oracle::async_closure(adj, init, k, rng));

        // fixed point: nothing left to fire, idempotent
        ASSERT_NO_THROW(stalled_frontier(g, trace.final, k));
        ASSERT_EQ(closed_set(g, trace.final, k), trace.final);
    }
}

TEST(ClosureProperty, Monotonicity)
{
    std::mt19937 rng(999);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 11;
        auto g = oracle::random_graph(n, 0.3, rng);
        const int k = 1 + trial % 3;
        VertexSet small(n), large(n);
        for (int v = 0; v < n; ++v) {
            auto r = rng() % 4;
            if (r == 0)
                small.insert(v);
            if (r <= 1)
                large.insert(v);
        }
        ASSERT_TRUE(small.is_subset_of(large));
        ASSERT_TRUE(closed_set(g, small, k).is_subset_of(closed_set(g, large, k)));
        ASSERT_TRUE(closed_set(g, small, k).is_subset_of(closed_set(g, small, k + 1)));
    }
}

}  // namespace
}  // namespace kforce
