#include "kforce/error.hpp"
#include "kforce/exact.hpp"
#include "kforce/forcing.hpp"
#include "kforce/generators.hpp"
#include "kforce/greedy.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace kforce {
namespace {

using Sets = std::vector<std::vector<Vertex>>;

TEST(Combinations, BinomialAndUnrank)
{
    EXPECT_EQ(binomial(5, 2), 10U);
    EXPECT_EQ(binomial(30, 15), 155117520U);
    EXPECT_EQ(binomial(4, 5), 0U);
    EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());

    // ranks follow lexicographic order
    EXPECT_EQ(unrank_combination(5, 2, 0), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(unrank_combination(5, 2, 3), (std::vector<Vertex>{0, 4}));
    EXPECT_EQ(unrank_combination(5, 2, 4), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(unrank_combination(5, 2, 9), (std::vector<Vertex>{3, 4}));
}

TEST(Exact, Examples)
{
    auto p6 = exact_f_k(generate(FamilySpec::path(6)), 1);
    EXPECT_EQ(p6.f_k, 1);
    EXPECT_EQ(p6.witness, (std::vector<Vertex>{0}));
    EXPECT_EQ(p6.subsets_tested, 1U);

    auto c8 = exact_f_k(generate(FamilySpec::cycle(8)), 1);
    EXPECT_EQ(c8.f_k, 2);
    EXPECT_EQ(c8.witness, (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(c8.subsets_tested, 8U + 1U);

    auto k5 = exact_f_k(generate(FamilySpec::complete(5)), 2);
    EXPECT_EQ(k5.f_k, 3);
    EXPECT_EQ(k5.witness, (std::vector<Vertex>{0, 1, 2}));

    EXPECT_EQ(exact_f_k(generate(FamilySpec::petersen()), 1).f_k, 5);
    EXPECT_EQ(exact_f_k(generate(FamilySpec::complete(6)), 1).f_k, 5);
    EXPECT_EQ(exact_f_k(generate(FamilySpec::complete_bipartite(1, 4)), 1).f_k, 3);
}

TEST(Exact, AllMinimumSets)
{
    EXPECT_EQ(exact_all_minimum_sets(generate(FamilySpec::path(3)), 1), (Sets{{0}, {2}}));
    EXPECT_EQ(exact_all_minimum_sets(generate(FamilySpec::cycle(4)), 1), (Sets{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    EXPECT_EQ(exact_all_minimum_sets(generate(FamilySpec::complete(3)), 1), (Sets{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Exact, BudgetExceeded)
{
    auto pet = generate(FamilySpec::petersen());
    try {
        exact_f_k(pet, 1, ExactOptions{100, 1});
        FAIL();
    }
    catch (const BudgetExceeded & e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
        // sizes 1 (10 subsets) and 2 (45) are exhausted, size 3 is cut off
        EXPECT_EQ(e.proven_lower_bound(), 3);
        EXPECT_EQ(e.subsets_tested(), 100U);
    }
    EXPECT_THROW(exact_all_minimum_sets(pet, 1, ExactOptions{400, 1}), BudgetExceeded);
    EXPECT_THROW(exact_f_k(Graph(0, {}), 1), Error);
}

TEST(Exact, WorkerCountDoesNotChangeTheAnswer)
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_graph(8 + trial % 7, 0.35, rng);
        const int k = 1 + trial % 2;
        auto serial = exact_f_k(g, k, ExactOptions{default_exact_budget, 1});
        for (int workers : {2, 3, 8}) {
            auto parallel = exact_f_k(g, k, ExactOptions{default_exact_budget, workers});
            ASSERT_EQ(parallel.f_k, serial.f_k);
            ASSERT_EQ(parallel.witness, serial.witness);
            ASSERT_EQ(parallel.subsets_tested, serial.subsets_tested);
        }
        ASSERT_EQ(exact_all_minimum_sets(g, k, ExactOptions{default_exact_budget, 1}),
                exact_all_minimum_sets(g, k, ExactOptions{default_exact_budget, 4}));
    }
}

// Brute force over all 2^n masks agrees; the witness is forcing and is the
// first forcing set in lexicographic order of its size; F is monotone in k.
TEST(ExactProperty, AgreesWithBitmaskOracle)
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 11;
        auto g = oracle::random_graph(n, 0.2 + 0.15 * (trial % 5), rng);
        int previous = n + 1;
        for (int k = 1; k <= 3; ++k) {
            auto r = exact_f_k(g, k, ExactOptions{default_exact_budget, 1});
            ASSERT_EQ(r.f_k, oracle::brute_force_f_k(g, k));
            ASSERT_TRUE(is_k_forcing_set(g, r.witness, k));
            auto all = exact_all_minimum_sets(g, k, ExactOptions{default_exact_budget, 1});
            ASSERT_FALSE(all.empty());
            ASSERT_EQ(all.front(), r.witness);
            ASSERT_LE(r.f_k, previous);
            previous = r.f_k;
            if (is_connected(g))
                ASSERT_LE(r.f_k, static_cast<int>(greedy_k_forcing_set(g, k).forcing_set.size()));
        }
    }
}

}  // namespace
}  // namespace kforce
