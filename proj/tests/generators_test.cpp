#include "kforce/error.hpp"
#include "kforce/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace kforce {
namespace {

TEST(Generators, Families)
{
    auto c5 = generate(FamilySpec::cycle(5));
    EXPECT_EQ(c5.order(), 5);
    EXPECT_TRUE(is_regular(c5, 2));
    EXPECT_TRUE(is_connected(c5));

    auto k5 = generate(FamilySpec::complete(5));
    EXPECT_EQ(k5.size(), 10);

    auto circ = generate(FamilySpec::circulant(6, {1, 3}));
    EXPECT_EQ(circ.order(), 6);
    EXPECT_TRUE(is_regular(circ, 3));
    EXPECT_TRUE(is_connected(circ));
    EXPECT_TRUE(oracle::two_colorable(circ));

    auto q4 = generate(FamilySpec::hypercube(4));
    EXPECT_EQ(q4.order(), 16);
    EXPECT_TRUE(is_regular(q4, 4));

    auto pet = generate(FamilySpec::petersen());
    EXPECT_EQ(pet.order(), 10);
    EXPECT_EQ(pet.size(), 15);
    EXPECT_TRUE(is_regular(pet, 3));

    auto kab = generate(FamilySpec::complete_bipartite(2, 3));
    EXPECT_EQ(kab.size(), 6);
}

TEST(Generators, Bipartite)
{
    EXPECT_TRUE(is_bipartite(generate(FamilySpec::cycle(4))));
    EXPECT_FALSE(is_bipartite(generate(FamilySpec::cycle(5))));
    EXPECT_FALSE(is_bipartite(generate(FamilySpec::petersen())));
    EXPECT_FALSE(oracle::two_colorable(generate(FamilySpec::petersen())));
    auto circ = generate(FamilySpec::circulant(10, {1, 5}));
    EXPECT_TRUE(is_bipartite(circ));
    EXPECT_TRUE(oracle::two_colorable(circ));
    EXPECT_TRUE(is_bipartite(generate(FamilySpec::hypercube(3))));
}

TEST(Generators, CirculantDegreeRule)
{
    for (int n = 3; n <= 14; ++n)
        for (int mask = 1; mask < (1 << (n / 2)); ++mask) {
            std::vector<int> s;
            for (int d = 1; d <= n / 2; ++d)
                if (mask & (1 << (d - 1)))
                    s.push_back(d);
            auto g = generate(FamilySpec::circulant(n, s));
            const bool antipodal = n % 2 == 0 && mask & (1 << (n / 2 - 1));
            ASSERT_TRUE(is_regular(g, 2 * static_cast<int>(s.size()) - (antipodal ? 1 : 0)));
        }
}

TEST(Generators, RandomFamiliesAreReproducible)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto spec = FamilySpec::random_regular(12, 3, seed);
        auto a = generate(spec), b = generate(spec);
        ASSERT_EQ(a, b);
        ASSERT_TRUE(is_regular(a, 3));
        ASSERT_TRUE(is_connected(a));

        auto gnp = FamilySpec::gnp_connected(10, 0.3, seed);
        ASSERT_EQ(generate(gnp), generate(gnp));
        ASSERT_TRUE(is_connected(generate(gnp)));
    }
    EXPECT_NE(generate(FamilySpec::random_regular(12, 3, 1)), generate(FamilySpec::random_regular(12, 3, 2)));
}

TEST(Generators, InvalidParameters)
{
    auto kind = [] (const FamilySpec & spec) {
        try {
            generate(spec);
        }
        catch (const Error & e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    EXPECT_EQ(kind(FamilySpec::random_regular(7, 3, 1)), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind(FamilySpec::circulant(6, {})), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind(FamilySpec::circulant(6, {4})), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind(FamilySpec::circulant(6, {1, 1})), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind(FamilySpec::cycle(2)), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind(FamilySpec::gnp_connected(5, 1.5, 1)), ErrorKind::InvalidParameters);
    // never connected
    EXPECT_EQ(kind(FamilySpec::gnp_connected(5, 0.0, 1)), ErrorKind::GenerationFailed);
    EXPECT_EQ(kind(FamilySpec::random_regular(6, 1, 1)), ErrorKind::GenerationFailed);
}

TEST(Generators, ParseFamilySpec)
{
    auto c = parse_family_spec("circulant 10 1,5");
    EXPECT_EQ(c.family, Family::Circulant);
    EXPECT_EQ(c.params, (std::vector<int>{10}));
    EXPECT_EQ(c.connections, (std::vector<int>{1, 5}));
    EXPECT_EQ(c.id(), "circulant(10;1,5)");

    auto r = parse_family_spec("random_regular 12 3 seed=7");
    EXPECT_EQ(r.params, (std::vector<int>{12, 3}));
    EXPECT_EQ(r.seed, 7U);
    EXPECT_EQ(r.id(), "random_regular(12,3;seed=7)");

    auto p = parse_family_spec("gnp_connected 9 0.25 seed=3");
    EXPECT_EQ(parse_family_spec("gnp_connected 9 p=0.25 seed=3").id(), p.id());
    EXPECT_DOUBLE_EQ(p.probability, 0.25);
    EXPECT_EQ(p.id(), "gnp_connected(9;p=0.25;seed=3)");

    EXPECT_EQ(parse_family_spec("petersen").family, Family::Petersen);
    EXPECT_THROW(parse_family_spec("wheel 5"), Error);
    EXPECT_THROW(parse_family_spec("cycle x"), Error);
}

TEST(Rng, BelowStaysInRange)
{
    Rng rng(42);
    for (int i = 0; i < 10000; ++i)
        ASSERT_LT(rng.below(7), 7U);
    for (int i = 0; i < 1000; ++i) {
        double u = rng.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

}  // namespace
}  // namespace kforce
