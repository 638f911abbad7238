#include "kforce/error.hpp"
#include "kforce/generators.hpp"
#include "kforce/graph_io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace kforce {
namespace {

ErrorKind parse_error(std::string_view text)
{
    try {
        parse_graph6(text);
    }
    catch (const Error & e) {
        return e.kind();
    }
    ADD_FAILURE() << "parsed '" << text << "'";
    return ErrorKind::ParseError;
}

TEST(Graph6, KnownStrings)
{
    // values cross-checked against networkx's encoder
    auto k1 = parse_graph6("@");
    EXPECT_EQ(k1.order(), 1);
    EXPECT_EQ(k1.size(), 0);
    EXPECT_EQ(parse_graph6("A_"), generate(FamilySpec::complete(2)));
    auto e2 = parse_graph6("A?");
    EXPECT_EQ(e2.order(), 2);
    EXPECT_EQ(e2.size(), 0);

    EXPECT_EQ(serialize_graph6(Graph(1, {})), "@");
    EXPECT_EQ(serialize_graph6(generate(FamilySpec::complete(2))), "A_");
    EXPECT_EQ(serialize_graph6(generate(FamilySpec::cycle(5))), "Dhc");
    EXPECT_EQ(serialize_graph6(generate(FamilySpec::complete(5))), "D~{");
    EXPECT_EQ(serialize_graph6(generate(FamilySpec::petersen())), "IheA@GUAo");
    EXPECT_EQ(serialize_graph6(Graph(0, {})), "?");
}

TEST(Graph6, Errors)
{
    EXPECT_EQ(parse_error(""), ErrorKind::MalformedHeader);
    EXPECT_EQ(parse_error("~?@A"), ErrorKind::MalformedHeader);
    EXPECT_EQ(parse_error("D"), ErrorKind::MalformedHeader);
    EXPECT_EQ(parse_error("A_ "), ErrorKind::BadCharacter);
    EXPECT_EQ(parse_error("A\x7f"), ErrorKind::BadCharacter);
    EXPECT_EQ(parse_error("A__"), ErrorKind::TrailingData);
    EXPECT_EQ(parse_error("A`"), ErrorKind::TrailingData);  // padding bit set

    EXPECT_THROW(serialize_graph6(generate(FamilySpec::path(63))), Error);
}

TEST(Graph6, RoundTripMatchesReferenceEncoder)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 20;
        auto g = oracle::random_graph(n, (trial % 7 + 1) / 8.0, rng);
        auto text = serialize_graph6(g);
        ASSERT_EQ(text, oracle::reference_graph6(g));
        ASSERT_EQ(parse_graph6(text), g);
    }
    auto big = generate(FamilySpec::cycle(62));
    EXPECT_EQ(parse_graph6(serialize_graph6(big)), big);
}

TEST(EdgeList, ParseAndSerialize)
{
    auto g = parse_edge_list("3 2\n0 1\n1 2\n");
    EXPECT_EQ(g, generate(FamilySpec::path(3)));
    EXPECT_EQ(serialize_edge_list(g), "3 2\n0 1\n1 2\n");
    EXPECT_EQ(parse_edge_list(serialize_edge_list(generate(FamilySpec::petersen()))), generate(FamilySpec::petersen()));

    EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), Error);
    EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), Error);
    try {
        parse_edge_list("3 1\n0 5\n");
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::VertexOutOfRange);
    }
}

TEST(ReadGraph, AutoDetection)
{
    EXPECT_EQ(read_graph("IheA@GUAo\n"), generate(FamilySpec::petersen()));
    EXPECT_EQ(read_graph(">>graph6<<A_\n"), generate(FamilySpec::complete(2)));
    EXPECT_EQ(read_graph("2 1\n0 1\n"), generate(FamilySpec::complete(2)));
    EXPECT_EQ(read_graph("2 1\n0 1\n", GraphFormat::EdgeList), generate(FamilySpec::complete(2)));
    EXPECT_THROW(read_graph("2 1\n0 1\n", GraphFormat::Graph6), Error);
}

}  // namespace
}  // namespace kforce
