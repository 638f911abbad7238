#pragma once

#include "kforce/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace kforce {

enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Circulant,
    Hypercube,
    Petersen,
    RandomRegular,
    GnpConnected,
};

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// Parameters per family:
///   path n | cycle n | complete n | complete_bipartite a b | circulant n (connections)
///   hypercube d | petersen | random_regular n d (seed) | gnp_connected n (probability, seed)
struct FamilySpec {
    Family family = Family::Path;
    std::vector<int> params;
    std::vector<int> connections;
    double probability = 0.0;
    std::uint64_t seed = 0;

    static FamilySpec path(int n) { return {Family::Path, {n}, {}, 0.0, 0}; }
    static FamilySpec cycle(int n) { return {Family::Cycle, {n}, {}, 0.0, 0}; }
    static FamilySpec complete(int n) { return {Family::Complete, {n}, {}, 0.0, 0}; }
    static FamilySpec complete_bipartite(int a, int b) { return {Family::CompleteBipartite, {a, b}, {}, 0.0, 0}; }
    static FamilySpec circulant(int n, std::vector<int> s) { return {Family::Circulant, {n}, std::move(s), 0.0, 0}; }
    static FamilySpec hypercube(int d) { return {Family::Hypercube, {d}, {}, 0.0, 0}; }
    static FamilySpec petersen() { return {Family::Petersen, {}, {}, 0.0, 0}; }
    static FamilySpec random_regular(int n, int d, std::uint64_t seed) { return {Family::RandomRegular, {n, d}, {}, 0.0, seed}; }
    static FamilySpec gnp_connected(int n, double p, std::uint64_t seed) { return {Family::GnpConnected, {n}, {}, p, seed}; }

    /// Stable identifier, e.g. "circulant(10;1,5)" or "random_regular(12,3;seed=7)".
    std::string id() const;
};

/// CLI syntax: "cycle 7", "circulant 10 1,5", "random_regular 12 3 seed=7",
/// "gnp_connected 10 0.3 seed=2". Throws Error{ParseError, InvalidParameters}.
FamilySpec parse_family_spec(std::string_view text);

/// Pure function of the spec. Random families resample until connected.
/// Throws Error{InvalidParameters, GenerationFailed}.
Graph generate(const FamilySpec & spec);

/// Two-coloring by traversal.
bool is_bipartite(const Graph & g);

/// mt19937_64 wrapper with range reductions that do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform on [0, 1) with 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T> & v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace kforce
