#pragma once

#include "kforce/forcing.hpp"
#include "kforce/graph.hpp"

#include <string_view>
#include <vector>

namespace kforce {

enum class GreedyCase {
    Prop1,   // max degree <= k
    ThmI,    // min degree < max degree = k+1
    ThmII,   // regular of degree k+1
    ThmIII,  // max degree >= k+2
};

std::string_view to_string(GreedyCase c);

/// Which stalled vertex to augment at when the process stops short of V.
enum class StallStrategy {
    MinAugmentation,  // smallest a(u), then lowest index (default)
    MaxDegree,        // largest deg(u), then lowest index
};

std::string_view to_string(StallStrategy s);
StallStrategy parse_stall_strategy(std::string_view name);

/// One augmentation step: u was stalled, and `colored_neighbors` (a_u of
/// them) were added to T so that u keeps exactly k uncolored neighbors.
struct Augmentation {
    Vertex u = 0;
    std::vector<Vertex> colored_neighbors;
    int a_u = 0;
};

struct GreedyResult {
    std::vector<Vertex> forcing_set;  // ascending
    GreedyCase case_taken = GreedyCase::Prop1;
    Vertex seed_vertex = 0;           // v: min-degree vertex, or the first of the ThmII pair
    std::vector<Vertex> seed;         // {v}, the adjacent pair for ThmII, or S for ThmIII
    std::vector<Augmentation> augmentations;
    ForcingTrace trace;               // closure of forcing_set; final is V
};

struct GreedyOptions {
    StallStrategy strategy = StallStrategy::MinAugmentation;
};

/// Constructs a k-forcing set of a connected graph, dispatching on the
/// min/max degree against k. In the max degree >= k+2 case the seed is
/// a minimum-degree vertex v with max(0, deg(v)-k) of its neighbors;
/// whenever propagation stalls, enough uncolored neighbors of a stalled
/// vertex u are colored that u can force the rest, and propagation resumes.
/// Throws Error{EmptyGraph, NotConnected}.
GreedyResult greedy_k_forcing_set(const Graph & g, int k, GreedyOptions options = {});

/// Runs the construction per connected component. Forcing sets and seeds
/// are reported in the vertex labels of g.
std::vector<GreedyResult> greedy_per_component(const Graph & g, int k, GreedyOptions options = {});

}  // namespace kforce
