#include "kforce/greedy.hpp"

#include "kforce/error.hpp"

#include <algorithm>
#include <cassert>

namespace kforce {

std::string_view to_string(GreedyCase c)
{
    switch (c) {
    case GreedyCase::Prop1: return "PROP1";
    case GreedyCase::ThmI: return "THM_I";
    case GreedyCase::ThmII: return "THM_II";
    case GreedyCase::ThmIII: return "THM_III";
    }
    return "?";
}

std::string_view to_string(StallStrategy s)
{
    switch (s) {
    case StallStrategy::MinAugmentation: return "min-a";
    case StallStrategy::MaxDegree: return "max-degree";
    }
    return "?";
}

StallStrategy parse_stall_strategy(std::string_view name)
{
    if (name == "min-a")
        return StallStrategy::MinAugmentation;
    if (name == "max-degree")
        return StallStrategy::MaxDegree;
    throw Error(ErrorKind::InvalidParameters, "unknown strategy '" + std::string(name) + "'");
}

namespace {

Vertex lowest_min_degree_vertex(const Graph & g)
{
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best))
            best = v;
    return best;
}

std::vector<Vertex> uncolored_neighbors(const Graph & g, Vertex u, const VertexSet & colored)
{
    std::vector<Vertex> out;
    for (auto w : g.neighbors(u))
        if (! colored.contains(w))
            out.push_back(w);
    return out;
}

const StalledVertex & choose_stalled(const Graph & g, const std::vector<StalledVertex> & frontier, StallStrategy strategy)
{
    auto best = frontier.begin();
    for (auto it = std::next(frontier.begin()); it != frontier.end(); ++it) {
        // frontier is in ascending vertex order, so strict comparison keeps
        // the lowest index among ties
        switch (strategy) {
        case StallStrategy::MinAugmentation:
            if (it->uncolored_neighbors < best->uncolored_neighbors)
                best = it;
            break;
        case StallStrategy::MaxDegree:
            if (g.degree(it->vertex) > g.degree(best->vertex))
                best = it;
            break;
        }
    }
    return *best;
}

void construct_high_degree(const Graph & g, int k, int delta_min, StallStrategy strategy, GreedyResult & result)
{
    const Vertex v = result.seed_vertex = lowest_min_degree_vertex(g);
    VertexSet chosen(g.order());
    chosen.insert(v);
    const int extra = std::max(0, delta_min - k);
    auto nbrs = g.neighbors(v);
    for (int i = 0; i < extra; ++i)
        chosen.insert(nbrs[i]);
    result.seed = chosen.members();

    VertexSet colored = closed_set(g, chosen, k);
    while (! colored.is_full()) {
        auto frontier = stalled_frontier(g, colored, k);
        if (frontier.empty())
            throw Error(ErrorKind::NotConnected, "propagation stalled with no colored vertex on the boundary");
        const auto & stalled = choose_stalled(g, frontier, strategy);
        const Vertex u = stalled.vertex;
        const int a_u = stalled.uncolored_neighbors - k;

        if (u == v)
            throw Error(ErrorKind::InvalidParameters, "seed vertex stalled; its neighborhood should be forced first");
        if (g.degree(u) - stalled.uncolored_neighbors < 1 || a_u > g.degree(u) - k - 1)
            throw Error(ErrorKind::InvalidParameters,
                    "augmentation at " + std::to_string(u) + " exceeds deg(u)-k-1");

        auto candidates = uncolored_neighbors(g, u, colored);
        Augmentation step{u, {candidates.begin(), candidates.begin() + a_u}, a_u};
        for (auto w : step.colored_neighbors) {
            chosen.insert(w);
            colored.insert(w);
        }
        result.augmentations.push_back(std::move(step));
        colored = closed_set(g, colored, k);
    }
    result.forcing_set = chosen.members();
}

}  // namespace

GreedyResult greedy_k_forcing_set(const Graph & g, int k, GreedyOptions options)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidParameters, "k must be a positive integer, got " + std::to_string(k));
    if (! is_connected(g))
        throw Error(ErrorKind::NotConnected, "greedy construction needs a connected graph");

    const auto summary = degrees(g);
    const int delta_min = summary.delta_min, delta_max = summary.delta_max;

    GreedyResult result;
    if (delta_max <= k) {
        result.case_taken = GreedyCase::Prop1;
        result.seed_vertex = lowest_min_degree_vertex(g);
        result.seed = {result.seed_vertex};
        result.forcing_set = result.seed;
    }
    else if (delta_max == k + 1 && delta_min < delta_max) {
        result.case_taken = GreedyCase::ThmI;
        result.seed_vertex = lowest_min_degree_vertex(g);
        result.seed = {result.seed_vertex};
        result.forcing_set = result.seed;
    }
    else if (delta_max == k + 1) {
        result.case_taken = GreedyCase::ThmII;
        result.seed = {0, g.neighbors(0).front()};
        result.forcing_set = result.seed;
    }
    else {
        result.case_taken = GreedyCase::ThmIII;
        construct_high_degree(g, k, delta_min, options.strategy, result);
    }

    result.trace = closure(g, result.forcing_set, k);
    assert(result.trace.final.is_full());
    return result;
}

std::vector<GreedyResult> greedy_per_component(const Graph & g, int k, GreedyOptions options)
{
    if (g.order() == 0)
        throw Error(ErrorKind::EmptyGraph, "greedy construction on the empty graph");

    std::vector<GreedyResult> results;
    for (const auto & component : connected_components(g)) {
        auto local = greedy_k_forcing_set(induced_subgraph(g, component), k, options);
        auto lift = [&] (std::vector<Vertex> & vs) {
            for (auto & x : vs)
                x = component[x];
        };
        lift(local.forcing_set);
        local.seed_vertex = component[local.seed_vertex];
        lift(local.seed);
        for (auto & step : local.augmentations) {
            step.u = component[step.u];
            lift(step.colored_neighbors);
        }
        // trace stays in component-local labels; rebuild it against g
        local.trace = closure(g, local.forcing_set, k);
        results.push_back(std::move(local));
    }
    return results;
}

}  // namespace kforce
