#pragma once

#include "kforce/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kforce {

/// One firing: at the start of `round`, `forcer` was colored with between
/// 1 and k uncolored neighbors, all of which are listed in `forced`.
struct ForcingEvent {
    int round = 0;
    Vertex forcer = 0;
    std::vector<Vertex> forced;

    friend bool operator==(const ForcingEvent &, const ForcingEvent &) = default;
};

struct ForcingTrace {
    VertexSet initial;
    std::vector<ForcingEvent> events;
    VertexSet final;
    int rounds = 0;
};

/// Round-synchronous k-forcing from `initial`: every round, each colored
/// vertex with 1..k uncolored neighbors fires, and all forced vertices join
/// the colored set together at the end of the round. A vertex forced by
/// several forcers in one round appears under each of them.
/// Throws Error{VertexOutOfRange} if a seed vertex is not in g.
ForcingTrace closure(const Graph & g, std::span<const Vertex> initial, int k);
ForcingTrace closure(const Graph & g, const VertexSet & initial, int k);

/// Final colored set only. Worklist propagation in O(n + m), same fixed
/// point as closure(). `initial` must have capacity g.order().
VertexSet closed_set(const Graph & g, const VertexSet & initial, int k);

bool is_k_forcing_set(const Graph & g, std::span<const Vertex> s, int k);
bool is_k_forcing_set(const Graph & g, const VertexSet & s, int k);

/// A colored vertex that touches the uncolored region.
struct StalledVertex {
    Vertex vertex = 0;
    int uncolored_neighbors = 0;

    friend bool operator==(const StalledVertex &, const StalledVertex &) = default;
};

/// Colored vertices with at least one uncolored neighbor, ascending.
/// Throws Error{NotAFixedPoint} if any of them could still fire.
std::vector<StalledVertex> stalled_frontier(const Graph & g, const VertexSet & state, int k);

/// Lines of the form "round forcer -> forced...".
std::string format_trace(const ForcingTrace & trace);

/// Re-applies the events of `trace` to its initial set, checking that each
/// event was legal at the start of its round. Returns the reproduced final set.
/// Throws Error{InvalidParameters} on an illegal event.
VertexSet replay(const Graph & g, const ForcingTrace & trace, int k);

}  // namespace kforce
