#include "kforce/forcing.hpp"

#include "kforce/error.hpp"

#include <sstream>

namespace kforce {

namespace {

void check_k(int k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidParameters, "k must be a positive integer, got " + std::to_string(k));
}

VertexSet to_set(const Graph & g, std::span<const Vertex> vertices)
{
    VertexSet s(g.order());
    for (auto v : vertices) {
        if (v < 0 || v >= g.order())
            throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
        s.insert(v);
    }
    return s;
}

void check_capacity(const Graph & g, const VertexSet & s)
{
    if (s.capacity() != g.order())
        throw Error(ErrorKind::VertexOutOfRange, "vertex set capacity does not match graph order");
}

}  // namespace

ForcingTrace closure(const Graph & g, std::span<const Vertex> initial, int k)
{
    return closure(g, to_set(g, initial), k);
}

ForcingTrace closure(const Graph & g, const VertexSet & initial, int k)
{
    check_k(k);
    check_capacity(g, initial);

    ForcingTrace trace;
    trace.initial = initial;
    VertexSet colored = initial;

    while (true) {
        const int round = trace.rounds + 1;
        VertexSet next = colored;
        bool fired = false;
        for (Vertex u = 0; u < g.order(); ++u) {
            if (! colored.contains(u))
                continue;
            std::vector<Vertex> uncolored;
            for (auto w : g.neighbors(u))
                if (! colored.contains(w))
                    uncolored.push_back(w);
            if (uncolored.empty() || static_cast<int>(uncolored.size()) > k)
                continue;
            for (auto w : uncolored)
                next.insert(w);
            trace.events.push_back(ForcingEvent{round, u, std::move(uncolored)});
            fired = true;
        }
        if (! fired)
            break;
        colored = std::move(next);
        trace.rounds = round;
    }

    trace.final = std::move(colored);
    return trace;
}

VertexSet closed_set(const Graph & g, const VertexSet & initial, int k)
{
    check_k(k);
    check_capacity(g, initial);

    const int n = g.order();
    VertexSet colored = initial;
    std::vector<int> uncolored_count(n);
    std::vector<Vertex> worklist;
    worklist.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        int c = 0;
        for (auto w : g.neighbors(v))
            c += colored.contains(w) ? 0 : 1;
        uncolored_count[v] = c;
        if (colored.contains(v) && c >= 1 && c <= k)
            worklist.push_back(v);
    }

    // A colored vertex becomes eligible once its uncolored count drops to
    // <= k, and stays eligible until it has fired; counts only decrease.
    while (! worklist.empty()) {
        auto u = worklist.back();
        worklist.pop_back();
        if (uncolored_count[u] == 0)
            continue;
        for (auto w : g.neighbors(u)) {
            if (colored.contains(w))
                continue;
            colored.insert(w);
            for (auto x : g.neighbors(w)) {
                --uncolored_count[x];
                if (colored.contains(x) && x != u && uncolored_count[x] == k)
                    worklist.push_back(x);
            }
            if (uncolored_count[w] >= 1 && uncolored_count[w] <= k)
                worklist.push_back(w);
        }
    }
    return colored;
}

bool is_k_forcing_set(const Graph & g, std::span<const Vertex> s, int k)
{
    return closed_set(g, to_set(g, s), k).is_full();
}

bool is_k_forcing_set(const Graph & g, const VertexSet & s, int k)
{
    return closed_set(g, s, k).is_full();
}

std::vector<StalledVertex> stalled_frontier(const Graph & g, const VertexSet & state, int k)
{
    check_k(k);
    check_capacity(g, state);
    std::vector<StalledVertex> frontier;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (! state.contains(u))
            continue;
        int c = 0;
        for (auto w : g.neighbors(u))
            c += state.contains(w) ? 0 : 1;
        if (c == 0)
            continue;
        if (c <= k)
            throw Error(ErrorKind::NotAFixedPoint,
                    "vertex " + std::to_string(u) + " can still force its " + std::to_string(c) + " uncolored neighbors");
        frontier.push_back(StalledVertex{u, c});
    }
    return frontier;
}

std::string format_trace(const ForcingTrace & trace)
{
    std::ostringstream out;
    for (const auto & e : trace.events) {
        out << e.round << ' ' << e.forcer << " ->";
        for (auto w : e.forced)
            out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

VertexSet replay(const Graph & g, const ForcingTrace & trace, int k)
{
    VertexSet colored = trace.initial;
    std::size_t i = 0;
    for (int round = 1; round <= trace.rounds; ++round) {
        VertexSet next = colored;
        for (; i < trace.events.size() && trace.events[i].round == round; ++i) {
            const auto & e = trace.events[i];
            if (! colored.contains(e.forcer))
                throw Error(ErrorKind::InvalidParameters, "forcer " + std::to_string(e.forcer) + " not colored");
            std::vector<Vertex> uncolored;
            for (auto w : g.neighbors(e.forcer))
                if (! colored.contains(w))
                    uncolored.push_back(w);
            if (uncolored.empty() || static_cast<int>(uncolored.size()) > k || uncolored != e.forced)
                throw Error(ErrorKind::InvalidParameters, "illegal force by " + std::to_string(e.forcer));
            for (auto w : e.forced)
                next.insert(w);
        }
        colored = std::move(next);
    }
    if (i != trace.events.size())
        throw Error(ErrorKind::InvalidParameters, "events beyond the recorded round count");
    return colored;
}

}  // namespace kforce
