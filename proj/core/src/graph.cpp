#include "kforce/graph.hpp"

#include "kforce/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kforce {

std::string format_set(const std::vector<Vertex> & vertices)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out << (i ? "," : "") << vertices[i];
    out << '}';
    return out.str();
}

Graph::Graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidParameters, "negative vertex count");
    adjacency_.resize(n);
    neighbor_sets_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
        if (neighbor_sets_[u].contains(v))
            throw Error(ErrorKind::DuplicateEdge,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        neighbor_sets_[u].insert(v);
        neighbor_sets_[v].insert(u);
        ++edge_count_;
    }
    for (int v = 0; v < n; ++v)
        adjacency_[v] = neighbor_sets_[v].members();
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (auto v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

DegreeSummary degrees(const Graph & g)
{
    if (g.order() == 0)
        throw Error(ErrorKind::EmptyGraph, "degree summary of the empty graph");
    DegreeSummary summary;
    summary.degree_sequence.reserve(g.order());
    for (int v = 0; v < g.order(); ++v)
        summary.degree_sequence.push_back(g.degree(v));
    std::sort(summary.degree_sequence.begin(), summary.degree_sequence.end());
    summary.delta_min = summary.degree_sequence.front();
    summary.delta_max = summary.degree_sequence.back();
    return summary;
}

namespace {

// Number of vertices reachable from `start` avoiding `removed`.
int reach_count(const Graph & g, Vertex start, const VertexSet & removed)
{
    VertexSet seen(g.order());
    std::vector<Vertex> stack{start};
    seen.insert(start);
    int count = 0;
    while (! stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        ++count;
        for (auto w : g.neighbors(u))
            if (! removed.contains(w) && ! seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return count;
}

bool connected_without(const Graph & g, const VertexSet & removed, int removed_count)
{
    Vertex start = 0;
    while (removed.contains(start))
        ++start;
    return reach_count(g, start, removed) == g.order() - removed_count;
}

}  // namespace

bool is_connected(const Graph & g)
{
    if (g.order() == 0)
        throw Error(ErrorKind::EmptyGraph, "connectivity of the empty graph");
    return connected_without(g, VertexSet(g.order()), 0);
}

bool is_k_connected(const Graph & g, int k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    if (g.order() <= k)
        throw Error(ErrorKind::TooFewVertices,
                "k-connectivity needs n > k (n=" + std::to_string(g.order()) + ", k=" + std::to_string(k) + ")");

    const int n = g.order();
    for (int r = 0; r < k; ++r) {
        // lexicographic r-subsets of 0..n-1
        std::vector<int> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexSet removed(n, idx);
            if (! connected_without(g, removed, r))
                return false;
            int i = r - 1;
            while (i >= 0 && idx[i] == n - r + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < r; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph & g)
{
    std::vector<std::vector<Vertex>> components;
    VertexSet seen(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen.contains(s))
            continue;
        std::vector<Vertex> component;
        std::vector<Vertex> stack{s};
        seen.insert(s);
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (auto w : g.neighbors(u))
                if (! seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

Graph induced_subgraph(const Graph & g, std::span<const Vertex> vertices)
{
    std::vector<int> relabel(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        relabel[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0)
            edges.emplace_back(relabel[u], relabel[v]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

bool is_regular(const Graph & g, int degree)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != degree)
            return false;
    return true;
}

}  // namespace kforce
