#pragma once

#include "kforce/vertex_set.hpp"

#include <span>
#include <utility>
#include <vector>

namespace kforce {

using Edge = std::pair<Vertex, Vertex>;

struct DegreeSummary {
    int delta_min = 0;
    int delta_max = 0;
    std::vector<int> degree_sequence;  // ascending
};

/// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists
/// are sorted ascending.
class Graph {
public:
    /// Throws Error{SelfLoop, DuplicateEdge, VertexOutOfRange}.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int size() const noexcept { return edge_count_; }

    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return neighbor_sets_[u].contains(v); }
    const VertexSet & neighbor_set(Vertex v) const { return neighbor_sets_[v]; }

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph & a, const Graph & b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> neighbor_sets_;
    int edge_count_ = 0;
};

/// Throws Error{EmptyGraph} when n = 0.
DegreeSummary degrees(const Graph & g);

/// Throws Error{EmptyGraph}.
bool is_connected(const Graph & g);

/// True iff g stays connected after deleting any fewer than k vertices.
/// Exhaustive over all removal sets. Throws Error{TooFewVertices} if n <= k.
bool is_k_connected(const Graph & g, int k);

/// Connected components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph & g);

/// Subgraph induced on `vertices` (relabelled 0..|vertices|-1 in the given order).
Graph induced_subgraph(const Graph & g, std::span<const Vertex> vertices);

bool is_regular(const Graph & g, int degree);

}  // namespace kforce
