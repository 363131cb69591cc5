#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
using DartId = int;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    auto operator<=>(const Edge&) const = default;
};

struct Incidence {
    VertexId to;
    EdgeId edge;
};

/// Simple undirected graph with stable edge ids. Loops and parallel edges
/// are rejected on construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return edge_between(a, b).has_value(); }
    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Complete graph, path and cycle helpers used by tests and pattern specs.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

} // namespace rainbow
