#include "rainbow/graph.hpp"

#include <algorithm>
#include <string>

namespace rainbow {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::NotTriangulation: return "NotTriangulation";
    case ErrorCode::NoMatching: return "NoMatching";
    case ErrorCode::InvalidAnchor: return "InvalidAnchor";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::RangeMismatch: return "RangeMismatch";
    case ErrorCode::HostRejected: return "HostRejected";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidGraph, "negative vertex count");
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const auto [u, v] = edges_[e];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(e) + " has an endpoint out of range");
        if (u == v)
            throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(e) + " is a loop");
        adjacency_[u].push_back({v, e});
        adjacency_[v].push_back({u, e});
    }
    for (VertexId v = 0; v < n; ++v) {
        auto nbrs = adjacency_[v];
        std::sort(nbrs.begin(), nbrs.end(), [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
        for (size_t i = 1; i < nbrs.size(); ++i)
            if (nbrs[i].to == nbrs[i - 1].to)
                throw Error(ErrorCode::InvalidGraph,
                            "parallel edges between " + std::to_string(v) + " and " + std::to_string(nbrs[i].to));
    }
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const
{
    const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const VertexId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    for (const auto& inc : list)
        if (inc.to == target)
            return inc.edge;
    return std::nullopt;
}

bool Graph::is_connected() const
{
    if (n_ == 0)
        return true;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const auto& inc : adjacency_[v])
            if (!seen[inc.to]) {
                seen[inc.to] = 1;
                ++count;
                stack.push_back(inc.to);
            }
    }
    return count == n_;
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph(n, std::move(edges));
}

} // namespace rainbow
