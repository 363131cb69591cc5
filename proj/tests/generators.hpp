#pragma once

#include <random>
#include <vector>

#include "rainbow/constructions.hpp"
#include "rainbow/plane_graph.hpp"

namespace gen {

/// Random triangulation on n vertices: random stellations of a triangle
/// followed by random diagonal flips.
inline rainbow::PlaneGraph random_triangulation(std::mt19937_64& rng, int n, int flips = 20)
{
    rainbow::PlaneGraph g = rainbow::stacked_triangulation(3);
    while (g.vertex_count() < n)
        g = rainbow::stellate_face(g, static_cast<int>(rng() % g.face_count()));
    for (int i = 0; i < flips; ++i)
        if (auto f = rainbow::flip_edge(g, static_cast<int>(rng() % g.edge_count())))
            g = *f;
    return g;
}

/// Relabels vertices by a random permutation (edge order shuffled too).
inline rainbow::Graph shuffled(std::mt19937_64& rng, const rainbow::Graph& g)
{
    std::vector<int> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<rainbow::Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({perm[e.u], perm[e.v]});
    std::shuffle(edges.begin(), edges.end(), rng);
    return rainbow::Graph(g.vertex_count(), edges);
}

} // namespace gen

namespace gen {

/// Icosahedron: apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline rainbow::PlaneGraph icosahedron()
{
    std::vector<rainbow::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        const int up = 1 + i, up_next = 1 + (i + 1) % 5;
        const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
        edges.push_back({0, up});
        edges.push_back({up, up_next});
        edges.push_back({up, lo});
        edges.push_back({up_next, lo});
        edges.push_back({lo, lo_next});
        edges.push_back({lo, 11});
    }
    return rainbow::PlaneGraph::build(12, edges);
}

} // namespace gen
