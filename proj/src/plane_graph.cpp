#include "rainbow/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace rainbow {

namespace {

struct Draft {
    int n = 0;
    std::vector<Edge> edges;
    Rotation rot;
    DartId outer = 0;

    explicit Draft(const PlaneGraph& g)
        : n(g.vertex_count()), edges(g.edges()), rot(g.rotation_system()), outer(g.outer_dart())
    {
    }

    PlaneGraph finish() { return PlaneGraph::build(n, std::move(edges), std::move(rot), outer); }

    int index_of(VertexId v, EdgeId e) const
    {
        const auto& r = rot[v];
        const auto it = std::find(r.begin(), r.end(), e);
        if (it == r.end())
            throw Error(ErrorCode::InvalidRotation, "edge missing from rotation");
        return static_cast<int>(it - r.begin());
    }

    void insert_after(VertexId v, EdgeId existing, std::span<const EdgeId> added)
    {
        auto& r = rot[v];
        const int at = index_of(v, existing) + 1;
        r.insert(r.begin() + at, added.begin(), added.end());
    }

    void insert_before(VertexId v, EdgeId existing, std::span<const EdgeId> added)
    {
        auto& r = rot[v];
        const int at = index_of(v, existing);
        r.insert(r.begin() + at, added.begin(), added.end());
    }

    EdgeId add_edge(VertexId a, VertexId b)
    {
        edges.push_back({a, b});
        return static_cast<EdgeId>(edges.size()) - 1;
    }
};

Rotation planar_embedding(int n, const std::vector<Edge>& edges)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>,
                                             boost::property<boost::edge_index_t, int>>;
    using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

    BoostGraph bg(n);
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e)
        boost::add_edge(edges[e].u, edges[e].v, e, bg);

    std::vector<std::vector<BoostEdge>> embedding(n);
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), get(boost::vertex_index, bg)));
    if (!planar)
        throw Error(ErrorCode::NonPlanar, "graph has no planar embedding");

    const auto edge_index = get(boost::edge_index, bg);
    Rotation rot(n);
    for (VertexId v = 0; v < n; ++v)
        for (const auto& be : embedding[v])
            rot[v].push_back(static_cast<EdgeId>(edge_index[be]));
    return rot;
}

} // namespace

PlaneGraph PlaneGraph::build(int n, std::vector<Edge> edges, std::optional<Rotation> rotation,
                             std::optional<DartId> outer_dart)
{
    PlaneGraph g;
    g.graph_ = Graph(n, edges);
    if (n < 3)
        throw Error(ErrorCode::InvalidGraph, "plane graphs need at least 3 vertices");
    if (!g.graph_.is_connected())
        throw Error(ErrorCode::InvalidGraph, "graph is not connected");

    g.rotation_ = rotation ? std::move(*rotation) : planar_embedding(n, g.graph_.edges());
    if (static_cast<int>(g.rotation_.size()) != n)
        throw Error(ErrorCode::InvalidRotation, "rotation system has wrong vertex count");

    const int m = g.edge_count();
    g.position_.assign(2 * m, -1);
    for (VertexId v = 0; v < n; ++v) {
        const auto& r = g.rotation_[v];
        if (static_cast<int>(r.size()) != g.degree(v))
            throw Error(ErrorCode::InvalidRotation, "rotation at vertex " + std::to_string(v) + " has wrong length");
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            const EdgeId e = r[i];
            if (e < 0 || e >= m)
                throw Error(ErrorCode::InvalidRotation, "rotation names unknown edge " + std::to_string(e));
            const Edge& ed = g.edge(e);
            if (ed.u != v && ed.v != v)
                throw Error(ErrorCode::InvalidRotation,
                            "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
            const DartId d = ed.u == v ? 2 * e : 2 * e + 1;
            if (g.position_[d] != -1)
                throw Error(ErrorCode::InvalidRotation, "edge repeated in rotation of " + std::to_string(v));
            g.position_[d] = i;
        }
    }

    g.face_of_dart_.assign(2 * m, -1);
    for (DartId start = 0; start < 2 * m; ++start) {
        if (g.face_of_dart_[start] != -1)
            continue;
        Face f;
        f.id = static_cast<FaceId>(g.faces_.size());
        DartId d = start;
        do {
            g.face_of_dart_[d] = f.id;
            f.boundary.push_back({g.tail(d), d / 2, d});
            d = g.next_in_face(d);
        } while (d != start);
        g.faces_.push_back(std::move(f));
    }

    if (n - m + g.face_count() != 2)
        throw Error(ErrorCode::InvalidRotation, "face tracing gives V - E + F = " +
                                                    std::to_string(n - m + g.face_count()) + ", not 2");
    for (const auto& f : g.faces_)
        if (f.size() < 3)
            throw Error(ErrorCode::InvalidRotation, "face of size < 3");

    g.outer_dart_ = outer_dart.value_or(0);
    if (g.outer_dart_ < 0 || g.outer_dart_ >= 2 * m)
        throw Error(ErrorCode::InvalidRotation, "outer dart out of range");
    return g;
}

std::optional<DartId> PlaneGraph::dart(VertexId from, VertexId to) const
{
    const auto e = graph_.edge_between(from, to);
    if (!e)
        return std::nullopt;
    return edge(*e).u == from ? 2 * *e : 2 * *e + 1;
}

DartId PlaneGraph::next_in_face(DartId d) const
{
    const VertexId h = head(d);
    const auto& r = rotation_[h];
    const int pos = position_[reverse(d)];
    const EdgeId next = r[(pos + 1) % r.size()];
    return edge(next).u == h ? 2 * next : 2 * next + 1;
}

std::vector<VertexId> PlaneGraph::neighbors(VertexId v) const
{
    std::vector<VertexId> out;
    for (EdgeId e : rotation_[v])
        out.push_back(edge(e).other(v));
    return out;
}

bool is_plane_triangulation(const PlaneGraph& g)
{
    if (g.vertex_count() < 3)
        return false;
    return std::all_of(g.faces().begin(), g.faces().end(), [](const Face& f) { return f.size() == 3; });
}

std::vector<int> face_size_histogram(const PlaneGraph& g)
{
    std::vector<int> hist;
    for (const auto& f : g.faces()) {
        if (static_cast<int>(hist.size()) <= f.size())
            hist.resize(f.size() + 1, 0);
        ++hist[f.size()];
    }
    return hist;
}

PlaneGraph add_vertex_in_face(const PlaneGraph& g, FaceId face, std::span<const int> corners)
{
    if (face < 0 || face >= g.face_count())
        throw Error(ErrorCode::InvalidParam, "no face " + std::to_string(face));
    const Face& f = g.face(face);
    if (corners.empty())
        throw Error(ErrorCode::InvalidParam, "need at least one corner");
    std::vector<VertexId> chosen;
    for (size_t i = 0; i < corners.size(); ++i) {
        if (corners[i] < 0 || corners[i] >= f.size() || (i > 0 && corners[i] <= corners[i - 1]))
            throw Error(ErrorCode::InvalidParam, "corners must be ascending positions on the face boundary");
        chosen.push_back(f.boundary[corners[i]].vertex);
    }
    auto sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidParam, "face boundary repeats a chosen vertex");

    Draft draft(g);
    const VertexId z = draft.n++;
    draft.rot.emplace_back();
    std::vector<EdgeId> spokes;
    for (int c : corners) {
        const auto& corner = f.boundary[c];
        const EdgeId incoming = f.boundary[(c + f.size() - 1) % f.size()].edge;
        const EdgeId s = draft.add_edge(corner.vertex, z);
        const EdgeId one[] = {s};
        draft.insert_after(corner.vertex, incoming, one);
        spokes.push_back(s);
    }
    draft.rot[z].assign(spokes.rbegin(), spokes.rend());
    return draft.finish();
}

PlaneGraph stellate_face(const PlaneGraph& g, FaceId face)
{
    if (face < 0 || face >= g.face_count())
        throw Error(ErrorCode::InvalidParam, "no face " + std::to_string(face));
    std::vector<int> corners(g.face(face).size());
    std::iota(corners.begin(), corners.end(), 0);
    return add_vertex_in_face(g, face, corners);
}

PlaneGraph stellate_faces(const PlaneGraph& g, std::span<const FaceId> faces)
{
    std::vector<DartId> anchors;
    for (FaceId f : faces) {
        if (f < 0 || f >= g.face_count())
            throw Error(ErrorCode::InvalidParam, "no face " + std::to_string(f));
        anchors.push_back(g.face(f).boundary.front().dart);
    }
    auto sorted = anchors;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidParam, "face listed twice for stellation");

    PlaneGraph current = g;
    for (DartId d : anchors)
        current = stellate_face(current, current.face_of_dart(d));
    return current;
}

PlaneGraph subdivide_edge(const PlaneGraph& g, EdgeId e, int times)
{
    if (e < 0 || e >= g.edge_count())
        throw Error(ErrorCode::InvalidParam, "no edge " + std::to_string(e));
    if (times < 0)
        throw Error(ErrorCode::InvalidParam, "negative subdivision count");
    if (times == 0)
        return g;

    Draft draft(g);
    const auto [u, v] = g.edge(e);
    std::vector<VertexId> chain;
    for (int i = 0; i < times; ++i) {
        chain.push_back(draft.n++);
        draft.rot.emplace_back();
    }
    draft.edges[e] = {u, chain.front()};
    EdgeId prev_edge = e;
    for (int i = 0; i < times; ++i) {
        const VertexId w = chain[i];
        const VertexId next = i + 1 < times ? chain[i + 1] : v;
        const EdgeId ne = draft.add_edge(w, next);
        draft.rot[w] = {prev_edge, ne};
        prev_edge = ne;
    }
    auto& rv = draft.rot[v];
    std::replace(rv.begin(), rv.end(), e, prev_edge);
    return draft.finish();
}

PlaneGraph glue_triangulation_on_edge(const PlaneGraph& g, EdgeId e, const PlaneGraph& d, GlueSide side,
                                      std::optional<DartId> anchor)
{
    if (e < 0 || e >= g.edge_count())
        throw Error(ErrorCode::InvalidParam, "no edge " + std::to_string(e));
    if (!is_plane_triangulation(d))
        throw Error(ErrorCode::NotTriangulation, "glued graph must be a plane triangulation");
    const DartId da = anchor.value_or(d.outer_dart());
    if (da < 0 || da >= 2 * d.edge_count() || d.face_of_dart(da) != d.outer_face())
        throw Error(ErrorCode::InvalidAnchor, "anchor dart is not on the outer face");

    const DartId dg = side == GlueSide::Forward ? 2 * e : 2 * e + 1;
    const VertexId u = g.tail(dg);
    const VertexId v = g.head(dg);
    const VertexId a = d.tail(da);
    const VertexId b = d.head(da);
    const EdgeId anchor_edge = da / 2;

    Draft draft(g);
    std::vector<VertexId> vmap(d.vertex_count(), -1);
    vmap[b] = u;
    vmap[a] = v;
    for (VertexId x = 0; x < d.vertex_count(); ++x)
        if (vmap[x] < 0) {
            vmap[x] = draft.n++;
            draft.rot.emplace_back();
        }
    std::vector<EdgeId> emap(d.edge_count(), -1);
    emap[anchor_edge] = e;
    for (EdgeId x = 0; x < d.edge_count(); ++x)
        if (x != anchor_edge)
            emap[x] = draft.add_edge(vmap[d.edge(x).u], vmap[d.edge(x).v]);

    // Edges of d at a vertex, in rotation order starting just after the anchor edge.
    auto after_anchor = [&](VertexId x) {
        const auto r = d.rotation(x);
        const auto it = std::find(r.begin(), r.end(), anchor_edge);
        std::vector<EdgeId> out;
        const size_t start = static_cast<size_t>(it - r.begin());
        for (size_t i = 1; i < r.size(); ++i)
            out.push_back(emap[r[(start + i) % r.size()]]);
        return out;
    };

    const auto at_u = after_anchor(b);
    const auto at_v = after_anchor(a);
    draft.insert_before(u, e, at_u);
    draft.insert_after(v, e, at_v);
    for (VertexId x = 0; x < d.vertex_count(); ++x) {
        if (x == a || x == b)
            continue;
        auto& r = draft.rot[vmap[x]];
        for (EdgeId y : d.rotation(x))
            r.push_back(emap[y]);
    }

    if (draft.outer == dg) {
        // The face left of dg is now a triangle of d; keep the outer face on the old side.
        const EdgeId first = at_u.front();
        draft.outer = draft.edges[first].u == u ? 2 * first : 2 * first + 1;
    }
    return draft.finish();
}

std::optional<PlaneGraph> flip_edge(const PlaneGraph& g, EdgeId e)
{
    if (e < 0 || e >= g.edge_count())
        throw Error(ErrorCode::InvalidParam, "no edge " + std::to_string(e));
    const Face& f1 = g.face(g.face_of_dart(2 * e));
    const Face& f2 = g.face(g.face_of_dart(2 * e + 1));
    if (f1.size() != 3 || f2.size() != 3)
        throw Error(ErrorCode::NotTriangulation, "flip needs two triangles");
    const auto [u, v] = g.edge(e);
    const DartId d1 = g.next_in_face(2 * e);     // v -> a
    const DartId d2 = g.next_in_face(2 * e + 1); // u -> b
    const VertexId a = g.head(d1);
    const VertexId b = g.head(d2);
    if (a == b || g.graph().adjacent(a, b))
        return std::nullopt;

    Draft draft(g);
    auto erase = [&](VertexId x) {
        auto& r = draft.rot[x];
        r.erase(std::find(r.begin(), r.end(), e));
    };
    erase(u);
    erase(v);
    draft.edges[e] = {a, b};
    const EdgeId one[] = {e};
    draft.insert_after(a, d1 / 2, one);
    draft.insert_after(b, d2 / 2, one);
    return draft.finish();
}

DualGraph dual(const PlaneGraph& g)
{
    if (!is_plane_triangulation(g))
        throw Error(ErrorCode::NotTriangulation, "dual() expects a plane triangulation");
    DualGraph out;
    out.vertex_count = g.face_count();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out.edges.push_back({g.face_of_dart(2 * e), g.face_of_dart(2 * e + 1)});
    return out;
}

std::vector<EdgeId> perfect_matching(const DualGraph& dual,
                                     const std::function<bool(std::span<const EdgeId>)>& accept)
{
    const int n = dual.vertex_count;
    if (n % 2 != 0)
        throw Error(ErrorCode::NoMatching, "odd number of dual vertices");
    std::vector<std::vector<std::pair<int, EdgeId>>> adj(n);
    for (EdgeId e = 0; e < static_cast<EdgeId>(dual.edges.size()); ++e) {
        const auto [a, b] = dual.edges[e];
        if (a == b)
            continue;
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }

    std::vector<char> matched(n, 0);
    std::vector<EdgeId> chosen;
    std::vector<EdgeId> result;

    std::function<bool()> search = [&]() -> bool {
        int v = 0;
        while (v < n && matched[v])
            ++v;
        if (v == n) {
            std::vector<EdgeId> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            if (accept && !accept(sorted))
                return false;
            result = std::move(sorted);
            return true;
        }
        matched[v] = 1;
        for (const auto& [w, e] : adj[v]) {
            if (matched[w])
                continue;
            matched[w] = 1;
            chosen.push_back(e);
            if (search())
                return true;
            chosen.pop_back();
            matched[w] = 0;
        }
        matched[v] = 0;
        return false;
    };

    if (!search())
        throw Error(ErrorCode::NoMatching, "dual graph has no acceptable perfect matching");
    return result;
}

} // namespace rainbow
