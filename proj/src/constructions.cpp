#include "rainbow/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "rainbow/rainbow_search.hpp"

namespace rainbow {

namespace {

void ensure(bool condition, const std::string& what)
{
    if (!condition)
        throw std::logic_error("construction invariant violated: " + what);
}

std::vector<FaceId> faces_of_size(const PlaneGraph& g, int size)
{
    std::vector<FaceId> out;
    for (const auto& f : g.faces())
        if (f.size() == size)
            out.push_back(f.id);
    return out;
}

std::vector<FaceId> choose(std::vector<FaceId> candidates, int count, const FaceChoice& choice)
{
    if (count < 0 || count > static_cast<int>(candidates.size()))
        throw Error(ErrorCode::InvalidParam, "not enough faces to choose from");
    if (choice.shuffle_seed) {
        std::mt19937_64 rng(*choice.shuffle_seed);
        for (size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[rng() % i]);
    }
    candidates.resize(count);
    return candidates;
}

/// Adds a vertex inside the face left of dart d, joined to the listed boundary vertices.
PlaneGraph add_vertex_joined(const PlaneGraph& g, DartId d, std::initializer_list<VertexId> targets)
{
    const FaceId f = g.face_of_dart(d);
    std::vector<int> corners;
    const auto& boundary = g.face(f).boundary;
    for (int i = 0; i < static_cast<int>(boundary.size()); ++i)
        if (std::find(targets.begin(), targets.end(), boundary[i].vertex) != targets.end())
            corners.push_back(i);
    ensure(corners.size() == targets.size(), "target vertices on the face boundary");
    return add_vertex_in_face(g, f, corners);
}

void finish(BuildBundle& b)
{
    b.result = stellate_faces(b.base, b.stellation_set);
}

void add_path_landmarks(BuildBundle& b, int p)
{
    b.landmarks.push_back({"x", 0});
    b.landmarks.push_back({"y", 1});
    for (int i = 1; i <= p; ++i)
        b.landmarks.push_back({"v" + std::to_string(i), i + 1});
}

int floor_half(int k) { return k / 2; }

} // namespace

std::string_view to_string(ConstructionKind kind)
{
    switch (kind) {
    case ConstructionKind::LemmaTH: return "lemma-th";
    case ConstructionKind::P89: return "p89";
    case ConstructionKind::PkSmall: return "pk-small";
    case ConstructionKind::PkMid: return "pk-mid";
    case ConstructionKind::PkLarge: return "pk-large";
    case ConstructionKind::C5Star: return "c5-star";
    case ConstructionKind::CkSubdiv: return "ck-subdiv";
    case ConstructionKind::Wheel: return "wheel";
    case ConstructionKind::Host: return "host";
    }
    return "unknown";
}

ConstructionKind parse_construction_kind(std::string_view text)
{
    for (auto kind : {ConstructionKind::LemmaTH, ConstructionKind::P89, ConstructionKind::PkSmall,
                      ConstructionKind::PkMid, ConstructionKind::PkLarge, ConstructionKind::C5Star,
                      ConstructionKind::CkSubdiv, ConstructionKind::Wheel, ConstructionKind::Host})
        if (to_string(kind) == text)
            return kind;
    throw Error(ErrorCode::Parse, "unknown construction '" + std::string(text) + "'");
}

std::optional<VertexId> BuildBundle::landmark(std::string_view name) const
{
    for (const auto& [label, v] : landmarks)
        if (label == name)
            return v;
    return std::nullopt;
}

std::optional<FaceId> find_triangle_face(const PlaneGraph& g, VertexId a, VertexId b, VertexId c)
{
    std::array<VertexId, 3> want{a, b, c};
    std::sort(want.begin(), want.end());
    for (const auto& f : g.faces()) {
        if (f.size() != 3)
            continue;
        std::array<VertexId, 3> got{f.boundary[0].vertex, f.boundary[1].vertex, f.boundary[2].vertex};
        std::sort(got.begin(), got.end());
        if (got == want)
            return f.id;
    }
    return std::nullopt;
}

PlaneGraph apex_path_triangulation(int p)
{
    if (p < 1)
        throw Error(ErrorCode::InvalidParam, "path needs p >= 1");
    PlaneGraph g = PlaneGraph::build(3, {{0, 1}, {0, 2}, {1, 2}}, std::nullopt, 0);
    for (int i = 2; i <= p; ++i)
        g = stellate_face(g, g.face_of_dart(g.outer_dart()));
    return g;
}

PlaneGraph stacked_triangulation(int n)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidParam, "triangulations need n >= 3");
    return apex_path_triangulation(n - 2);
}

BuildBundle build_lemma_th(int p)
{
    if (p < 1)
        throw Error(ErrorCode::InvalidParam, "p must be at least 1");
    BuildBundle b;
    b.params.kind = ConstructionKind::LemmaTH;
    b.params.p = p;
    b.params.n = 3 * p + 2;
    b.base = apex_path_triangulation(p);
    for (FaceId f = 0; f < b.base.face_count(); ++f)
        b.stellation_set.push_back(f);
    finish(b);
    add_path_landmarks(b, p);

    const int n0 = b.base.vertex_count();
    const FaceId outer = b.base.outer_face();
    std::vector<std::pair<std::string, VertexId>> u, w, rest;
    for (size_t i = 0; i < b.stellation_set.size(); ++i) {
        const Face& f = b.base.face(b.stellation_set[i]);
        const VertexId added = n0 + static_cast<int>(i);
        std::vector<VertexId> vs;
        for (const auto& c : f.boundary)
            vs.push_back(c.vertex);
        std::sort(vs.begin(), vs.end());
        if (f.id == outer) {
            rest.insert(rest.begin(), {"w", added});
        } else if (vs[0] == 0 && vs[1] == 1) {
            rest.push_back({"z", added});
        } else {
            const int j = vs[1] - 1; // vs = {apex, v_j, v_{j+1}}
            (vs[0] == 0 ? u : w).push_back({std::to_string(j), added});
        }
    }
    auto by_index = [](const auto& a, const auto& c) { return std::stoi(a.first) < std::stoi(c.first); };
    std::sort(u.begin(), u.end(), by_index);
    std::sort(w.begin(), w.end(), by_index);
    for (auto& [j, v] : u)
        b.landmarks.push_back({"u" + j, v});
    for (auto& [j, v] : w)
        b.landmarks.push_back({"w" + j, v});
    b.landmarks.insert(b.landmarks.end(), rest.begin(), rest.end());
    b.expected_colors = b.base.edge_count() + static_cast<int>(b.stellation_set.size());
    ensure(b.result.vertex_count() == 3 * p + 2, "|T_H| = 3p+2");
    return b;
}

BuildBundle build_p89_host(int k, int n, const FaceChoice& choice)
{
    if (k != 8 && k != 9)
        throw Error(ErrorCode::InvalidParam, "this construction covers k = 8 and k = 9");
    if (n < k)
        throw Error(ErrorCode::InvalidParam, "need n >= k");
    BuildBundle b;
    auto& prm = b.params;
    prm.kind = ConstructionKind::P89;
    prm.k = k;
    prm.n = n;
    prm.eps = k % 2;
    prm.eps_star = (n + 1 + prm.eps) % 2;
    prm.t = (n + 3 + prm.eps - prm.eps_star) / 2;
    ensure(2 * prm.t - 3 - prm.eps + prm.eps_star == n, "2t-3-eps+eps* = n");
    ensure(prm.t >= k - 3, "t >= k-3");

    const VertexId x = 0, y = 1;
    PlaneGraph h = PlaneGraph::build(3, {{0, 1}, {0, 2}, {1, 2}}, std::nullopt, 0);
    for (int j = 2; j <= prm.t - 2; ++j) {
        if (prm.eps == 1 && j == 2)
            h = stellate_face(h, h.face_of_dart(h.outer_dart()));
        else
            h = add_vertex_joined(h, h.outer_dart(), {x, y});
    }
    b.base = h;
    const auto hist = face_size_histogram(h);
    const int f3 = hist.size() > 3 ? hist[3] : 0;
    const int f4 = hist.size() > 4 ? hist[4] : 0;
    ensure(f3 == 2 + 2 * prm.eps && f4 == prm.t - 3 - prm.eps, "face counts of the join");
    ensure(h.edge_count() == 2 * prm.t - 3 + prm.eps, "e(H) = 2t-3+eps");

    b.stellation_set = faces_of_size(h, 4);
    const auto extra = choose(faces_of_size(h, 3), prm.eps_star, choice);
    b.stellation_set.insert(b.stellation_set.end(), extra.begin(), extra.end());
    finish(b);
    b.landmarks = {{"x", x}, {"y", y}};
    for (VertexId v = 2; v < h.vertex_count(); ++v)
        b.landmarks.push_back({"m" + std::to_string(v - 1), v});
    b.expected_colors = h.edge_count() + f4 + prm.eps_star;
    ensure(b.result.vertex_count() == n, "|T*| = n");
    return b;
}

BuildBundle build_pk_small(int k, int n, const FaceChoice& choice)
{
    if (k < 10)
        throw Error(ErrorCode::InvalidParam, "need k >= 10");
    const int h = floor_half(k), eps = k % 2;
    if (n < k || n >= 3 * h + eps - 5)
        throw Error(ErrorCode::RangeMismatch, "n outside k <= n < 3*floor(k/2)+eps-5");
    BuildBundle b;
    auto& prm = b.params;
    prm.kind = ConstructionKind::PkSmall;
    prm.k = k;
    prm.n = n;
    prm.eps = eps;
    prm.p = k - 5;
    b.base = apex_path_triangulation(prm.p);
    ensure(b.base.edge_count() == 3 * k - 15, "e(H) = 3k-15");
    b.stellation_set = choose(faces_of_size(b.base, 3), n - k + 3, choice);
    finish(b);
    add_path_landmarks(b, prm.p);
    b.expected_colors = b.base.edge_count() + static_cast<int>(b.stellation_set.size());
    ensure(b.result.vertex_count() == n, "|T*| = n");
    return b;
}

BuildBundle build_pk_mid(int k, int n)
{
    if (k < 10)
        throw Error(ErrorCode::InvalidParam, "need k >= 10");
    const int h = floor_half(k), eps = k % 2;
    if (n < 3 * h + eps - 5 || n > 5 * h + eps - 15)
        throw Error(ErrorCode::RangeMismatch, "n outside 3*floor(k/2)+eps-5 <= n <= 5*floor(k/2)+eps-15");
    BuildBundle b;
    auto& prm = b.params;
    prm.kind = ConstructionKind::PkMid;
    prm.k = k;
    prm.n = n;
    prm.eps = eps;
    prm.eps_star = (n + h + eps) % 2;
    prm.p = h - 4;
    ensure((n - prm.eps_star - 10 + 3 * h + eps) % 2 == 0, "t is an integer");
    prm.t = (n - prm.eps_star - 10 + 3 * h + eps) / 2;
    const int added = prm.t - 3 * h + 10;
    ensure(added >= 2 + eps, "at least 2+eps new vertices");

    const BuildBundle th = build_lemma_th(prm.p);
    const VertexId x = 0, y = 1;
    const VertexId w = *th.landmark("w");
    const VertexId vp = *th.landmark("v" + std::to_string(prm.p));
    PlaneGraph t = th.result;
    const VertexId first_new = t.vertex_count();
    for (int j = 1; j <= added; ++j) {
        if (eps == 1 && j == 2)
            t = stellate_face(t, t.face_of_dart(t.outer_dart()));
        else
            t = add_vertex_joined(t, t.outer_dart(), {x, y});
    }
    b.base = t;
    ensure(t.vertex_count() == prm.t, "|T| = t");
    ensure(t.edge_count() == 2 * prm.t + 3 * h - 16 + eps, "e(T) = 2t+3h-16+eps");
    b.stellation_set = faces_of_size(t, 4);
    ensure(static_cast<int>(b.stellation_set.size()) == added - eps, "f4(T)");
    const int f4 = static_cast<int>(b.stellation_set.size());
    if (prm.eps_star == 1) {
        const auto f0 = find_triangle_face(t, x, w, vp);
        ensure(f0.has_value(), "face x, w, v_p exists");
        b.stellation_set.push_back(*f0);
    }
    finish(b);
    b.landmarks = th.landmarks;
    for (int j = 0; j < added; ++j)
        b.landmarks.push_back({"s" + std::to_string(j + 1), first_new + j});
    b.expected_colors = t.edge_count() + f4 + prm.eps_star;
    ensure(b.result.vertex_count() == n, "|T*| = n");
    return b;
}

BuildBundle build_pk_large(int k, int n)
{
    if (k < 10)
        throw Error(ErrorCode::InvalidParam, "need k >= 10");
    const int h = floor_half(k), eps = k % 2;
    if (n <= 5 * h + eps - 15 || n < k)
        throw Error(ErrorCode::RangeMismatch, "n outside n > 5*floor(k/2)+eps-15");
    BuildBundle b;
    auto& prm = b.params;
    prm.kind = ConstructionKind::PkLarge;
    prm.k = k;
    prm.n = n;
    prm.eps = eps;
    prm.m = (n - k + 7) / 3;
    prm.r = (n - k + 7) % 3;
    prm.t = k + 2 * prm.m - 7 + prm.r / 2;
    prm.eps_prime = prm.r == 1 ? 1 : 0;
    prm.p = k - 9;
    const int added = prm.t - k + 7;
    ensure(added >= 5, "at least five new vertices");

    const VertexId x = 0, y = 1;
    PlaneGraph t = apex_path_triangulation(prm.p);
    const VertexId first_new = t.vertex_count();
    for (int j = 1; j <= added; ++j) {
        if (j % 2 == 0)
            t = stellate_face(t, t.face_of_dart(t.outer_dart()));
        else
            t = add_vertex_joined(t, t.outer_dart(), {x, y});
    }
    b.base = t;
    ensure(t.vertex_count() == prm.t, "|T'| = t");
    ensure(t.edge_count() == 2 * prm.t + k - 13 + added / 2, "e(T')");
    b.stellation_set = faces_of_size(t, 4);
    ensure(static_cast<int>(b.stellation_set.size()) == (added + 1) / 2, "f4(T')");
    const int f4 = static_cast<int>(b.stellation_set.size());
    if (prm.eps_prime == 1) {
        const VertexId vp = prm.p + 1;
        const auto f0 = k == 10 ? find_triangle_face(t, x, y, vp) : find_triangle_face(t, x, vp - 1, vp);
        ensure(f0.has_value(), "face F0 exists");
        b.stellation_set.push_back(*f0);
    }
    finish(b);
    add_path_landmarks(b, prm.p);
    for (int j = 0; j < added; ++j)
        b.landmarks.push_back({"s" + std::to_string(j + 1), first_new + j});
    b.expected_colors = t.edge_count() + f4 + prm.eps_prime;
    ensure(b.result.vertex_count() == n, "|T*| = n");
    return b;
}

BuildBundle build_pk(int k, int n, const FaceChoice& choice)
{
    if (k < 10)
        throw Error(ErrorCode::InvalidParam, "need k >= 10");
    const int h = floor_half(k), eps = k % 2;
    if (n < k)
        throw Error(ErrorCode::RangeMismatch, "need n >= k");
    if (n < 3 * h + eps - 5)
        return build_pk_small(k, n, choice);
    if (n <= 5 * h + eps - 15)
        return build_pk_mid(k, n);
    return build_pk_large(k, n);
}

std::vector<std::string> C5HostReport::failures() const
{
    std::vector<std::string> out;
    if (!connected)
        out.push_back("connected");
    if (!c5_free)
        out.push_back("c5-free");
    if (!only_3_and_6_faces)
        out.push_back("only-3-and-6-faces");
    if (!six_faces_edge_disjoint)
        out.push_back("6-faces-edge-disjoint");
    if (!order_mod_15)
        out.push_back("order-9-mod-15");
    if (!edge_count)
        out.push_back("edge-count");
    if (!face_counts)
        out.push_back("face-counts");
    return out;
}

C5HostReport verify_c5_host(const PlaneGraph& h)
{
    C5HostReport rep;
    const int n = h.vertex_count();
    rep.connected = h.graph().is_connected();
    rep.c5_free = n < 5 || !contains(h.graph(), PatternSpec::cycle(5)).has_value();
    int f3 = 0, f6 = 0;
    rep.only_3_and_6_faces = true;
    for (const auto& f : h.faces()) {
        if (f.size() == 3)
            ++f3;
        else if (f.size() == 6)
            ++f6;
        else
            rep.only_3_and_6_faces = false;
    }
    rep.six_faces_edge_disjoint = true;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (h.face(h.face_of_dart(2 * e)).size() == 6 && h.face(h.face_of_dart(2 * e + 1)).size() == 6)
            rep.six_faces_edge_disjoint = false;
    rep.order_mod_15 = n >= 9 && n % 15 == 9;
    rep.edge_count = 5 * h.edge_count() == 12 * n - 33;
    rep.t = rep.order_mod_15 ? (n - 9) / 15 : 0;
    rep.face_counts = rep.order_mod_15 && f6 == 3 * rep.t + 2 && f3 == 18 * rep.t + 6;
    return rep;
}

BuildBundle build_c5_star(const PlaneGraph& host, int r, const FaceChoice& choice)
{
    if (r < 0 || r >= 18)
        throw Error(ErrorCode::InvalidParam, "r must lie in [0, 18)");
    const auto rep = verify_c5_host(host);
    if (!rep.all_pass()) {
        std::string why;
        for (const auto& f : rep.failures())
            why += (why.empty() ? "" : ", ") + f;
        throw Error(ErrorCode::HostRejected, "host fails: " + why);
    }
    BuildBundle b;
    auto& prm = b.params;
    prm.kind = ConstructionKind::C5Star;
    prm.t = rep.t;
    prm.r = r;
    b.base = host;
    b.stellation_set = faces_of_size(host, 6);
    const int f6 = static_cast<int>(b.stellation_set.size());
    const auto extra = choose(faces_of_size(host, 3), r, choice);
    b.stellation_set.insert(b.stellation_set.end(), extra.begin(), extra.end());
    finish(b);
    prm.n = b.result.vertex_count();
    ensure(prm.n == 18 * prm.t + 11 + r, "|T*| = 18t+11+r");
    b.expected_colors = host.edge_count() + f6 + r;
    return b;
}

std::pair<int, int> ck_subdiv_split(int k, int n)
{
    if (k < 5)
        throw Error(ErrorCode::InvalidParam, "need k >= 5");
    if (n < k * k - k)
        throw Error(ErrorCode::RangeMismatch, "need n >= k^2-k");
    const int modulus = k * k - k - 2;
    const int r = (n - 2) % modulus;
    return {(n - 2 - r) / modulus + 2, r};
}

namespace {

/// Non-facial triangles of a triangulation, as edge-id triples.
std::vector<std::array<EdgeId, 3>> separating_triangles(const PlaneGraph& t)
{
    std::vector<std::array<EdgeId, 3>> out;
    const Graph& g = t.graph();
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (const auto& ab : g.incident(a)) {
            const VertexId b = ab.to;
            if (b <= a)
                continue;
            for (const auto& bc : g.incident(b)) {
                const VertexId c = bc.to;
                if (c <= b)
                    continue;
                const auto ac = g.edge_between(a, c);
                if (!ac || find_triangle_face(t, a, b, c))
                    continue;
                out.push_back({ab.edge, bc.edge, *ac});
            }
        }
    return out;
}

} // namespace

CkSubdivBundle build_ck_subdiv(int k, int n, const CkSubdivOptions& options)
{
    const auto [t, r] = ck_subdiv_split(k, n);
    CkSubdivBundle out;
    BuildBundle& b = out.bundle;
    auto& prm = b.params;
    prm.kind = ConstructionKind::CkSubdiv;
    prm.k = k;
    prm.n = n;
    prm.t = t;
    prm.r = r;
    prm.m = k / 3;
    prm.q = k % 3;

    out.seed = options.seed ? *options.seed : stacked_triangulation(t);
    const PlaneGraph& seed = out.seed;
    if (seed.vertex_count() != t || !is_plane_triangulation(seed))
        throw Error(ErrorCode::InvalidParam, "seed must be a plane triangulation on " + std::to_string(t) +
                                                 " vertices");
    std::vector<PlaneGraph> replacements = options.replacements;
    if (replacements.empty())
        replacements.push_back(stacked_triangulation(k - 1));
    for (const auto& d : replacements)
        if (d.vertex_count() != k - 1 || !is_plane_triangulation(d))
            throw Error(ErrorCode::InvalidParam, "replacements must be plane triangulations on k-1 vertices");

    const int m = prm.m, q = prm.q;
    out.subdivisions.assign(seed.edge_count(), m);
    if (q != 2) {
        // A non-facial triangle whose subdivided length drops to k would become a C_k.
        const auto triangles = separating_triangles(seed);
        auto accept = [&](std::span<const EdgeId> matching) {
            for (const auto& tri : triangles) {
                int hits = 0;
                for (EdgeId e : tri)
                    hits += std::binary_search(matching.begin(), matching.end(), e) ? 1 : 0;
                if ((q == 0 && hits == 0) || (q == 1 && hits > 1))
                    return false;
            }
            return true;
        };
        out.matching = perfect_matching(dual(seed), accept);
        ensure(static_cast<int>(out.matching.size()) == t - 2, "|M*| = t-2");
        const int on_matching = q == 0 ? m : m - 1;
        const int off_matching = q == 0 ? m - 1 : m;
        for (EdgeId e = 0; e < seed.edge_count(); ++e)
            out.subdivisions[e] =
                std::binary_search(out.matching.begin(), out.matching.end(), e) ? on_matching : off_matching;
    }

    PlaneGraph g = seed;
    std::vector<std::vector<EdgeId>> segments(seed.edge_count());
    for (EdgeId e = 0; e < seed.edge_count(); ++e) {
        const int before = g.edge_count();
        g = subdivide_edge(g, e, out.subdivisions[e]);
        segments[e].push_back(e);
        for (EdgeId s = before; s < g.edge_count(); ++s)
            segments[e].push_back(s);
    }
    size_t next_replacement = 0;
    for (EdgeId e = 0; e < seed.edge_count(); ++e) {
        const FaceId left = seed.face_of_dart(2 * e);
        const FaceId right = seed.face_of_dart(2 * e + 1);
        const GlueSide side = left <= right ? GlueSide::Forward : GlueSide::Backward;
        for (EdgeId s : segments[e]) {
            g = glue_triangulation_on_edge(g, s, replacements[next_replacement % replacements.size()], side);
            ++next_replacement;
        }
    }
    b.base = g;
    ensure(g.vertex_count() == t + (k * k - k - 5) * (t - 2), "|T'| = t+(k^2-k-5)(t-2)");
    ensure(g.edge_count() == 3 * (k * k - 2 * k - 3) * (t - 2), "e(T') = 3(k^2-2k-3)(t-2)");
    const auto hist = face_size_histogram(g);
    ensure(hist.size() <= 4 || hist[4] == 0, "T' has no 4-faces");

    for (const auto& f : g.faces())
        if (f.size() > 4)
            b.stellation_set.push_back(f.id);
    ensure(static_cast<int>(b.stellation_set.size()) == 2 * t - 4, "one large face per face of T");
    const auto extra = choose(faces_of_size(g, 3), r, options.choice);
    b.stellation_set.insert(b.stellation_set.end(), extra.begin(), extra.end());
    finish(b);
    for (VertexId v = 0; v < t; ++v)
        b.landmarks.push_back({"t" + std::to_string(v), v});
    b.expected_colors = g.edge_count() + 2 * t - 4 + r;
    ensure(b.result.vertex_count() == n, "|T*| = n");
    return out;
}

PlaneGraph build_wheel(int q)
{
    if (q < 3)
        throw Error(ErrorCode::InvalidParam, "wheels need q >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= q; ++i)
        edges.push_back({0, i});
    for (int i = 1; i <= q; ++i)
        edges.push_back({i, i % q + 1});
    auto spoke = [](int i) { return i - 1; };
    auto rim = [q](int i) { return q + (i + q - 1) % q; }; // edge (i, i+1), i taken mod q in [1, q]
    Rotation rot(q + 1);
    for (int i = q; i >= 1; --i)
        rot[0].push_back(spoke(i));
    for (int i = 1; i <= q; ++i)
        rot[i] = {spoke(i), rim(i), rim(i == 1 ? q : i - 1)};
    return PlaneGraph::build(q + 1, std::move(edges), std::move(rot), 2 * rim(1) + 1);
}

BuildBundle build_wheel_bundle(int q)
{
    BuildBundle b;
    b.params.kind = ConstructionKind::Wheel;
    b.params.q = q;
    b.params.n = q + 1;
    b.base = build_wheel(q);
    b.result = b.base;
    b.landmarks.push_back({"v", 0});
    for (int i = 1; i <= q; ++i)
        b.landmarks.push_back({"v" + std::to_string(i), i});
    b.expected_colors = b.base.edge_count();
    return b;
}

} // namespace rainbow
