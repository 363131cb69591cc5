#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/plane_graph.hpp"

namespace rainbow {

/// Host: a bare plane graph not produced by any builder.
enum class ConstructionKind { LemmaTH, P89, PkSmall, PkMid, PkLarge, C5Star, CkSubdiv, Wheel, Host };

std::string_view to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(std::string_view text);

/// Scalar bookkeeping of a construction. Fields a construction does not use stay 0.
struct ConstructionParams {
    ConstructionKind kind = ConstructionKind::LemmaTH;
    int n = 0;
    int k = 0;
    int p = 0;
    int t = 0;
    int q = 0;
    int m = 0;
    int r = 0;
    int eps = 0;
    int eps_star = 0;
    int eps_prime = 0;

    friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

using Landmarks = std::vector<std::pair<std::string, VertexId>>;

struct BuildBundle {
    ConstructionParams params;
    PlaneGraph base;
    /// Faces of `base`, stellated in this order; new vertex i gets id base.n + i.
    std::vector<FaceId> stellation_set;
    PlaneGraph result;
    Landmarks landmarks;
    /// Colour count the construction's own bookkeeping predicts for the
    /// rainbow-base-plus-faces colouring.
    int expected_colors = 0;

    std::optional<VertexId> landmark(std::string_view name) const;
};

/// How "some r of the 3-faces" is chosen. By default the first candidates in
/// face order; with a seed, a seeded shuffle of the candidates.
struct FaceChoice {
    std::optional<std::uint64_t> shuffle_seed;
};

/// Triangle x, y, v1 with v2..vp stacked into the face of x->y; vi has id i+1,
/// x = 0, y = 1, and the outer face is x, y, vp.
PlaneGraph apex_path_triangulation(int p);

/// Stacked triangulation on n >= 3 vertices (repeated stellation of a triangle).
PlaneGraph stacked_triangulation(int n);

BuildBundle build_lemma_th(int p);
BuildBundle build_p89_host(int k, int n, const FaceChoice& choice = {});
BuildBundle build_pk_small(int k, int n, const FaceChoice& choice = {});
BuildBundle build_pk_mid(int k, int n);
BuildBundle build_pk_large(int k, int n);

/// Picks the branch of the k >= 10 path construction that covers n.
BuildBundle build_pk(int k, int n, const FaceChoice& choice = {});

struct C5HostReport {
    bool connected = false;
    bool c5_free = false;
    bool only_3_and_6_faces = false;
    bool six_faces_edge_disjoint = false;
    bool order_mod_15 = false;
    bool edge_count = false;
    bool face_counts = false;
    int t = 0;

    bool all_pass() const
    {
        return connected && c5_free && only_3_and_6_faces && six_faces_edge_disjoint && order_mod_15 &&
               edge_count && face_counts;
    }
    std::vector<std::string> failures() const;
};

C5HostReport verify_c5_host(const PlaneGraph& h);

/// Stellates every 6-face and r of the 3-faces of a qualifying host.
BuildBundle build_c5_star(const PlaneGraph& host, int r, const FaceChoice& choice = {});

struct CkSubdivOptions {
    /// Triangulation T on t vertices; stacked when absent.
    std::optional<PlaneGraph> seed;
    /// Triangulations on k-1 vertices glued onto the segments, used round-robin.
    /// A stacked one when empty.
    std::vector<PlaneGraph> replacements;
    FaceChoice choice;
};

struct CkSubdivBundle {
    BuildBundle bundle;
    PlaneGraph seed;
    /// Edges of the seed with one per face (empty when k = 2 mod 3).
    std::vector<EdgeId> matching;
    /// Number of subdivision vertices placed on each seed edge.
    std::vector<int> subdivisions;
};

/// Solves (k^2-k-2)(t-2)+2+r = n for (t, r).
std::pair<int, int> ck_subdiv_split(int k, int n);

CkSubdivBundle build_ck_subdiv(int k, int n, const CkSubdivOptions& options = {});

/// Wheel with centre 0 and rim 1..q. Spoke to vertex i has edge id i-1, rim
/// edge (i, i+1) has id q+i-1; the rim bounds the outer face.
PlaneGraph build_wheel(int q);
BuildBundle build_wheel_bundle(int q);

/// The triangular face with exactly these corners, if any.
std::optional<FaceId> find_triangle_face(const PlaneGraph& g, VertexId a, VertexId b, VertexId c);

} // namespace rainbow
