#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// One step of a face boundary walk: leave `vertex` along `edge`.
struct FaceCorner {
    VertexId vertex;
    EdgeId edge;
    DartId dart;
};

struct Face {
    FaceId id = 0;
    std::vector<FaceCorner> boundary;

    int size() const { return static_cast<int>(boundary.size()); }
};

using Rotation = std::vector<std::vector<EdgeId>>;

/// Connected simple graph together with a genus-0 rotation system.
///
/// Darts: dart 2e runs edge(e).u -> edge(e).v, dart 2e+1 the reverse. The
/// face to the left of a dart continues, at the head vertex, with the edge
/// that follows in that vertex's rotation. Faces are numbered in order of
/// their smallest dart. Values are immutable; every operation below returns
/// a new graph and re-checks the Euler formula.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Validates simplicity, connectivity and V - E + F = 2. Without a
    /// rotation an embedding is computed (NonPlanar if none exists).
    static PlaneGraph build(int n, std::vector<Edge> edges, std::optional<Rotation> rotation = std::nullopt,
                            std::optional<DartId> outer_dart = std::nullopt);

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<Edge>& edges() const { return graph_.edges(); }
    const Edge& edge(EdgeId e) const { return graph_.edge(e); }
    int degree(VertexId v) const { return graph_.degree(v); }
    std::span<const EdgeId> rotation(VertexId v) const { return rotation_[v]; }
    const Rotation& rotation_system() const { return rotation_; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_[f]; }
    FaceId face_of_dart(DartId d) const { return face_of_dart_[d]; }
    DartId outer_dart() const { return outer_dart_; }
    FaceId outer_face() const { return face_of_dart_[outer_dart_]; }

    VertexId tail(DartId d) const { return d % 2 == 0 ? edge(d / 2).u : edge(d / 2).v; }
    VertexId head(DartId d) const { return d % 2 == 0 ? edge(d / 2).v : edge(d / 2).u; }
    static DartId reverse(DartId d) { return d ^ 1; }
    std::optional<DartId> dart(VertexId from, VertexId to) const;
    DartId next_in_face(DartId d) const;

    /// Neighbours of v in rotation order.
    std::vector<VertexId> neighbors(VertexId v) const;

private:
    Graph graph_;
    Rotation rotation_;
    std::vector<int> position_;      // per dart: index of the edge in rotation(tail)
    std::vector<FaceId> face_of_dart_;
    std::vector<Face> faces_;
    DartId outer_dart_ = 0;
};

bool is_plane_triangulation(const PlaneGraph& g);

/// f_i for i up to the largest face; index i holds the number of i-faces.
std::vector<int> face_size_histogram(const PlaneGraph& g);

/// Adds a vertex inside `face` joined to the boundary vertices at the given
/// corner positions (ascending, distinct vertices). Returns the new graph;
/// the new vertex gets id vertex_count().
PlaneGraph add_vertex_in_face(const PlaneGraph& g, FaceId face, std::span<const int> corners);

/// Joins a new vertex to every boundary vertex of `face`.
PlaneGraph stellate_face(const PlaneGraph& g, FaceId face);

/// Stellates several faces of g (ids refer to g). New vertices are numbered
/// in the order of `faces`.
PlaneGraph stellate_faces(const PlaneGraph& g, std::span<const FaceId> faces);

/// Replaces edge e by a path with `times` internal vertices. The first path
/// segment keeps id e; the remaining segments are appended.
PlaneGraph subdivide_edge(const PlaneGraph& g, EdgeId e, int times);

enum class GlueSide { Forward, Backward };

/// Glues the plane triangulation `d` onto edge e of g. The anchor dart of d
/// must lie on d's outer face; d's copy of the anchor edge is identified with
/// e and the rest of d fills the face left of e's Forward (or Backward) dart.
PlaneGraph glue_triangulation_on_edge(const PlaneGraph& g, EdgeId e, const PlaneGraph& d, GlueSide side,
                                      std::optional<DartId> anchor = std::nullopt);

/// Diagonal flip in a triangulation; the new diagonal keeps id e. Returns
/// nullopt when the flip would create a parallel edge.
std::optional<PlaneGraph> flip_edge(const PlaneGraph& g, EdgeId e);

struct DualGraph {
    int vertex_count = 0;
    /// Indexed by primal edge id: the two faces on either side.
    std::vector<std::pair<FaceId, FaceId>> edges;
};

DualGraph dual(const PlaneGraph& g);

/// Perfect matching of the dual, returned as primal edge ids (ascending).
/// `accept` can reject complete matchings; search continues until one is
/// accepted. Throws NoMatching when none exists.
std::vector<EdgeId> perfect_matching(const DualGraph& dual,
                                     const std::function<bool(std::span<const EdgeId>)>& accept = {});

} // namespace rainbow
