#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rainbow/constructions.hpp"
#include "rainbow/plane_graph.hpp"

namespace rainbow {

/// Total map edge id -> colour in 1..m.
class EdgeColoring {
public:
    EdgeColoring() = default;
    /// Colours must be >= 1; m defaults to the largest colour used.
    explicit EdgeColoring(std::vector<int> colors, int m = 0);

    int edge_count() const { return static_cast<int>(colors_.size()); }
    int m() const { return m_; }
    int color(EdgeId e) const { return colors_[e]; }
    const std::vector<int>& colors() const { return colors_; }
    /// Every colour in 1..m is used.
    bool is_surjective() const;
    int distinct_colors() const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<int> colors_;
    int m_ = 0;
};

/// Base edges get distinct colours 1..e(base); the edges added inside the
/// i-th stellated face all get colour e(base)+i.
EdgeColoring rainbow_plus_faces(const BuildBundle& bundle);

/// Explicit colouring of W_q (build_wheel numbering) with spoke i coloured i.
EdgeColoring wheel_coloring(int q, int k);

struct VertexPalette {
    VertexId vertex = 0;
    std::vector<int> colors; // ascending, distinct
};

/// Colours on the wheel around v: the edges at v and the edges joining
/// rotation-consecutive neighbours.
VertexPalette vertex_palette(const PlaneGraph& t, const EdgeColoring& c, VertexId v);

struct PaletteAudit {
    long long palette_sum = 0;
    long long four_m = 0;
    bool pass = false;
};

PaletteAudit palette_sum_audit(const PlaneGraph& t, const EdgeColoring& c);

struct WheelColorStats {
    int color = 0;
    int multiplicity = 0;
    int spokes = 0;
    int rim = 0;
    /// eta[j]: central k-cycles holding exactly j edges of this colour (j >= 1).
    std::vector<int> eta;
    /// Central k-cycles holding at least two edges of this colour.
    int eta_total = 0;
};

struct WheelAudit {
    int q = 0;
    int k = 0;
    std::vector<WheelColorStats> per_color;
    /// class_sizes[l] = number of colours used exactly l times.
    std::vector<int> class_sizes;
    int rainbow_central_cycles = 0;
    bool multiplicities_consistent = false; // spokes + rim = multiplicity, sum l|A_l| = 2q
    bool incidence_identity = false;        // sum_j j eta_j = 2 spokes + (k-2) rim
    bool eta_bound = false;                 // eta <= (k-2) l / 2
    /// k = 6 only: every colour used twice blocks at most three central cycles.
    bool pair_bound = true;

    bool all_pass() const { return multiplicities_consistent && incidence_identity && eta_bound && pair_bound; }
};

/// Counts over the q central k-cycles of W_q (build_wheel numbering).
WheelAudit wheel_audit(int q, int k, const EdgeColoring& c);

/// Edge ids of the central k-cycle through spokes i and i+k-2 (rim indices 1..q).
std::vector<EdgeId> central_cycle_edges(int q, int k, int i);

// Text format: `m <count>` then `c <edge id> <colour>` per edge.
std::string write_coloring(const EdgeColoring& c);
EdgeColoring read_coloring(std::string_view text);

} // namespace rainbow
