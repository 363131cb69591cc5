#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

class PatternSpec {
public:
    enum class Kind { Path, Cycle, Graph };

    static PatternSpec path(int k);
    static PatternSpec cycle(int k);
    static PatternSpec of(Graph g);
    /// "P8", "C5" (case-insensitive).
    static PatternSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    int k() const { return k_; }
    const Graph& graph() const { return graph_; }
    int vertex_count() const;
    int edge_count() const;
    std::string name() const;

private:
    Kind kind_ = Kind::Path;
    int k_ = 1;
    Graph graph_;
};

/// A found copy: vertices in pattern order and the host edges used.
struct Witness {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

struct SearchBudget {
    int max_path_vertices = 40;
    int max_graph_vertices = 10;
    int max_longest_path_vertices = 40;
};

/// Colour per edge id; any non-negative integers.
using ColorView = std::span<const int>;

/// Exact search for a copy of `pattern` whose edges have pairwise distinct colours.
std::optional<Witness> find_rainbow(const Graph& g, ColorView colors, const PatternSpec& pattern,
                                    const SearchBudget& budget = {});

/// Exact search for any copy of `pattern` (uncoloured containment).
std::optional<Witness> contains(const Graph& g, const PatternSpec& pattern, const SearchBudget& budget = {});

/// Every copy of the pattern, as ascending edge-id lists, each listed once.
std::vector<std::vector<EdgeId>> all_copies(const Graph& g, const PatternSpec& pattern,
                                            const SearchBudget& budget = {});

struct LongestPath {
    int vertices = 0;
    Witness witness;
};

/// Longest path by vertex count. With a non-empty filter both endpoints must
/// satisfy filter[v] != 0. Subset dynamic programming up to 24 vertices,
/// branch and bound above that.
LongestPath longest_path(const Graph& g, std::span<const char> endpoint_filter = {},
                         const SearchBudget& budget = {});

} // namespace rainbow
