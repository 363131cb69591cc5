#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/colorings.hpp"
#include "rainbow/plane_graph.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

struct ExactOptions {
    int max_edges = 16;
    /// Worker threads for catalog-wide searches.
    int threads = 1;
    SearchBudget budget;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct ArResult {
    Graph host;
    std::string pattern;
    int value = 0;
    EdgeColoring witness;
    /// The host has no copy of the pattern; value is then e(host).
    bool degenerate = false;
    int pattern_copies = 0;
    SearchStats stats;
};

/// Maximum number of colours on G with no rainbow copy of the pattern,
/// by branch and bound over restricted-growth colourings.
ArResult exact_ar_fixed_host(const Graph& g, const PatternSpec& pattern, const ExactOptions& options = {});

/// The same search without any pruning beyond rejecting rainbow copies at the
/// leaves. Exponential in e(G); meant as a cross-check on tiny hosts.
ArResult exhaustive_ar_fixed_host(const Graph& g, const PatternSpec& pattern, int max_edges = 10);

struct TriangulationCatalog {
    int n = 0;
    std::vector<PlaneGraph> members; // sorted by canonical label
};

/// All plane triangulations on n vertices up to isomorphism (4 <= n <= 8).
/// With a cache directory the catalog is read from, or written to,
/// `triangulations-<n>.txt` there.
TriangulationCatalog enumerate_triangulations(int n, const std::optional<std::filesystem::path>& cache_dir = {});

struct PlanarArResult {
    ArResult best;
    PlaneGraph host;
    /// Value per catalog member; -1 for members without the pattern.
    std::vector<int> values;
};

/// Maximum over the catalog members on n vertices that contain the pattern.
PlanarArResult exact_planar_ar(int n, const PatternSpec& pattern, const ExactOptions& options = {},
                               const std::optional<std::filesystem::path>& cache_dir = {});

} // namespace rainbow
