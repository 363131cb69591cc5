#include "rainbow/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "rainbow/canonical.hpp"
#include "rainbow/graph_io.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ArResult degenerate_result(const Graph& g, const PatternSpec& pattern)
{
    ArResult res;
    res.host = g;
    res.pattern = pattern.name();
    res.degenerate = true;
    res.value = g.edge_count();
    std::vector<int> colors(g.edge_count());
    std::iota(colors.begin(), colors.end(), 1);
    res.witness = EdgeColoring(std::move(colors), g.edge_count());
    return res;
}

void check_inputs(const Graph& g, const PatternSpec& pattern, int max_edges)
{
    if (g.edge_count() > max_edges)
        throw Error(ErrorCode::TooLarge, "host has " + std::to_string(g.edge_count()) + " edges, budget is " +
                                             std::to_string(max_edges));
    if (g.edge_count() > 64)
        throw Error(ErrorCode::TooLarge, "exact search is limited to 64 edges");
    if (pattern.edge_count() < 2)
        throw Error(ErrorCode::InvalidParam, "patterns need at least two edges");
}

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, const std::vector<std::vector<EdgeId>>& copies) : edges_(g.edge_count())
    {
        std::vector<int> membership(edges_, 0);
        for (const auto& c : copies)
            for (EdgeId e : c)
                ++membership[e];
        order_.resize(edges_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](EdgeId a, EdgeId b) { return membership[a] > membership[b]; });
        std::vector<int> position(edges_);
        for (int p = 0; p < edges_; ++p)
            position[order_[p]] = p;

        ending_at_.resize(edges_);
        for (const auto& c : copies) {
            std::vector<int> pos;
            std::uint64_t mask = 0;
            for (EdgeId e : c) {
                pos.push_back(position[e]);
                mask |= std::uint64_t{1} << position[e];
            }
            std::sort(pos.begin(), pos.end());
            masks_.push_back(mask);
            ending_at_[pos.back()].push_back(static_cast<int>(copy_positions_.size()));
            copy_positions_.push_back(std::move(pos));
        }
        // Greedy packing prefers copies with few edges left, i.e. those finishing early.
        std::vector<int> idx(masks_.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return copy_positions_[a].back() < copy_positions_[b].back(); });
        std::vector<std::uint64_t> sorted;
        for (int i : idx)
            sorted.push_back(masks_[i]);
        pack_masks_ = std::move(sorted);
        color_.assign(edges_, -1);
    }

    void run()
    {
        dfs(0);
    }

    int best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

    EdgeColoring witness() const
    {
        std::vector<int> colors(edges_);
        for (int p = 0; p < edges_; ++p)
            colors[order_[p]] = best_color_[p] + 1;
        return EdgeColoring(std::move(colors), best_);
    }

private:
    bool makes_rainbow(int p) const
    {
        for (int c : ending_at_[p]) {
            const auto& pos = copy_positions_[c];
            bool distinct = true;
            for (size_t i = 0; i < pos.size() && distinct; ++i)
                for (size_t j = i + 1; j < pos.size(); ++j)
                    if (color_[pos[i]] == color_[pos[j]]) {
                        distinct = false;
                        break;
                    }
            if (distinct)
                return true;
        }
        return false;
    }

    // Every copy whose coloured edges all opened new classes still needs one
    // of its uncoloured edges to repeat a colour; disjoint such copies each
    // cost a class.
    int packing(int depth) const
    {
        const std::uint64_t upper = depth >= 64 ? 0 : ~((std::uint64_t{1} << depth) - 1);
        std::uint64_t used = 0;
        int count = 0;
        for (std::uint64_t mask : pack_masks_) {
            if (mask & joined_)
                continue;
            const std::uint64_t rest = mask & upper;
            if (!rest || (rest & used))
                continue;
            used |= rest;
            ++count;
        }
        return count;
    }

    void dfs(int depth)
    {
        ++nodes_;
        if (depth == edges_) {
            if (classes_ > best_) {
                best_ = classes_;
                best_color_ = color_;
            }
            return;
        }
        if (classes_ + (edges_ - depth) - packing(depth) <= best_)
            return;
        const std::uint64_t bit = std::uint64_t{1} << depth;
        for (int c = classes_; c >= 0; --c) {
            color_[depth] = c;
            const bool fresh = c == classes_;
            if (fresh)
                ++classes_;
            else
                joined_ |= bit;
            if (!makes_rainbow(depth))
                dfs(depth + 1);
            if (fresh)
                --classes_;
            else
                joined_ &= ~bit;
            if (classes_ + (edges_ - depth - 1) <= best_)
                break;
        }
        color_[depth] = -1;
    }

    int edges_;
    std::vector<EdgeId> order_;
    std::vector<std::vector<int>> copy_positions_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> pack_masks_;
    std::vector<std::vector<int>> ending_at_;
    std::vector<int> color_;
    std::vector<int> best_color_;
    std::uint64_t joined_ = 0;
    std::uint64_t nodes_ = 0;
    int classes_ = 0;
    int best_ = 0;
};

} // namespace

ArResult exact_ar_fixed_host(const Graph& g, const PatternSpec& pattern, const ExactOptions& options)
{
    check_inputs(g, pattern, options.max_edges);
    const auto start = Clock::now();
    const auto copies = all_copies(g, pattern, options.budget);
    if (copies.empty()) {
        auto res = degenerate_result(g, pattern);
        res.stats.seconds = seconds_since(start);
        return res;
    }
    PartitionSearch search(g, copies);
    search.run();
    ArResult res;
    res.host = g;
    res.pattern = pattern.name();
    res.value = search.best();
    res.witness = search.witness();
    res.pattern_copies = static_cast<int>(copies.size());
    res.stats.nodes = search.nodes();
    res.stats.seconds = seconds_since(start);
    return res;
}

ArResult exhaustive_ar_fixed_host(const Graph& g, const PatternSpec& pattern, int max_edges)
{
    check_inputs(g, pattern, max_edges);
    const auto start = Clock::now();
    const auto copies = all_copies(g, pattern);
    if (copies.empty())
        return degenerate_result(g, pattern);
    const int e = g.edge_count();
    std::vector<int> color(e, 0), best_color;
    int best = 0;
    std::uint64_t nodes = 0;
    auto has_rainbow = [&]() {
        for (const auto& c : copies) {
            std::vector<int> seen;
            for (EdgeId x : c)
                seen.push_back(color[x]);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) == seen.end())
                return true;
        }
        return false;
    };
    std::function<void(int, int)> rec = [&](int i, int classes) {
        ++nodes;
        if (i == e) {
            if (classes > best && !has_rainbow()) {
                best = classes;
                best_color = color;
            }
            return;
        }
        for (int c = 0; c <= classes; ++c) {
            color[i] = c;
            rec(i + 1, c == classes ? classes + 1 : classes);
        }
    };
    rec(0, 0);
    ArResult res;
    res.host = g;
    res.pattern = pattern.name();
    res.value = best;
    for (int& c : best_color)
        ++c;
    res.witness = EdgeColoring(best_color, best);
    res.pattern_copies = static_cast<int>(copies.size());
    res.stats.nodes = nodes;
    res.stats.seconds = seconds_since(start);
    return res;
}

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, int n)
{
    return dir / ("triangulations-" + std::to_string(n) + ".txt");
}

std::optional<TriangulationCatalog> load_cached(const std::filesystem::path& dir, int n)
{
    const auto path = cache_file(dir, n);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    TriangulationCatalog cat;
    cat.n = n;
    try {
        cat.members = read_graph_list(buf.str());
    } catch (const Error&) {
        return std::nullopt;
    }
    for (const auto& g : cat.members)
        if (g.vertex_count() != n || !is_plane_triangulation(g))
            return std::nullopt;
    return cat;
}

void store_cached(const std::filesystem::path& dir, const TriangulationCatalog& cat)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = cache_file(dir, cat.n);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << write_graph_list(cat.members);
    }
    std::filesystem::rename(tmp, path, ec);
}

TriangulationCatalog generate(int n)
{
    std::map<CanonicalLabel, PlaneGraph> found;
    if (n == 4) {
        found.emplace(canonical_label(complete_graph(4)), stacked_triangulation(4));
    } else {
        const auto smaller = generate(n - 1);
        std::vector<PlaneGraph> queue;
        for (const auto& g : smaller.members)
            for (FaceId f = 0; f < g.face_count(); ++f) {
                PlaneGraph s = stellate_face(g, f);
                auto label = canonical_label(s.graph());
                if (found.emplace(label, s).second)
                    queue.push_back(std::move(s));
            }
        // Every triangulation on n vertices is reachable by diagonal flips.
        while (!queue.empty()) {
            PlaneGraph g = std::move(queue.back());
            queue.pop_back();
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                auto flipped = flip_edge(g, e);
                if (!flipped)
                    continue;
                auto label = canonical_label(flipped->graph());
                if (found.emplace(label, *flipped).second)
                    queue.push_back(std::move(*flipped));
            }
        }
    }
    TriangulationCatalog cat;
    cat.n = n;
    for (auto& [label, g] : found)
        cat.members.push_back(std::move(g));
    return cat;
}

} // namespace

TriangulationCatalog enumerate_triangulations(int n, const std::optional<std::filesystem::path>& cache_dir)
{
    if (n > 8)
        throw Error(ErrorCode::TooLarge, "enumeration is limited to n <= 8");
    if (n < 4)
        throw Error(ErrorCode::InvalidParam, "enumeration starts at n = 4");
    if (cache_dir)
        if (auto cached = load_cached(*cache_dir, n))
            return *cached;
    auto cat = generate(n);
    if (cache_dir)
        store_cached(*cache_dir, cat);
    return cat;
}

PlanarArResult exact_planar_ar(int n, const PatternSpec& pattern, const ExactOptions& options,
                               const std::optional<std::filesystem::path>& cache_dir)
{
    const auto start = Clock::now();
    const auto cat = enumerate_triangulations(n, cache_dir);
    const int count = static_cast<int>(cat.members.size());
    std::vector<std::optional<ArResult>> results(count);
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr failure;
    auto worker = [&]() {
        for (int i = next++; i < count; i = next++) {
            try {
                const Graph& g = cat.members[i].graph();
                if (!contains(g, pattern, options.budget))
                    continue;
                results[i] = exact_ar_fixed_host(g, pattern, options);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const int threads = std::clamp(options.threads, 1, std::max(1, count));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    PlanarArResult out;
    int best_index = -1;
    std::uint64_t nodes = 0;
    for (int i = 0; i < count; ++i) {
        out.values.push_back(results[i] ? results[i]->value : -1);
        if (!results[i])
            continue;
        nodes += results[i]->stats.nodes;
        if (best_index < 0 || results[i]->value > results[best_index]->value)
            best_index = i;
    }
    if (best_index < 0)
        throw Error(ErrorCode::EmptyFamily, "no triangulation on " + std::to_string(n) + " vertices contains " +
                                                pattern.name());
    out.best = *results[best_index];
    out.best.stats.nodes = nodes;
    out.best.stats.seconds = seconds_since(start);
    out.host = cat.members[best_index];
    return out;
}

} // namespace rainbow
