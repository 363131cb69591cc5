#include "rainbow/rainbow_search.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <set>

namespace rainbow {

PatternSpec PatternSpec::path(int k)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidParam, "paths need k >= 1");
    PatternSpec p;
    p.kind_ = Kind::Path;
    p.k_ = k;
    p.graph_ = path_graph(k);
    return p;
}

PatternSpec PatternSpec::cycle(int k)
{
    if (k < 3)
        throw Error(ErrorCode::InvalidParam, "cycles need k >= 3");
    PatternSpec p;
    p.kind_ = Kind::Cycle;
    p.k_ = k;
    p.graph_ = cycle_graph(k);
    return p;
}

PatternSpec PatternSpec::of(Graph g)
{
    PatternSpec p;
    p.kind_ = Kind::Graph;
    p.k_ = g.vertex_count();
    p.graph_ = std::move(g);
    return p;
}

PatternSpec PatternSpec::parse(std::string_view text)
{
    if (text.size() >= 2) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
        std::string_view digits = text.substr(1);
        if (digits.front() == '_')
            digits.remove_prefix(1);
        int k = 0;
        bool ok = !digits.empty();
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                ok = false;
                break;
            }
            k = k * 10 + (ch - '0');
        }
        if (ok && c == 'P')
            return path(k);
        if (ok && c == 'C')
            return cycle(k);
    }
    throw Error(ErrorCode::Parse, "pattern must look like P8 or C5, got '" + std::string(text) + "'");
}

int PatternSpec::vertex_count() const { return graph_.vertex_count(); }
int PatternSpec::edge_count() const { return graph_.edge_count(); }

std::string PatternSpec::name() const
{
    switch (kind_) {
    case Kind::Path: return "P" + std::to_string(k_);
    case Kind::Cycle: return "C" + std::to_string(k_);
    case Kind::Graph: break;
    }
    return "G" + std::to_string(graph_.vertex_count()) + "e" + std::to_string(graph_.edge_count());
}

namespace {

class Engine {
public:
    using Visitor = std::function<bool(const Witness&)>;

    Engine(const Graph& g, ColorView colors, Visitor visit, bool each_copy_once)
        : g_(g), colors_(colors), visit_(std::move(visit)), once_(each_copy_once), visited_(g.vertex_count(), 0)
    {
        if (!colors_.empty()) {
            if (static_cast<int>(colors_.size()) != g.edge_count())
                throw Error(ErrorCode::InvalidParam, "colouring does not cover every edge");
            int top = 0;
            for (int c : colors_) {
                if (c < 0)
                    throw Error(ErrorCode::InvalidParam, "negative colour");
                top = std::max(top, c);
            }
            used_.assign(top + 1, 0);
        }
        order_.resize(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto inc = std::vector<Incidence>(g.incident(v).begin(), g.incident(v).end());
            std::stable_sort(inc.begin(), inc.end(), [&](const Incidence& a, const Incidence& b) {
                return g.degree(a.to) > g.degree(b.to);
            });
            order_[v] = std::move(inc);
        }
    }

    void run(const PatternSpec& p)
    {
        switch (p.kind()) {
        case PatternSpec::Kind::Path: run_path(p.k()); break;
        case PatternSpec::Kind::Cycle: run_cycle(p.k()); break;
        case PatternSpec::Kind::Graph: run_graph(p.graph()); break;
        }
    }

private:
    bool color_free(EdgeId e) const { return colors_.empty() || !used_[colors_[e]]; }
    void take(EdgeId e)
    {
        if (!colors_.empty())
            used_[colors_[e]] = 1;
    }
    void release(EdgeId e)
    {
        if (!colors_.empty())
            used_[colors_[e]] = 0;
    }

    bool emit() { return stop_ = visit_(current_); }

    void run_path(int k)
    {
        for (VertexId s = 0; s < g_.vertex_count() && !stop_; ++s) {
            current_.vertices = {s};
            current_.edges.clear();
            visited_[s] = 1;
            extend_path(k);
            visited_[s] = 0;
        }
    }

    void extend_path(int k)
    {
        if (static_cast<int>(current_.vertices.size()) == k) {
            if (!once_ || k == 1 || current_.vertices.front() < current_.vertices.back())
                emit();
            return;
        }
        const VertexId last = current_.vertices.back();
        for (const auto& inc : order_[last]) {
            if (visited_[inc.to] || !color_free(inc.edge))
                continue;
            visited_[inc.to] = 1;
            take(inc.edge);
            current_.vertices.push_back(inc.to);
            current_.edges.push_back(inc.edge);
            extend_path(k);
            current_.vertices.pop_back();
            current_.edges.pop_back();
            release(inc.edge);
            visited_[inc.to] = 0;
            if (stop_)
                return;
        }
    }

    void run_cycle(int k)
    {
        for (VertexId s = 0; s < g_.vertex_count() && !stop_; ++s) {
            anchor_ = s;
            current_.vertices = {s};
            current_.edges.clear();
            visited_[s] = 1;
            extend_cycle(k);
            visited_[s] = 0;
        }
    }

    void extend_cycle(int k)
    {
        const VertexId last = current_.vertices.back();
        if (static_cast<int>(current_.vertices.size()) == k) {
            if (once_ && current_.vertices[1] > last)
                return;
            const auto closing = g_.edge_between(last, anchor_);
            if (!closing || !color_free(*closing))
                return;
            current_.edges.push_back(*closing);
            emit();
            current_.edges.pop_back();
            return;
        }
        for (const auto& inc : order_[last]) {
            if (inc.to < anchor_ || visited_[inc.to] || !color_free(inc.edge))
                continue;
            visited_[inc.to] = 1;
            take(inc.edge);
            current_.vertices.push_back(inc.to);
            current_.edges.push_back(inc.edge);
            extend_cycle(k);
            current_.vertices.pop_back();
            current_.edges.pop_back();
            release(inc.edge);
            visited_[inc.to] = 0;
            if (stop_)
                return;
        }
    }

    void run_graph(const Graph& pattern)
    {
        const int pn = pattern.vertex_count();
        if (pn == 0) {
            current_ = {};
            emit();
            return;
        }
        // Pattern vertices in BFS order from the highest-degree vertex of each component.
        std::vector<char> placed(pn, 0);
        pattern_order_.clear();
        while (static_cast<int>(pattern_order_.size()) < pn) {
            VertexId root = -1;
            for (VertexId v = 0; v < pn; ++v)
                if (!placed[v] && (root < 0 || pattern.degree(v) > pattern.degree(root)))
                    root = v;
            placed[root] = 1;
            size_t head = pattern_order_.size();
            pattern_order_.push_back(root);
            while (head < pattern_order_.size()) {
                const VertexId v = pattern_order_[head++];
                for (const auto& inc : pattern.incident(v))
                    if (!placed[inc.to]) {
                        placed[inc.to] = 1;
                        pattern_order_.push_back(inc.to);
                    }
            }
        }
        position_.assign(pn, -1);
        for (int i = 0; i < pn; ++i)
            position_[pattern_order_[i]] = i;
        image_.assign(pn, -1);
        pattern_ = &pattern;
        if (once_)
            seen_.clear();
        map_next(0);
    }

    void map_next(int depth)
    {
        const Graph& p = *pattern_;
        if (depth == p.vertex_count()) {
            current_.vertices.assign(p.vertex_count(), -1);
            for (VertexId v = 0; v < p.vertex_count(); ++v)
                current_.vertices[v] = image_[v];
            current_.edges = mapped_edges_;
            if (once_) {
                auto key = mapped_edges_;
                std::sort(key.begin(), key.end());
                if (!seen_.insert(key).second)
                    return;
            }
            emit();
            return;
        }
        const VertexId pv = pattern_order_[depth];
        VertexId parent = -1;
        for (const auto& inc : p.incident(pv))
            if (position_[inc.to] < depth) {
                parent = inc.to;
                break;
            }

        auto try_vertex = [&](VertexId hv) {
            if (visited_[hv] || g_.degree(hv) < p.degree(pv))
                return;
            std::vector<EdgeId> added;
            bool ok = true;
            for (const auto& inc : p.incident(pv)) {
                if (position_[inc.to] >= depth)
                    continue;
                const auto he = g_.edge_between(hv, image_[inc.to]);
                if (!he || !color_free(*he)) {
                    ok = false;
                    break;
                }
                take(*he);
                added.push_back(*he);
            }
            if (ok) {
                visited_[hv] = 1;
                image_[pv] = hv;
                mapped_edges_.insert(mapped_edges_.end(), added.begin(), added.end());
                map_next(depth + 1);
                mapped_edges_.resize(mapped_edges_.size() - added.size());
                image_[pv] = -1;
                visited_[hv] = 0;
            }
            for (EdgeId e : added)
                release(e);
        };

        if (parent >= 0) {
            for (const auto& inc : order_[image_[parent]]) {
                try_vertex(inc.to);
                if (stop_)
                    return;
            }
        } else {
            for (VertexId hv = 0; hv < g_.vertex_count(); ++hv) {
                try_vertex(hv);
                if (stop_)
                    return;
            }
        }
    }

    const Graph& g_;
    ColorView colors_;
    Visitor visit_;
    bool once_;
    bool stop_ = false;
    std::vector<char> visited_;
    std::vector<char> used_;
    std::vector<std::vector<Incidence>> order_;
    Witness current_;
    VertexId anchor_ = 0;

    const Graph* pattern_ = nullptr;
    std::vector<VertexId> pattern_order_;
    std::vector<int> position_;
    std::vector<VertexId> image_;
    std::vector<EdgeId> mapped_edges_;
    std::set<std::vector<EdgeId>> seen_;
};

void check_budget(const PatternSpec& p, const SearchBudget& budget)
{
    const int limit =
        p.kind() == PatternSpec::Kind::Graph ? budget.max_graph_vertices : budget.max_path_vertices;
    if (p.vertex_count() > limit)
        throw Error(ErrorCode::PatternTooLarge, p.name() + " exceeds the search budget of " +
                                                    std::to_string(limit) + " vertices");
}

std::optional<Witness> first_copy(const Graph& g, ColorView colors, const PatternSpec& pattern,
                                  const SearchBudget& budget)
{
    check_budget(pattern, budget);
    std::optional<Witness> found;
    Engine engine(
        g, colors,
        [&](const Witness& w) {
            found = w;
            return true;
        },
        false);
    engine.run(pattern);
    return found;
}

Witness rebuild_witness(const Graph& g, const std::vector<VertexId>& path)
{
    Witness w;
    w.vertices = path;
    for (size_t i = 1; i < path.size(); ++i)
        w.edges.push_back(*g.edge_between(path[i - 1], path[i]));
    return w;
}

LongestPath longest_path_dp(const Graph& g, std::span<const char> filter)
{
    const int n = g.vertex_count();
    auto allowed = [&](VertexId v) { return filter.empty() || filter[v] != 0; };
    std::uint32_t end_mask = 0;
    std::vector<std::uint32_t> nbr(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (allowed(v))
            end_mask |= 1u << v;
        for (const auto& inc : g.incident(v))
            nbr[v] |= 1u << inc.to;
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> ends(static_cast<size_t>(full) + 1, 0);
    for (VertexId v = 0; v < n; ++v)
        if (allowed(v))
            ends[1u << v] |= 1u << v;

    int best = 0;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        std::uint32_t e = ends[mask];
        if (!e)
            continue;
        const int size = std::popcount(mask);
        if ((e & end_mask) && size > best) {
            best = size;
            best_mask = mask;
        }
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t out = nbr[v] & ~mask;
            while (out) {
                const int w = std::countr_zero(out);
                out &= out - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    if (best == 0)
        return {};

    std::vector<VertexId> path;
    std::uint32_t mask = best_mask;
    VertexId v = std::countr_zero(ends[mask] & end_mask);
    path.push_back(v);
    while (std::popcount(mask) > 1) {
        const std::uint32_t prev = mask & ~(1u << v);
        const std::uint32_t candidates = ends[prev] & nbr[v];
        v = std::countr_zero(candidates);
        path.push_back(v);
        mask = prev;
    }
    return {best, rebuild_witness(g, path)};
}

// Branch and bound over simple paths, vertex sets as 64-bit masks. Besides
// plain reachability, the bound uses a greedy independent set I: along a
// path every I-vertex but the last is followed by a vertex outside I.
class LongestPathSearch {
public:
    LongestPathSearch(const Graph& g, std::span<const char> filter) : g_(g), n_(g.vertex_count()), nbr_(n_, 0)
    {
        for (VertexId v = 0; v < n_; ++v) {
            if (filter.empty() || filter[v] != 0)
                allowed_ |= bit(v);
            for (const auto& inc : g.incident(v))
                nbr_[v] |= bit(inc.to);
        }
        std::vector<VertexId> order(n_);
        for (VertexId v = 0; v < n_; ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
        std::uint64_t blocked = 0;
        for (VertexId v : order)
            if (!(blocked & bit(v))) {
                indep_ |= bit(v);
                blocked |= bit(v) | nbr_[v];
            }
    }

    LongestPath run()
    {
        for (VertexId s = 0; s < n_ && best_ < n_; ++s) {
            if (!(allowed_ & bit(s)))
                continue;
            path_ = {s};
            dfs(s, bit(s));
        }
        if (best_ == 0)
            return {};
        return {best_, rebuild_witness(g_, best_path_)};
    }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    std::uint64_t reachable(VertexId from, std::uint64_t used) const
    {
        std::uint64_t seen = 0, frontier = nbr_[from] & ~used;
        while (frontier) {
            seen |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= nbr_[std::countr_zero(f)];
            frontier = next & ~used & ~seen;
        }
        return seen;
    }

    void dfs(VertexId last, std::uint64_t used)
    {
        const int len = static_cast<int>(path_.size());
        if ((allowed_ & bit(last)) && len > best_) {
            best_ = len;
            best_path_ = path_;
        }
        const std::uint64_t r = reachable(last, used);
        if (!(r & allowed_))
            return;
        const int outside = std::popcount(r & ~indep_);
        const int inside = std::popcount(r & indep_);
        if (len + outside + std::min(inside, outside + 1) <= best_)
            return;
        for (std::uint64_t out = nbr_[last] & ~used; out; out &= out - 1) {
            const VertexId w = std::countr_zero(out);
            path_.push_back(w);
            dfs(w, used | bit(w));
            path_.pop_back();
            if (best_ == n_)
                return;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint64_t> nbr_;
    std::uint64_t allowed_ = 0;
    std::uint64_t indep_ = 0;
    std::vector<VertexId> path_;
    std::vector<VertexId> best_path_;
    int best_ = 0;
};

} // namespace

std::optional<Witness> find_rainbow(const Graph& g, ColorView colors, const PatternSpec& pattern,
                                    const SearchBudget& budget)
{
    if (static_cast<int>(colors.size()) != g.edge_count())
        throw Error(ErrorCode::InvalidParam, "colouring does not cover every edge");
    return first_copy(g, colors, pattern, budget);
}

std::optional<Witness> contains(const Graph& g, const PatternSpec& pattern, const SearchBudget& budget)
{
    return first_copy(g, {}, pattern, budget);
}

std::vector<std::vector<EdgeId>> all_copies(const Graph& g, const PatternSpec& pattern, const SearchBudget& budget)
{
    check_budget(pattern, budget);
    std::vector<std::vector<EdgeId>> out;
    Engine engine(
        g, {},
        [&](const Witness& w) {
            auto edges = w.edges;
            std::sort(edges.begin(), edges.end());
            out.push_back(std::move(edges));
            return false;
        },
        true);
    engine.run(pattern);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LongestPath longest_path(const Graph& g, std::span<const char> endpoint_filter, const SearchBudget& budget)
{
    if (g.vertex_count() > budget.max_longest_path_vertices)
        throw Error(ErrorCode::TooLarge, "longest path search is capped at " +
                                             std::to_string(budget.max_longest_path_vertices) + " vertices");
    if (!endpoint_filter.empty() && static_cast<int>(endpoint_filter.size()) != g.vertex_count())
        throw Error(ErrorCode::InvalidParam, "endpoint filter has wrong length");
    if (g.vertex_count() <= 24)
        return longest_path_dp(g, endpoint_filter);
    if (g.vertex_count() > 64)
        throw Error(ErrorCode::TooLarge, "longest path search handles at most 64 vertices");
    return LongestPathSearch(g, endpoint_filter).run();
}

} // namespace rainbow
