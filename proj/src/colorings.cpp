#include "rainbow/colorings.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rainbow/graph_io.hpp"

namespace rainbow {

EdgeColoring::EdgeColoring(std::vector<int> colors, int m) : colors_(std::move(colors)), m_(m)
{
    int top = 0;
    for (int c : colors_) {
        if (c < 1)
            throw Error(ErrorCode::InvalidParam, "colours start at 1");
        top = std::max(top, c);
    }
    if (m_ == 0)
        m_ = top;
    if (top > m_)
        throw Error(ErrorCode::InvalidParam, "colour exceeds m");
}

bool EdgeColoring::is_surjective() const { return distinct_colors() == m_; }

int EdgeColoring::distinct_colors() const
{
    std::vector<char> seen(m_ + 1, 0);
    int count = 0;
    for (int c : colors_)
        if (!seen[c]) {
            seen[c] = 1;
            ++count;
        }
    return count;
}

EdgeColoring rainbow_plus_faces(const BuildBundle& bundle)
{
    const int base_n = bundle.base.vertex_count();
    const int base_e = bundle.base.edge_count();
    const PlaneGraph& g = bundle.result;
    std::vector<int> colors(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e < base_e) {
            colors[e] = e + 1;
            continue;
        }
        const auto [u, v] = g.edge(e);
        const VertexId added = std::max(u, v);
        if (added < base_n)
            throw Error(ErrorCode::InvalidGraph, "result edge outside base and stellations");
        colors[e] = base_e + (added - base_n) + 1;
    }
    return EdgeColoring(std::move(colors), base_e + static_cast<int>(bundle.stellation_set.size()));
}

EdgeColoring wheel_coloring(int q, int k)
{
    if (k < 5 || q < k - 1)
        throw Error(ErrorCode::InvalidParam, "wheel colouring needs k >= 5 and q >= k-1");
    const int step = k - 3;
    auto exact = [&](int numerator) {
        if (numerator % step != 0)
            throw std::logic_error("rim formula division is not exact");
        return (k - 4) * (numerator / step);
    };
    std::vector<int> colors(2 * q);
    for (int i = 1; i <= q; ++i) {
        colors[i - 1] = i;
        const int r = i % step;
        int c = 0;
        if (r >= 3 && r <= k - 4)
            c = exact(i - r) + q + r - 1;
        else if (r == 2)
            c = exact(i - 2) + q + 1;
        else if (r == 0)
            c = exact(i) + q;
        else if (i != q)
            c = exact(i - 1) + q + 1;
        else
            c = exact(i - 1) + q;
        colors[q + i - 1] = c;
    }
    return EdgeColoring(std::move(colors), (2 * k - 7) * q / (k - 3));
}

VertexPalette vertex_palette(const PlaneGraph& t, const EdgeColoring& c, VertexId v)
{
    VertexPalette out;
    out.vertex = v;
    const auto nbrs = t.neighbors(v);
    for (EdgeId e : t.rotation(v))
        out.colors.push_back(c.color(e));
    for (size_t i = 0; i < nbrs.size() && nbrs.size() >= 3; ++i)
        if (const auto e = t.graph().edge_between(nbrs[i], nbrs[(i + 1) % nbrs.size()]))
            out.colors.push_back(c.color(*e));
    std::sort(out.colors.begin(), out.colors.end());
    out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
    return out;
}

PaletteAudit palette_sum_audit(const PlaneGraph& t, const EdgeColoring& c)
{
    PaletteAudit a;
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        a.palette_sum += static_cast<long long>(vertex_palette(t, c, v).colors.size());
    a.four_m = 4LL * c.m();
    a.pass = a.palette_sum >= a.four_m;
    return a;
}

std::vector<EdgeId> central_cycle_edges(int q, int k, int i)
{
    std::vector<EdgeId> out;
    out.push_back(i - 1);
    int at = i;
    for (int step = 0; step < k - 2; ++step) {
        out.push_back(q + at - 1);
        at = at % q + 1;
    }
    out.push_back(at - 1);
    return out;
}

WheelAudit wheel_audit(int q, int k, const EdgeColoring& c)
{
    if (q < 3 || k < 4 || k > q + 1)
        throw Error(ErrorCode::InvalidParam, "wheel audit needs 4 <= k <= q+1");
    if (c.edge_count() != 2 * q)
        throw Error(ErrorCode::InvalidParam, "colouring is not on W_q");
    WheelAudit a;
    a.q = q;
    a.k = k;
    std::map<int, WheelColorStats> stats;
    for (EdgeId e = 0; e < 2 * q; ++e) {
        auto& s = stats[c.color(e)];
        s.color = c.color(e);
        ++s.multiplicity;
        (e < q ? s.spokes : s.rim) += 1;
    }
    for (auto& [color, s] : stats)
        s.eta.assign(k + 1, 0);
    for (int i = 1; i <= q; ++i) {
        std::map<int, int> in_cycle;
        for (EdgeId e : central_cycle_edges(q, k, i))
            ++in_cycle[c.color(e)];
        if (static_cast<int>(in_cycle.size()) == k)
            ++a.rainbow_central_cycles;
        for (const auto& [color, j] : in_cycle)
            ++stats[color].eta[j];
    }
    a.multiplicities_consistent = true;
    a.incidence_identity = true;
    a.eta_bound = true;
    int weighted = 0;
    for (auto& [color, s] : stats) {
        for (int j = 2; j <= k; ++j)
            s.eta_total += s.eta[j];
        int incidences = 0;
        for (int j = 1; j <= k; ++j)
            incidences += j * s.eta[j];
        if (s.spokes + s.rim != s.multiplicity)
            a.multiplicities_consistent = false;
        if (incidences != 2 * s.spokes + (k - 2) * s.rim)
            a.incidence_identity = false;
        if (2 * s.eta_total > (k - 2) * s.multiplicity)
            a.eta_bound = false;
        if (k == 6 && s.multiplicity == 2 && s.eta_total > 3)
            a.pair_bound = false;
        if (static_cast<int>(a.class_sizes.size()) <= s.multiplicity)
            a.class_sizes.resize(s.multiplicity + 1, 0);
        ++a.class_sizes[s.multiplicity];
        weighted += s.multiplicity;
        a.per_color.push_back(s);
    }
    if (weighted != 2 * q)
        a.multiplicities_consistent = false;
    return a;
}

std::string write_coloring(const EdgeColoring& c)
{
    std::ostringstream out;
    out << "m " << c.m() << '\n';
    for (EdgeId e = 0; e < c.edge_count(); ++e)
        out << "c " << e << ' ' << c.color(e) << '\n';
    return out.str();
}

EdgeColoring read_coloring(std::string_view text)
{
    int m = -1;
    std::vector<int> colors;
    for (const auto& line : split_lines(text)) {
        const auto words = split_words(line);
        if (words[0] == "m" && words.size() == 2 && m < 0) {
            m = parse_int(words[1]);
        } else if (words[0] == "c" && words.size() == 3 && m >= 0) {
            if (parse_int(words[1]) != static_cast<int>(colors.size()))
                throw Error(ErrorCode::Parse, "colour lines must list edges in order: " + line);
            colors.push_back(parse_int(words[2]));
        } else {
            throw Error(ErrorCode::Parse, "bad colouring line: " + line);
        }
    }
    if (m < 0)
        throw Error(ErrorCode::Parse, "missing 'm' line");
    if (m == 0 && !colors.empty())
        throw Error(ErrorCode::Parse, "m = 0 with coloured edges");
    return EdgeColoring(std::move(colors), m);
}

} // namespace rainbow
