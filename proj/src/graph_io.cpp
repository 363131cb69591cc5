#include "rainbow/graph_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <sstream>

namespace rainbow {

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(pos, end - pos));
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (!line.empty())
            out.push_back(std::move(line));
        pos = end + 1;
    }
    return out;
}

std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

int parse_int(std::string_view word)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        throw Error(ErrorCode::Parse, "not an integer: '" + std::string(word) + "'");
    return value;
}

std::string write_graph(const PlaneGraph& g)
{
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << "e " << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "r " << v;
        for (EdgeId e : g.rotation(v))
            out << ' ' << e;
        out << '\n';
    }
    const DartId d = g.outer_dart();
    out << "outer " << g.tail(d) << ' ' << g.head(d) << ' ' << g.head(g.next_in_face(d)) << '\n';
    return out.str();
}

namespace {

PlaneGraph parse_lines(const std::vector<std::string>& lines, size_t begin, size_t end)
{
    int n = -1;
    std::vector<Edge> edges;
    Rotation rot;
    std::vector<char> have_rot;
    std::optional<std::array<int, 3>> outer;

    for (size_t i = begin; i < end; ++i) {
        const auto words = split_words(lines[i]);
        const std::string& tag = words.front();
        if (tag == "n") {
            if (words.size() != 2 || n >= 0)
                throw Error(ErrorCode::Parse, "bad 'n' line: " + lines[i]);
            n = parse_int(words[1]);
            if (n < 0)
                throw Error(ErrorCode::Parse, "negative vertex count");
            rot.assign(n, {});
            have_rot.assign(n, 0);
        } else if (tag == "e") {
            if (words.size() != 4 || n < 0)
                throw Error(ErrorCode::Parse, "bad 'e' line: " + lines[i]);
            if (parse_int(words[1]) != static_cast<int>(edges.size()))
                throw Error(ErrorCode::Parse, "edge ids must be consecutive: " + lines[i]);
            edges.push_back({parse_int(words[2]), parse_int(words[3])});
        } else if (tag == "r") {
            if (words.size() < 2 || n < 0)
                throw Error(ErrorCode::Parse, "bad 'r' line: " + lines[i]);
            const int v = parse_int(words[1]);
            if (v < 0 || v >= n || have_rot[v])
                throw Error(ErrorCode::Parse, "bad rotation vertex: " + lines[i]);
            have_rot[v] = 1;
            for (size_t w = 2; w < words.size(); ++w)
                rot[v].push_back(parse_int(words[w]));
        } else if (tag == "outer") {
            if (words.size() != 4)
                throw Error(ErrorCode::Parse, "bad 'outer' line: " + lines[i]);
            outer = std::array<int, 3>{parse_int(words[1]), parse_int(words[2]), parse_int(words[3])};
        } else {
            throw Error(ErrorCode::Parse, "unknown line: " + lines[i]);
        }
    }
    if (n < 0)
        throw Error(ErrorCode::Parse, "missing 'n' line");
    // No rotation lines at all: embed the edge list.
    const bool any_rot = std::find(have_rot.begin(), have_rot.end(), 1) != have_rot.end();
    for (int v = 0; v < n && any_rot; ++v)
        if (!have_rot[v])
            throw Error(ErrorCode::Parse, "missing rotation for vertex " + std::to_string(v));

    PlaneGraph g = any_rot ? PlaneGraph::build(n, std::move(edges), std::move(rot))
                           : PlaneGraph::build(n, std::move(edges));
    if (!outer)
        return g;
    const auto [a, b, c] = *outer;
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw Error(ErrorCode::Parse, "outer witness out of range");
    const auto d = g.dart(a, b);
    if (!d || g.head(g.next_in_face(*d)) != c)
        throw Error(ErrorCode::Parse, "outer witness is not a face walk");
    return PlaneGraph::build(g.vertex_count(), g.edges(), g.rotation_system(), *d);
}

} // namespace

PlaneGraph read_graph(std::string_view text)
{
    const auto lines = split_lines(text);
    return parse_lines(lines, 0, lines.size());
}

std::string write_graph_list(const std::vector<PlaneGraph>& graphs)
{
    std::string out;
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (i > 0)
            out += '\n';
        out += write_graph(graphs[i]);
    }
    return out;
}

std::vector<PlaneGraph> read_graph_list(std::string_view text)
{
    const auto lines = split_lines(text);
    std::vector<PlaneGraph> out;
    size_t start = 0;
    for (size_t i = 1; i <= lines.size(); ++i)
        if (i == lines.size() || lines[i].rfind("n ", 0) == 0) {
            if (start < i)
                out.push_back(parse_lines(lines, start, i));
            start = i;
        }
    return out;
}

} // namespace rainbow
