#include "rainbow/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

namespace rainbow {

namespace {

using Cell = std::vector<VertexId>;
using Partition = std::vector<Cell>;

class Labeler {
public:
    explicit Labeler(const Graph& g) : n_(g.vertex_count()), adj_(n_ * n_, 0)
    {
        for (const auto& e : g.edges()) {
            adj_[e.u * n_ + e.v] = 1;
            adj_[e.v * n_ + e.u] = 1;
        }
    }

    std::string run()
    {
        Partition start;
        if (n_ > 0) {
            Cell all(n_);
            for (VertexId v = 0; v < n_; ++v)
                all[v] = v;
            start.push_back(std::move(all));
        }
        search(std::move(start));
        std::string header;
        for (int shift = 24; shift >= 0; shift -= 8)
            header.push_back(static_cast<char>((n_ >> shift) & 0xff));
        return header + best_.value_or(std::string{});
    }

private:
    void refine(Partition& p) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t s = 0; s < p.size() && !changed; ++s) {
                const Cell splitter = p[s];
                for (size_t j = 0; j < p.size(); ++j) {
                    if (p[j].size() == 1)
                        continue;
                    std::map<int, Cell> by_count;
                    for (VertexId v : p[j]) {
                        int count = 0;
                        for (VertexId w : splitter)
                            count += adj_[v * n_ + w];
                        by_count[count].push_back(v);
                    }
                    if (by_count.size() == 1)
                        continue;
                    Partition next(p.begin(), p.begin() + static_cast<long>(j));
                    for (auto& [count, cell] : by_count)
                        next.push_back(std::move(cell));
                    next.insert(next.end(), p.begin() + static_cast<long>(j) + 1, p.end());
                    p = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::string leaf_code(const Partition& p) const
    {
        std::vector<VertexId> order;
        for (const auto& c : p)
            order.push_back(c.front());
        std::string code;
        std::uint8_t acc = 0;
        int bits = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = static_cast<std::uint8_t>((acc << 1) | adj_[order[i] * n_ + order[j]]);
                if (++bits == 8) {
                    code.push_back(static_cast<char>(acc));
                    acc = 0;
                    bits = 0;
                }
            }
        if (bits > 0)
            code.push_back(static_cast<char>(acc << (8 - bits)));
        return code;
    }

    void search(Partition p)
    {
        refine(p);
        size_t target = p.size();
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1 && (target == p.size() || p[i].size() < p[target].size()))
                target = i;
        if (target == p.size()) {
            auto code = leaf_code(p);
            if (!best_ || code < *best_)
                best_ = std::move(code);
            return;
        }
        for (VertexId v : p[target]) {
            Partition child(p.begin(), p.begin() + static_cast<long>(target));
            child.push_back({v});
            Cell rest;
            for (VertexId w : p[target])
                if (w != v)
                    rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), p.begin() + static_cast<long>(target) + 1, p.end());
            search(std::move(child));
        }
    }

    int n_;
    std::vector<std::uint8_t> adj_;
    std::optional<std::string> best_;
};

} // namespace

std::string CanonicalLabel::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes_) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalLabel canonical_label(const Graph& g)
{
    return CanonicalLabel(Labeler(g).run());
}

} // namespace rainbow
