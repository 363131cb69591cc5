#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "rainbow/colorings.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/rainbow_search.hpp"

using namespace rainbow;

namespace {

std::set<std::vector<int>> naive_copies(const Graph& g, const PatternSpec& p)
{
    return p.kind() == PatternSpec::Kind::Path ? oracle::path_copies(g, p.k()) : oracle::cycle_copies(g, p.k());
}

bool witness_is_copy(const Graph& g, const Witness& w, const PatternSpec& p)
{
    const int k = p.k();
    if (static_cast<int>(w.vertices.size()) != k)
        return false;
    std::set<int> distinct(w.vertices.begin(), w.vertices.end());
    if (static_cast<int>(distinct.size()) != k)
        return false;
    const int steps = p.kind() == PatternSpec::Kind::Cycle ? k : k - 1;
    if (static_cast<int>(w.edges.size()) != steps)
        return false;
    for (int i = 0; i < steps; ++i) {
        const auto e = g.edge_between(w.vertices[i], w.vertices[(i + 1) % k]);
        if (!e || std::find(w.edges.begin(), w.edges.end(), *e) == w.edges.end())
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("pattern names parse both ways")
{
    CHECK(PatternSpec::parse("P8").name() == "P8");
    CHECK(PatternSpec::parse("c_5").kind() == PatternSpec::Kind::Cycle);
    CHECK(PatternSpec::parse("C5").edge_count() == 5);
    CHECK(PatternSpec::parse("P8").edge_count() == 7);
    CHECK_THROWS_AS(PatternSpec::parse("Q3"), Error);
    CHECK_THROWS_AS(PatternSpec::parse("C2"), Error);
}

TEST_CASE("find_rainbow agrees with the naive copy enumerator")
{
    std::mt19937_64 rng(101);
    int with_witness = 0, without = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 8);
        const Graph g = trial % 2 ? gen::random_triangulation(rng, n).graph()
                                  : oracle::random_planar_graph(rng, n, static_cast<int>(rng() % (2 * n)));
        const int palette = 2 + static_cast<int>(rng() % g.edge_count());
        const auto colors = oracle::random_colors(rng, g.edge_count(), palette);
        const int k = 3 + static_cast<int>(rng() % 4);
        const auto p = trial % 3 ? PatternSpec::cycle(k) : PatternSpec::path(k + 1);
        const bool expected = oracle::has_rainbow(naive_copies(g, p), colors);
        const auto w = find_rainbow(g, colors, p);
        CHECK(w.has_value() == expected);
        if (w) {
            ++with_witness;
            CHECK(witness_is_copy(g, *w, p));
            CHECK(oracle::is_rainbow(w->edges, colors));
        } else {
            ++without;
        }
    }
    CHECK(with_witness > 10);
    CHECK(without > 10);
}

TEST_CASE("all_copies lists each copy once")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = gen::random_triangulation(rng, 5 + trial % 6).graph();
        for (const auto& p : {PatternSpec::path(4), PatternSpec::cycle(4), PatternSpec::cycle(5)}) {
            const auto copies = all_copies(g, p);
            const auto naive = naive_copies(g, p);
            CHECK(std::set<std::vector<int>>(copies.begin(), copies.end()) == naive);
            CHECK(copies.size() == naive.size());
        }
    }
}

TEST_CASE("rainbow colouring reduces to containment")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const auto g = oracle::random_planar_graph(rng, n, static_cast<int>(rng() % n));
        std::vector<int> distinct(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e)
            distinct[e] = e + 1;
        for (int k = 3; k <= 7; ++k)
            for (const auto& p : {PatternSpec::path(k), PatternSpec::cycle(k)})
                CHECK(find_rainbow(g, distinct, p).has_value() == contains(g, p).has_value());
    }
    Graph tree(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    CHECK(!contains(tree, PatternSpec::cycle(3)));
    CHECK(contains(complete_graph(4), PatternSpec::cycle(4)));
}

TEST_CASE("no rainbow P_{k-1} implies no rainbow P_k")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = gen::random_triangulation(rng, 6 + trial % 6).graph();
        const auto colors = oracle::random_colors(rng, g.edge_count(), 3 + trial % 5);
        for (int k = 3; k <= 8; ++k)
            if (!find_rainbow(g, colors, PatternSpec::path(k - 1)))
                CHECK(!find_rainbow(g, colors, PatternSpec::path(k)));
    }
}

TEST_CASE("general graph patterns")
{
    std::mt19937_64 rng(41);
    const auto k4 = PatternSpec::of(complete_graph(4));
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = gen::random_triangulation(rng, 5 + trial % 5).graph();
        std::vector<int> distinct(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e)
            distinct[e] = e;
        CHECK(find_rainbow(g, distinct, k4).has_value() == contains(g, k4).has_value());
        const auto c4 = PatternSpec::of(cycle_graph(4));
        CHECK(all_copies(g, c4).size() == oracle::cycle_copies(g, 4).size());
    }
    CHECK(contains(stacked_triangulation(5).graph(), k4));
}

TEST_CASE("longest path agrees with exhaustive search")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const auto g = trial % 2 ? gen::random_triangulation(rng, n).graph()
                                 : oracle::random_planar_graph(rng, n, static_cast<int>(rng() % n));
        const auto lp = longest_path(g);
        CHECK(lp.vertices == oracle::longest_path(g));
        CHECK(static_cast<int>(lp.witness.vertices.size()) == lp.vertices);
        std::vector<char> filter(n, 0);
        for (int v = 0; v < n; ++v)
            filter[v] = rng() % 2;
        filter[0] = 1;
        const auto lf = longest_path(g, filter);
        CHECK(lf.vertices == oracle::longest_path(g, filter));
        CHECK(filter[lf.witness.vertices.front()]);
        CHECK(filter[lf.witness.vertices.back()]);
    }
}

TEST_CASE("longest path beyond the subset range")
{
    const auto g = build_lemma_th(9).result.graph(); // 29 vertices
    CHECK(longest_path(g).vertices == 2 * 9 + 5);
    std::vector<char> filter(g.vertex_count(), 0);
    for (int v = 0; v < 9 + 2; ++v)
        filter[v] = 1;
    CHECK(longest_path(g, filter).vertices == 2 * 9 + 3);
}

TEST_CASE("branch and bound agrees with exhaustive search on sparse graphs")
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 25 + static_cast<int>(rng() % 6);
        const auto g = oracle::random_planar_graph(rng, n, 4 + static_cast<int>(rng() % 8));
        std::vector<char> filter(n, 1);
        if (trial % 2)
            for (int v = 1; v < n; ++v)
                filter[v] = rng() % 3 == 0;
        const auto lp = longest_path(g, filter);
        CHECK(lp.vertices == oracle::longest_path(g, filter));
        CHECK(static_cast<int>(lp.witness.vertices.size()) == lp.vertices);
    }
}

TEST_CASE("longest path examples on the apex-path stellation")
{
    const auto th5 = build_lemma_th(5);
    CHECK(longest_path(th5.result.graph()).vertices == 15);
    std::vector<char> in_h(th5.result.vertex_count(), 0);
    for (int v = 0; v < th5.base.vertex_count(); ++v)
        in_h[v] = 1;
    CHECK(longest_path(th5.result.graph(), in_h).vertices == 13);
    CHECK(longest_path(build_lemma_th(1).result.graph()).vertices == 5);
}

TEST_CASE("search budgets")
{
    SearchBudget tight;
    tight.max_path_vertices = 5;
    const auto g = stacked_triangulation(8).graph();
    std::vector<int> colors(g.edge_count(), 1);
    CHECK_THROWS_AS(find_rainbow(g, colors, PatternSpec::path(6), tight), Error);
    tight.max_longest_path_vertices = 6;
    CHECK_THROWS_AS(longest_path(g, {}, tight), Error);
    CHECK_THROWS_AS(find_rainbow(g, std::vector<int>(3, 1), PatternSpec::path(3)), Error);
}
