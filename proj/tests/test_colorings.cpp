#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "rainbow/colorings.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/rainbow_search.hpp"

using namespace rainbow;

namespace {

/// Random surjective colouring onto [m].
EdgeColoring random_surjective(std::mt19937_64& rng, int edges, int m)
{
    std::vector<int> c(edges);
    for (int e = 0; e < edges; ++e)
        c[e] = e < m ? e + 1 : 1 + static_cast<int>(rng() % m);
    std::shuffle(c.begin(), c.end(), rng);
    return EdgeColoring(c, m);
}

/// Palette of v computed straight from the definition: edges of the wheel
/// induced by v and its neighbours in rotation order.
std::set<int> palette_by_definition(const PlaneGraph& t, const EdgeColoring& c, VertexId v)
{
    std::set<int> out;
    const auto nb = t.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
        out.insert(c.color(*t.graph().edge_between(v, nb[i])));
        out.insert(c.color(*t.graph().edge_between(nb[i], nb[(i + 1) % nb.size()])));
    }
    return out;
}

} // namespace

TEST_CASE("rainbow base plus one colour per stellated face")
{
    const auto b = build_p89_host(8, 8);
    const auto c = rainbow_plus_faces(b);
    CHECK(c.m() == 10);
    CHECK(c.is_surjective());
    for (EdgeId e = 0; e < b.base.edge_count(); ++e)
        CHECK(c.color(e) == e + 1);
    // Each colour class inside a stellated face is a star at the added vertex.
    const int n0 = b.base.vertex_count();
    for (size_t i = 0; i < b.stellation_set.size(); ++i) {
        const int color = b.base.edge_count() + static_cast<int>(i) + 1;
        for (EdgeId e = 0; e < b.result.edge_count(); ++e)
            if (c.color(e) == color) {
                const auto ed = b.result.edge(e);
                CHECK(std::max(ed.u, ed.v) == n0 + static_cast<int>(i));
            }
    }
    CHECK(rainbow_plus_faces(build_ck_subdiv(5, 20).bundle).m() == 38);

    BuildBundle bare;
    bare.base = build_wheel(5);
    bare.result = bare.base;
    const auto rb = rainbow_plus_faces(bare);
    CHECK(rb.m() == 10);
    CHECK(rb.distinct_colors() == 10);
}

TEST_CASE("wheel colourings")
{
    const auto c66 = wheel_coloring(6, 6);
    CHECK(c66.m() == 10);
    std::set<int> rim;
    for (int i = 0; i < 6; ++i)
        rim.insert(c66.color(6 + i));
    CHECK(rim == std::set<int>{7, 8, 9, 10});
    CHECK(wheel_coloring(5, 6).m() == 8);
    CHECK(wheel_coloring(4, 5).m() == 6);
    CHECK_THROWS_AS(wheel_coloring(3, 5), Error);
    CHECK_THROWS_AS(wheel_coloring(8, 4), Error);

    for (int k = 5; k <= 9; ++k)
        for (int q = k - 1; q <= 16; ++q) {
            CAPTURE(k);
            CAPTURE(q);
            const auto c = wheel_coloring(q, k);
            CHECK(c.is_surjective());
            CHECK(c.m() == (2 * k - 7) * q / (k - 3));
            for (int i = 1; i <= q; ++i)
                CHECK(c.color(i - 1) == i);
            const auto g = build_wheel(q).graph();
            CHECK(!oracle::has_rainbow(oracle::cycle_copies(g, k), c.colors()));
            CHECK(oracle::has_rainbow(oracle::cycle_copies(g, k - 1), c.colors()));
        }
}

TEST_CASE("central cycles")
{
    const auto g = build_wheel(7).graph();
    const auto central = oracle::cycle_copies(g, 5);
    int through_centre = 0;
    for (const auto& cyc : central)
        through_centre += std::count_if(cyc.begin(), cyc.end(), [](int e) { return e < 7; }) == 2;
    CHECK(through_centre == 7);
    for (int i = 1; i <= 7; ++i) {
        auto edges = central_cycle_edges(7, 5, i);
        std::sort(edges.begin(), edges.end());
        CHECK(central.count(edges) == 1);
    }
}

TEST_CASE("wheel audits")
{
    for (int k = 5; k <= 8; ++k)
        for (int q = k - 1; q <= 14; ++q) {
            const auto a = wheel_audit(q, k, wheel_coloring(q, k));
            CHECK(a.all_pass());
            CHECK(a.rainbow_central_cycles == 0);
        }
    // Identities hold for arbitrary colourings.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int q = 5 + trial % 8, k = 4 + trial % 3;
        const auto c = EdgeColoring(oracle::random_colors(rng, 2 * q, 1 + trial % (2 * q)));
        const auto a = wheel_audit(q, k, c);
        CHECK(a.multiplicities_consistent);
        CHECK(a.incidence_identity);
        CHECK(a.eta_bound);
    }
    std::vector<int> rainbow(12);
    for (int e = 0; e < 12; ++e)
        rainbow[e] = e + 1;
    const auto ar = wheel_audit(6, 6, EdgeColoring(rainbow));
    CHECK(ar.rainbow_central_cycles == 6);
    for (const auto& s : ar.per_color)
        CHECK(s.eta_total == 0);
    const auto mono = wheel_audit(6, 6, EdgeColoring(std::vector<int>(12, 1)));
    REQUIRE(mono.per_color.size() == 1);
    CHECK(mono.per_color[0].eta_total == 6);
    CHECK(mono.per_color[0].eta[6] == 6);
}

TEST_CASE("exact extremal wheel colourings satisfy the class counting")
{
    for (int q = 5; q <= 7; ++q) {
        const auto res = exact_ar_fixed_host(build_wheel(q).graph(), PatternSpec::cycle(6));
        const auto a = wheel_audit(q, 6, res.witness);
        CHECK(a.rainbow_central_cycles == 0);
        CHECK(a.all_pass());
        int weighted = 0;
        for (size_t l = 0; l < a.class_sizes.size(); ++l)
            weighted += static_cast<int>(l) * a.class_sizes[l];
        CHECK(weighted == 2 * q);
        const int a1 = a.class_sizes.size() > 1 ? a.class_sizes[1] : 0;
        const int a2 = a.class_sizes.size() > 2 ? a.class_sizes[2] : 0;
        CHECK(2 * a1 + a2 <= 3 * q);
    }
}

TEST_CASE("vertex palettes")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto t = gen::random_triangulation(rng, 5 + trial % 6);
        const auto c = EdgeColoring(oracle::random_colors(rng, t.edge_count(), 1 + trial % 7));
        for (VertexId v = 0; v < t.vertex_count(); ++v) {
            const auto p = vertex_palette(t, c, v);
            const auto expected = palette_by_definition(t, c, v);
            CHECK(std::set<int>(p.colors.begin(), p.colors.end()) == expected);
        }
    }
    const auto t = gen::random_triangulation(rng, 9);
    std::vector<int> rainbow(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e)
        rainbow[e] = e + 1;
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        CHECK(static_cast<int>(vertex_palette(t, EdgeColoring(rainbow), v).colors.size()) == 2 * t.degree(v));
        CHECK(vertex_palette(t, EdgeColoring(std::vector<int>(t.edge_count(), 1)), v).colors.size() == 1);
    }
}

TEST_CASE("palette sums are at least 4m")
{
    std::mt19937_64 rng(37);
    const auto t = gen::random_triangulation(rng, 8);
    std::vector<int> rainbow(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e)
        rainbow[e] = e + 1;
    const auto eq = palette_sum_audit(t, EdgeColoring(rainbow));
    CHECK(eq.palette_sum == 4LL * t.edge_count());
    CHECK(eq.four_m == eq.palette_sum);
    const auto mono = palette_sum_audit(t, EdgeColoring(std::vector<int>(t.edge_count(), 1)));
    CHECK(mono.palette_sum == t.vertex_count());
    CHECK(mono.pass);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = gen::random_triangulation(rng, 4 + trial % 9);
        const int m = 1 + static_cast<int>(rng() % g.edge_count());
        CHECK(palette_sum_audit(g, random_surjective(rng, g.edge_count(), m)).pass);
    }
}

TEST_CASE("colouring text format")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_surjective(rng, 5 + trial, 1 + trial % 5);
        const auto text = write_coloring(c);
        CHECK(read_coloring(text) == c);
        CHECK(write_coloring(read_coloring(text)) == text);
    }
    CHECK_THROWS_AS(read_coloring("c 0 1\n"), Error);
    CHECK_THROWS_AS(read_coloring("m 2\nc 1 1\n"), Error);
    CHECK_THROWS_AS(read_coloring("m 2\nc 0 3\n"), Error);
    CHECK_THROWS_AS(read_coloring("m 2\nc 0 0\n"), Error);
    CHECK_THROWS_AS(EdgeColoring({1, 0}), Error);
}
