#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "rainbow/bounds.hpp"
#include "rainbow/colorings.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/rainbow_search.hpp"

using namespace rainbow;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Parse;
}

int f_of(const PlaneGraph& g, int size)
{
    const auto h = face_size_histogram(g);
    return size < static_cast<int>(h.size()) ? h[size] : 0;
}

/// Re-stellates the base independently and compares with the stored result.
void check_result_is_stellation(const BuildBundle& b)
{
    const auto again = stellate_faces(b.base, b.stellation_set);
    CHECK(again.edges() == b.result.edges());
    CHECK(again.vertex_count() == b.result.vertex_count());
}

void check_rainbow_claims(const BuildBundle& b, const PatternSpec& forbidden, const PatternSpec& companion)
{
    const auto c = rainbow_plus_faces(b);
    CHECK(c.is_surjective());
    CHECK(c.m() == b.expected_colors);
    CHECK(contains(b.result.graph(), forbidden).has_value());
    CHECK(!find_rainbow(b.result.graph(), c.colors(), forbidden).has_value());
    CHECK(find_rainbow(b.result.graph(), c.colors(), companion).has_value());
}

} // namespace

TEST_CASE("apex-path stellation for p = 1..6")
{
    for (int p = 1; p <= 6; ++p) {
        CAPTURE(p);
        const auto b = build_lemma_th(p);
        CHECK(b.base.vertex_count() == p + 2);
        CHECK(b.result.vertex_count() == 3 * p + 2);
        CHECK(f_of(b.base, 3) == 2 * p);
        CHECK(is_plane_triangulation(b.result));
        check_result_is_stellation(b);
        const int n0 = b.base.vertex_count();
        for (const auto& e : b.result.edges())
            CHECK((e.u < n0 || e.v < n0));
        // Added vertices form a maximal independent set: every base vertex sees one.
        for (VertexId v = 0; v < n0; ++v) {
            bool sees_added = false;
            for (const auto& inc : b.result.graph().incident(v))
                sees_added = sees_added || inc.to >= n0;
            CHECK(sees_added);
        }
        const auto& g = b.result.graph();
        CHECK(oracle::longest_path(g) == 2 * p + 5 - std::max(0, 3 - p));
        std::vector<char> in_h(g.vertex_count(), 0);
        for (int v = 0; v < n0; ++v)
            in_h[v] = 1;
        CHECK(oracle::longest_path(g, in_h) == 2 * p + 3);
        CHECK(b.landmark("x") == 0);
        CHECK(b.landmark("y") == 1);
        CHECK(b.landmark("w").has_value());
        CHECK(b.landmark("z").has_value());
        CHECK(b.landmark("v" + std::to_string(p)) == p + 1);
    }
    // p = 1 gives K5 minus an edge.
    const auto g1 = build_lemma_th(1).result.graph();
    CHECK(g1.edge_count() == 9);
    std::vector<Edge> k5minus;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 3 && v == 4))
                k5minus.push_back({u, v});
    CHECK(oracle::isomorphic(g1, Graph(5, k5minus)));
    CHECK(code_of([] { build_lemma_th(0); }) == ErrorCode::InvalidParam);
}

TEST_CASE("join host for paths on 8 and 9 vertices")
{
    const auto b88 = build_p89_host(8, 8);
    CHECK(b88.params.t == 5);
    CHECK(b88.params.eps_star == 1);
    CHECK(b88.expected_colors == 10);
    CHECK(f_of(b88.base, 3) == 2);
    CHECK(f_of(b88.base, 4) == 2);
    const auto b99 = build_p89_host(9, 9);
    CHECK(b99.params.eps == 1);
    CHECK(b99.params.eps_star == 1);
    CHECK(b99.params.t == 6);
    const auto b89 = build_p89_host(8, 9);
    CHECK(b89.params.eps_star == 0);
    CHECK(b89.params.t == 6);
    CHECK(f_of(b89.base, 4) == 3);

    for (int k : {8, 9})
        for (int n = k; n <= k + 6; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            const auto b = build_p89_host(k, n);
            const int eps = k % 2, t = b.params.t;
            CHECK(b.result.vertex_count() == n);
            CHECK(is_plane_triangulation(b.result));
            CHECK(b.base.edge_count() == 2 * t - 3 + eps);
            CHECK(f_of(b.base, 3) == 2 + 2 * eps);
            CHECK(f_of(b.base, 4) == t - 3 - eps);
            CHECK(!contains(b.base.graph(), PatternSpec::path(k - 2)));
            CHECK(contains(b.base.graph(), PatternSpec::path(k - 3)));
            check_result_is_stellation(b);
            CHECK(Rational(b.expected_colors) == *eval_bound("p89-lower", {n, k, 0}).lower);
        }
    CHECK(code_of([] { build_p89_host(10, 12); }) == ErrorCode::InvalidParam);
    CHECK(code_of([] { build_p89_host(8, 7); }) == ErrorCode::InvalidParam);
}

TEST_CASE("path constructions for k >= 10 in each range")
{
    const auto small = build_pk_small(12, 12);
    CHECK(small.params.p == 7);
    CHECK(small.stellation_set.size() == 3);
    CHECK(f_of(small.base, 3) == 14);
    CHECK(small.expected_colors == 24);

    const auto mid = build_pk_mid(10, 10);
    CHECK(mid.params.p == 1);
    CHECK(mid.result.vertex_count() == 10);

    const auto large = build_pk_large(10, 12);
    CHECK(large.params.m == 3);
    CHECK(large.params.t == 9);
    CHECK(f_of(large.base, 4) == 3);

    CHECK(code_of([] { build_pk_small(12, 20); }) == ErrorCode::RangeMismatch);
    CHECK(code_of([] { build_pk_mid(12, 12); }) == ErrorCode::RangeMismatch);
    CHECK(code_of([] { build_pk_large(12, 15); }) == ErrorCode::RangeMismatch);
    CHECK(code_of([] { build_pk(9, 12); }) == ErrorCode::InvalidParam);

    for (int k = 10; k <= 13; ++k)
        for (int n = k; n <= k + 8; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            const auto b = build_pk(k, n);
            CHECK(b.result.vertex_count() == n);
            CHECK(is_plane_triangulation(b.result));
            check_result_is_stellation(b);
            const char* tag = b.params.kind == ConstructionKind::PkSmall ? "pk-small-lower"
                              : b.params.kind == ConstructionKind::PkMid ? "pk-mid-construction"
                                                                          : "pk-large-construction";
            CHECK(Rational(b.expected_colors) == *eval_bound(tag, {n, k, 0}).lower);
            if (b.params.kind == ConstructionKind::PkLarge) {
                const int t = b.params.t, s = t - k + 7;
                CHECK(f_of(b.base, 4) == (s + 1) / 2);
                CHECK(b.base.edge_count() == 2 * t + k - 13 + s / 2);
                CHECK(b.base.graph().is_connected());
                CHECK(f_of(b.base, 3) + f_of(b.base, 4) == b.base.face_count());
            }
        }
}

TEST_CASE("large-range host is P_{k-2}-free when k >= 11")
{
    for (int k = 11; k <= 12; ++k)
        for (int n : {k + 3, k + 6}) {
            const auto b = build_pk(k, n);
            if (b.params.kind != ConstructionKind::PkLarge)
                continue;
            CHECK(!contains(b.base.graph(), PatternSpec::path(k - 2)));
        }
    // For k = 10 with at least six outer vertices, s1 s2 x s3 s4 y s5 s6 is a P8.
    const auto b = build_pk_large(10, 12);
    CHECK(contains(b.base.graph(), PatternSpec::path(8)).has_value());
}

TEST_CASE("path colourings: no rainbow P_k, rainbow P_{k-1}")
{
    for (auto [k, n] : {std::pair{8, 8}, {8, 11}, {9, 9}, {9, 12}})
        check_rainbow_claims(build_p89_host(k, n), PatternSpec::path(k), PatternSpec::path(k - 1));
    for (auto [k, n] : {std::pair{10, 10}, {10, 11}, {11, 11}, {11, 13}, {12, 12}, {12, 14}, {12, 16}})
        check_rainbow_claims(build_pk(k, n), PatternSpec::path(k), PatternSpec::path(k - 1));
}

TEST_CASE("randomised face choices keep every claim")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        FaceChoice choice{seed};
        const auto b = build_p89_host(8 + seed % 2, 10 + static_cast<int>(seed % 3), choice);
        CHECK(b.result.vertex_count() == b.params.n);
        check_rainbow_claims(b, PatternSpec::path(b.params.k), PatternSpec::path(b.params.k - 1));
        const auto s = build_pk_small(14, 14 + static_cast<int>(seed % 2), choice);
        check_rainbow_claims(s, PatternSpec::path(14), PatternSpec::path(13));
    }
    // Different seeds do pick different faces somewhere.
    std::set<std::vector<FaceId>> picks;
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        picks.insert(build_pk_small(14, 15, FaceChoice{seed}).stellation_set);
    CHECK(picks.size() > 1);
}

TEST_CASE("subdivision construction closed forms")
{
    struct Case {
        int k, n, t, r, colors;
    };
    for (const auto& c : {Case{5, 20, 3, 0, 38}, Case{5, 38, 4, 0, 76}, Case{6, 30, 3, 0, 65}, Case{5, 21, 3, 1, 39},
                          Case{7, 42, 3, 0, 98}}) {
        CAPTURE(c.k);
        CAPTURE(c.n);
        CHECK(ck_subdiv_split(c.k, c.n) == std::pair{c.t, c.r});
        const auto sb = build_ck_subdiv(c.k, c.n);
        const auto& b = sb.bundle;
        const int k = c.k, t = c.t;
        CHECK(b.base.vertex_count() == t + (k * k - k - 5) * (t - 2));
        CHECK(b.base.edge_count() == 3 * (k * k - 2 * k - 3) * (t - 2));
        CHECK(b.result.vertex_count() == c.n);
        CHECK(is_plane_triangulation(b.result));
        CHECK(b.expected_colors == c.colors);
        CHECK(b.expected_colors == (3 * k * k - 6 * k - 7) * (t - 2) + c.r);
        CHECK(Rational(c.colors) == *eval_bound("ck-subdivision-lower", {c.n, k, 0}).lower);
        check_result_is_stellation(b);
        const int q = k % 3;
        if (q == 2) {
            CHECK(sb.matching.empty());
        } else {
            const auto& seed = sb.seed;
            CHECK(static_cast<int>(sb.matching.size()) * 2 == seed.face_count());
            std::vector<int> per_face(seed.face_count(), 0);
            for (EdgeId e : sb.matching) {
                ++per_face[seed.face_of_dart(2 * e)];
                ++per_face[seed.face_of_dart(2 * e + 1)];
            }
            for (int x : per_face)
                CHECK(x == 1);
        }
    }
    CHECK(code_of([] { build_ck_subdiv(4, 30); }) == ErrorCode::InvalidParam);
    CHECK(code_of([] { build_ck_subdiv(5, 19); }) == ErrorCode::RangeMismatch);
}

TEST_CASE("subdivided host is C_k-free and contains C_{k+1}")
{
    for (auto [k, n] : {std::pair{5, 20}, {6, 30}, {7, 42}}) {
        CAPTURE(k);
        const auto b = build_ck_subdiv(k, n).bundle;
        CHECK(!contains(b.base.graph(), PatternSpec::cycle(k)));
        CHECK(contains(b.base.graph(), PatternSpec::cycle(k + 1)));
        const auto c = rainbow_plus_faces(b);
        CHECK(c.m() == b.expected_colors);
        CHECK(!find_rainbow(b.result.graph(), c.colors(), PatternSpec::cycle(k)));
        CHECK(find_rainbow(b.result.graph(), c.colors(), PatternSpec::cycle(k + 1)));
    }
}

TEST_CASE("subdivision with a random seed triangulation and mixed replacements")
{
    std::mt19937_64 rng(71);
    const int k = 6, n = 2 + 28 * 2 + 3; // t = 4, r = 3
    CkSubdivOptions opts;
    opts.seed = gen::random_triangulation(rng, 4);
    opts.replacements = {stacked_triangulation(5), PlaneGraph::build(5, stacked_triangulation(5).edges())};
    opts.choice.shuffle_seed = 9;
    const auto sb = build_ck_subdiv(k, n, opts);
    CHECK(sb.bundle.result.vertex_count() == n);
    CHECK(!contains(sb.bundle.base.graph(), PatternSpec::cycle(k)));
    const auto c = rainbow_plus_faces(sb.bundle);
    CHECK(!find_rainbow(sb.bundle.result.graph(), c.colors(), PatternSpec::cycle(k)));
}

TEST_CASE("C5 host screening")
{
    const auto k4 = verify_c5_host(PlaneGraph::build(4, complete_graph(4).edges()));
    CHECK(!k4.all_pass());
    CHECK(!k4.face_counts);
    CHECK(!k4.failures().empty());
    const auto ico = verify_c5_host(gen::icosahedron());
    CHECK(!ico.c5_free);
    CHECK(!ico.all_pass());
    for (int n = 4; n <= 7; ++n)
        for (const auto& t : enumerate_triangulations(n).members)
            CHECK(!verify_c5_host(t).all_pass());
    CHECK(code_of([] { build_c5_star(gen::icosahedron(), 0); }) == ErrorCode::HostRejected);
    CHECK(code_of([] { build_c5_star(gen::icosahedron(), 18); }) == ErrorCode::InvalidParam);
}

TEST_CASE("wheels")
{
    const auto w3 = build_wheel(3);
    CHECK(oracle::isomorphic(w3.graph(), complete_graph(4)));
    CHECK(build_wheel(5).edge_count() == 10);
    const auto w6 = build_wheel(6);
    CHECK(f_of(w6, 3) == 6);
    CHECK(f_of(w6, 6) == 1);
    CHECK(w6.face(w6.outer_face()).size() == 6);
    for (int i = 1; i <= 6; ++i) {
        CHECK(w6.edge(i - 1) == Edge{0, i});
        const auto rim = w6.edge(6 + i - 1);
        CHECK(((rim.u == i && rim.v == i % 6 + 1) || (rim.v == i && rim.u == i % 6 + 1)));
    }
    CHECK(code_of([] { build_wheel(2); }) == ErrorCode::InvalidParam);
    CHECK(build_wheel_bundle(7).landmark("v7") == 7);
}
