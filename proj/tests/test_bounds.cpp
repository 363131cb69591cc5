#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbow/bounds.hpp"
#include "rainbow/error.hpp"

// boost::rational == integer recurses forever under C++20 rewritten operators
// (Boost 1.74), so every comparison below is Rational against Rational.

using namespace rainbow;

namespace {

Rational lower(const char* tag, int n, int k = 0, int q = 0) { return *eval_bound(tag, {n, k, q}).lower; }
Rational upper(const char* tag, int n, int k = 0, int q = 0) { return *eval_bound(tag, {n, k, q}).upper; }

bool out_of_range(const char* tag, BoundParams p)
{
    try {
        eval_bound(tag, p);
    } catch (const Error& e) {
        return e.code() == ErrorCode::OutOfRange;
    }
    return false;
}

} // namespace

TEST_CASE("rational helpers")
{
    CHECK((floor_of(Rational(7, 2)) == 3));
    CHECK((floor_of(Rational(-7, 2)) == -4));
    CHECK((ceil_of(Rational(7, 2)) == 4));
    CHECK((ceil_of(Rational(-7, 2)) == -3));
    CHECK((floor_of(Rational(6, 3)) == 2));
    CHECK((to_string(Rational(238, 3)) == "238/3"));
    CHECK((to_string(Rational(-4)) == "-4"));
}

TEST_CASE("prior results")
{
    for (int n = 4; n <= 20; ++n) {
        CHECK((lower("c3-exact", n) == Rational((3 * n - 6) / 2)));
        CHECK((upper("c3-exact", n) == Rational((3 * n - 6) / 2)));
        CHECK((upper("ex-c3", n) == Rational(2 * n - 4)));
        CHECK((upper("c4-upper", n) == Rational(2 * n - 4)));
    }
    CHECK((lower("c4-lower", 42) == Rational(9 * 40, 5)));
    CHECK((lower("c5-lower-prior", 20) == Rational(38)));
    CHECK((lower("c5-lower-prior", 21) == Rational(19 * 19 - 10, 9)));
    CHECK((upper("c5-upper-prior", 10) == Rational(20)));
    CHECK((lower("ck-lower-prior", 30, 6) == Rational(84 * 3, 4) - Rational(5, 4)));
    CHECK((upper("ex-c4", 9) == Rational(15)));
    CHECK((upper("ex-c5", 11) == Rational(99, 5)));
    CHECK((upper("ex-c6", 9) == Rational(18)));
    CHECK((out_of_range("c4-lower", {41, 0, 0})));
    CHECK((out_of_range("ck-lower-prior", {30, 5, 0})));
    CHECK((out_of_range("ex-c5", {10, 0, 0})));
}

TEST_CASE("path construction bounds")
{
    CHECK((lower("p89-lower", 8, 8) == Rational(10)));
    CHECK((lower("p89-lower", 9, 9) == Rational(13)));
    CHECK((lower("p89-lower", 9, 8) == Rational(12)));
    CHECK((lower("pk-small-lower", 12, 12) == Rational(24)));
    CHECK((out_of_range("pk-small-lower", {13, 12, 0})));
    CHECK((lower("pk-mid-lower", 10, 10) == Rational(30 + 45 - 43, 2)));
    CHECK((lower("pk-mid-construction", 10, 10) == Rational(16)));
    CHECK((out_of_range("pk-mid-lower", {11, 10, 0})));
    CHECK((lower("pk-large-lower", 11, 10) == Rational(18)));
    CHECK((lower("pk-large-construction", 11, 10) == Rational(18)));
    CHECK((lower("pk-large-construction", 12, 10) == Rational(21)));
    CHECK((lower("pk-large-construction", 13, 10) == Rational(22)));
    // The construction count never drops below the stated bound.
    for (int k = 10; k <= 16; ++k)
        for (int n = k; n <= k + 20; ++n) {
            if (in_range("pk-mid-lower", {n, k, 0}))
                CHECK((lower("pk-mid-construction", n, k) >= ceil_of(lower("pk-mid-lower", n, k))));
            if (in_range("pk-large-lower", {n, k, 0}))
                CHECK((lower("pk-large-construction", n, k) >= lower("pk-large-lower", n, k)));
            const int ranges = in_range("pk-small-lower", {n, k, 0}) + in_range("pk-mid-lower", {n, k, 0}) +
                               in_range("pk-large-lower", {n, k, 0});
            CHECK((ranges == 1));
        }
}

TEST_CASE("cycle construction bounds")
{
    CHECK((lower("ck-subdivision-lower", 20, 5) == Rational(38)));
    CHECK((lower("ck-subdivision-lower", 38, 5) == Rational(76)));
    CHECK((lower("ck-subdivision-lower", 30, 6) == Rational(65)));
    CHECK((lower("ck-subdivision-construction", 30, 6) == Rational(65)));
    CHECK((lower("ck-subdivision-construction", 42, 7) == Rational(98)));
    CHECK((out_of_range("ck-subdivision-lower", {19, 5, 0})));
    for (int k = 5; k <= 9; ++k)
        for (int n = k * k - k; n <= k * k - k + 120; ++n)
            CHECK((lower("ck-subdivision-lower", n, k) == lower("ck-subdivision-construction", n, k)));
    CHECK((lower("c5-stellation-lower", 119) == Rational(39 * 119 - 123 - 21 * 0, 18)));
    CHECK((*eval_bound("c5-stellation-lower", {136, 0, 0}).r == 17));
    CHECK((out_of_range("c5-stellation-lower", {118, 0, 0})));
    CHECK((upper("c6-palette-upper", 8) == Rational(17)));
    CHECK((upper("c7-palette-upper", 13) == Rational(59 * 13 - 113, 20)));
    const auto s = eval_bound("c6-sandwich", {58, 0, 0});
    CHECK((*s.r == 0));
    CHECK((*s.lower == Rational(130)));
    CHECK((*s.upper == Rational(144)));
}

TEST_CASE("wheel bounds")
{
    for (int q = 5; q <= 30; ++q) {
        const auto w = eval_bound("wheel-c6-exact", {0, 0, q});
        CHECK((*w.lower == Rational(floor_of(Rational(5 * q, 3)))));
        CHECK((*eval_bound("wheel-ck", {0, 6, q}).lower == *w.lower));
        CHECK((*eval_bound("wheel-ck", {0, 6, q}).upper >= *w.upper));
    }
    CHECK((*eval_bound("wheel-ck", {0, 5, 4}).lower == Rational(6)));
    CHECK((*eval_bound("wheel-ck", {0, 5, 4}).upper == Rational(6)));
    // Evaluated as printed the corollary overshoots the wheel upper bound at W5 / C6.
    const auto cor = eval_bound("wheel-ck-corollary", {0, 6, 5});
    CHECK((*cor.lower == Rational(9)));
    CHECK((*eval_bound("wheel-ck", {0, 6, 5}).upper == Rational(8)));
    CHECK((out_of_range("wheel-ck-corollary", {0, 6, 6})));
    CHECK((out_of_range("wheel-ck", {0, 6, 4})));
}

TEST_CASE("every tag evaluates somewhere")
{
    for (const auto& tag : bound_tags()) {
        bool hit = false;
        for (int n = 3; n <= 200 && !hit; ++n)
            for (int k = 3; k <= 14 && !hit; ++k)
                for (int q : {0, 5, 12})
                    if (!hit && in_range(tag, {n, k, q})) {
                        const auto r = eval_bound(tag, {n, k, q});
                        CHECK(((r.lower || r.upper)));
                        CHECK((!r.family.empty()));
                        hit = true;
                    }
        CHECK_MESSAGE(hit, tag);
    }
    CHECK_THROWS_AS(eval_bound("no-such-bound", {10, 5, 0}), Error);
}

TEST_CASE("consistency over the C5, C6, C7 chains")
{
    const auto rep = consistency_report();
    CHECK((rep.violations.empty()));
    CHECK((rep.comparisons > 1000));
    ConsistencyGrid g;
    g.cycle_lengths = {};
    g.wheel_corollary = true;
    const auto w = consistency_report(g);
    CHECK((!w.violations.empty()));
}

TEST_CASE("tables")
{
    std::vector<BoundRecord> recs{eval_bound("c6-sandwich", {30, 6, 0}), eval_bound("ex-c6", {30, 6, 0})};
    const auto csv = format_table(recs, TableFormat::Csv);
    CHECK((csv == "family,params,lower,upper,source\n"
                 "C6,n=30 k=6 r=0,65,72,c6-sandwich\n"
                 "ex:C6,n=30 k=6,-,72,ex-c6\n"));
    const auto text = format_table(recs, TableFormat::Text);
    CHECK((text.find("c6-sandwich") != std::string::npos));
    CHECK((text.substr(0, 6) == "family"));
    const auto wheel = format_table({eval_bound("wheel-ck", {0, 7, 9})}, TableFormat::Csv);
    CHECK((wheel.find("\"W9,C7\"") != std::string::npos));
}
