#include "rainbow/verify.hpp"

#include <algorithm>

namespace rainbow {

const std::vector<std::string>& known_checks()
{
    static const std::vector<std::string> names = {
        "triangulation",  "vertices",          "colors",       "contains",
        "no-rainbow",     "rainbow-companion", "base-free",    "base-companion",
        "longest-path",   "longest-path-constrained", "independent-added",
    };
    return names;
}

VerifyOptions default_verify_options(const Certificate& cert)
{
    VerifyOptions o;
    const int k = cert.params.k;
    switch (cert.params.kind) {
    case ConstructionKind::LemmaTH:
        o.checks = {"triangulation", "vertices", "independent-added", "longest-path", "longest-path-constrained"};
        break;
    case ConstructionKind::P89:
    case ConstructionKind::PkSmall:
    case ConstructionKind::PkMid:
    case ConstructionKind::PkLarge:
        o.pattern = PatternSpec::path(k);
        o.companion = PatternSpec::path(k - 1);
        o.checks = {"triangulation", "vertices", "contains", "colors", "no-rainbow", "rainbow-companion"};
        break;
    case ConstructionKind::C5Star:
        o.pattern = PatternSpec::cycle(5);
        o.checks = {"triangulation", "vertices", "contains", "colors", "no-rainbow"};
        break;
    case ConstructionKind::CkSubdiv:
        o.pattern = PatternSpec::cycle(k);
        o.companion = PatternSpec::cycle(k + 1);
        o.checks = {"triangulation", "vertices",   "contains",  "base-free",
                    "base-companion", "colors",    "no-rainbow", "rainbow-companion"};
        break;
    case ConstructionKind::Wheel:
        if (k >= 4) {
            o.pattern = PatternSpec::cycle(k);
            o.companion = PatternSpec::cycle(k - 1);
            o.checks = {"vertices", "contains", "colors", "no-rainbow", "rainbow-companion"};
        } else {
            o.checks = {"vertices", "longest-path"};
        }
        break;
    case ConstructionKind::Host:
        o.checks = {"vertices", "colors"};
        break;
    }
    if (cert.pattern) {
        o.pattern = PatternSpec::parse(*cert.pattern);
        if (cert.params.kind == ConstructionKind::Host)
            o.checks = {"vertices", "contains", "colors", "no-rainbow"};
    }
    return o;
}

namespace {

std::string value_expected(long long value, long long expected)
{
    return "value " + std::to_string(value) + " expected " + std::to_string(expected);
}

const PatternSpec& need(const std::optional<PatternSpec>& p, const std::string& check, const char* what)
{
    if (!p)
        throw Error(ErrorCode::InvalidParam, "check '" + check + "' needs a " + what);
    return *p;
}

CheckResult run_check(const Certificate& cert, const VerifyOptions& o, const std::string& name)
{
    CheckResult c;
    c.name = name;
    const Graph& g = cert.result.graph();
    const auto& budget = o.budget;
    auto no_coloring = [&] {
        c.pass = false;
        c.detail = "no colouring";
        return c;
    };

    if (name == "triangulation") {
        c.pass = is_plane_triangulation(cert.result);
        c.detail = "edges " + std::to_string(cert.result.edge_count());
    } else if (name == "vertices") {
        c.pass = cert.result.vertex_count() == cert.params.n;
        c.detail = value_expected(cert.result.vertex_count(), cert.params.n);
    } else if (name == "colors") {
        if (!cert.coloring)
            return no_coloring();
        const int distinct = cert.coloring->distinct_colors();
        c.pass = cert.coloring->is_surjective() && cert.coloring->m() == cert.expected_colors &&
                 cert.coloring->edge_count() == cert.result.edge_count();
        c.detail = value_expected(distinct, cert.expected_colors) + " m " + std::to_string(cert.coloring->m());
    } else if (name == "contains") {
        const auto& p = need(o.pattern, name, "pattern");
        c.witness = contains(g, p, budget);
        c.pass = c.witness.has_value();
        c.detail = p.name();
    } else if (name == "no-rainbow" || name == "rainbow-companion") {
        if (!cert.coloring)
            return no_coloring();
        const bool absent_wanted = name == "no-rainbow";
        const auto& p = absent_wanted ? need(o.pattern, name, "pattern") : need(o.companion, name, "companion pattern");
        c.witness = find_rainbow(g, cert.coloring->colors(), p, budget);
        c.pass = c.witness.has_value() != absent_wanted;
        c.detail = p.name();
    } else if (name == "base-free" || name == "base-companion") {
        if (!cert.base)
            throw Error(ErrorCode::InvalidParam, "check '" + name + "' needs the base graph");
        const bool absent_wanted = name == "base-free";
        const auto& p = absent_wanted ? need(o.pattern, name, "pattern") : need(o.companion, name, "companion pattern");
        c.witness = contains(cert.base->graph(), p, budget);
        c.pass = c.witness.has_value() != absent_wanted;
        c.detail = p.name();
    } else if (name == "longest-path" || name == "longest-path-constrained") {
        const bool constrained = name == "longest-path-constrained";
        std::vector<char> filter;
        if (constrained) {
            if (!cert.base)
                throw Error(ErrorCode::InvalidParam, "check '" + name + "' needs the base graph");
            filter.assign(g.vertex_count(), 0);
            std::fill(filter.begin(), filter.begin() + cert.base->vertex_count(), 1);
        }
        const auto lp = longest_path(g, filter, budget);
        c.witness = lp.witness;
        if (cert.params.kind == ConstructionKind::LemmaTH) {
            const int p = cert.params.p;
            const int expected = constrained ? 2 * p + 3 : 2 * p + 5 - std::max(0, 3 - p);
            c.pass = lp.vertices == expected;
            c.detail = value_expected(lp.vertices, expected);
        } else {
            c.pass = true;
            c.detail = "value " + std::to_string(lp.vertices);
        }
    } else if (name == "independent-added") {
        if (!cert.base)
            throw Error(ErrorCode::InvalidParam, "check '" + name + "' needs the base graph");
        const int n0 = cert.base->vertex_count();
        int bad = 0;
        for (const auto& e : g.edges())
            if (e.u >= n0 && e.v >= n0)
                ++bad;
        c.pass = bad == 0;
        c.detail = "edges-among-added " + std::to_string(bad);
    } else {
        throw Error(ErrorCode::InvalidParam, "unknown check '" + name + "'");
    }
    return c;
}

} // namespace

VerificationSummary verify_certificate(const Certificate& cert, const VerifyOptions& options)
{
    VerifyOptions o = default_verify_options(cert);
    if (options.pattern)
        o.pattern = options.pattern;
    if (options.companion)
        o.companion = options.companion;
    if (!options.checks.empty())
        o.checks = options.checks;
    o.budget = options.budget;
    VerificationSummary s;
    for (const auto& name : o.checks)
        s.checks.push_back(run_check(cert, o, name));
    return s;
}

void apply_coloring_scheme(Certificate& cert)
{
    if (cert.params.kind == ConstructionKind::Wheel) {
        const int q = cert.params.q, k = cert.params.k;
        cert.coloring = wheel_coloring(q, k);
        cert.expected_colors = (2 * k - 7) * q / (k - 3);
        return;
    }
    if (cert.params.kind == ConstructionKind::Host)
        throw Error(ErrorCode::InvalidParam, "a bare host has no colouring scheme");
    cert.coloring = rainbow_plus_faces(bundle_of(cert));
}

} // namespace rainbow
