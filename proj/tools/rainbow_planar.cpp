#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/certificate.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/verify.hpp"

namespace {

using namespace rainbow;
using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

std::optional<std::filesystem::path> cache_dir()
{
    if (const char* dir = std::getenv("RAINBOW_PLANAR_CACHE"); dir && *dir)
        return std::filesystem::path(dir);
    return std::nullopt;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_text_file(out, text);
}

json witness_json(const Witness& w) { return {{"vertices", w.vertices}, {"edges", w.edges}}; }

json summary_json(const VerificationSummary& s)
{
    json checks = json::array();
    for (const auto& c : s.checks) {
        json j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        if (c.witness)
            j["witness"] = witness_json(*c.witness);
        checks.push_back(j);
    }
    return {{"pass", s.all_pass()}, {"checks", checks}};
}

void print_summary(const VerificationSummary& s)
{
    for (const auto& c : s.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty())
            std::cout << ": " << c.detail;
        std::cout << '\n';
        if (c.witness) {
            std::cout << "  witness vertices";
            for (int v : c.witness->vertices)
                std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    std::cout << (s.all_pass() ? "all checks passed" : "some checks failed") << '\n';
}

struct Globals {
    bool json = false;
    std::optional<std::uint64_t> seed;
    int threads = 1;
};

struct BuildArgs {
    std::string kind;
    int p = 0, k = 0, n = 0, q = 0, r = 0;
    std::string host;
    bool color = false;
    std::string out;
};

Certificate build_certificate(const BuildArgs& a, const Globals& g)
{
    FaceChoice choice;
    choice.shuffle_seed = g.seed;
    Certificate cert;
    if (a.kind == "pk") {
        cert = make_certificate(build_pk(a.k, a.n, choice));
    } else {
        switch (parse_construction_kind(a.kind)) {
        case ConstructionKind::LemmaTH: cert = make_certificate(build_lemma_th(a.p)); break;
        case ConstructionKind::P89: cert = make_certificate(build_p89_host(a.k, a.n, choice)); break;
        case ConstructionKind::PkSmall: cert = make_certificate(build_pk_small(a.k, a.n, choice)); break;
        case ConstructionKind::PkMid: cert = make_certificate(build_pk_mid(a.k, a.n)); break;
        case ConstructionKind::PkLarge: cert = make_certificate(build_pk_large(a.k, a.n)); break;
        case ConstructionKind::C5Star:
            if (a.host.empty())
                throw Error(ErrorCode::InvalidParam, "c5-star needs --host");
            cert = make_certificate(build_c5_star(read_graph(read_text_file(a.host)), a.r, choice));
            break;
        case ConstructionKind::CkSubdiv: {
            CkSubdivOptions opts;
            opts.choice = choice;
            cert = make_certificate(build_ck_subdiv(a.k, a.n, opts).bundle);
            break;
        }
        case ConstructionKind::Wheel:
            cert = make_certificate(build_wheel_bundle(a.q));
            cert.params.k = a.k;
            break;
        case ConstructionKind::Host:
            if (a.host.empty())
                throw Error(ErrorCode::InvalidParam, "host needs --host");
            cert.result = read_graph(read_text_file(a.host));
            cert.params.kind = ConstructionKind::Host;
            cert.params.n = cert.result.vertex_count();
            break;
        }
    }
    if (a.color)
        apply_coloring_scheme(cert);
    return cert;
}

struct HostSpec {
    Certificate cert;
    std::optional<int> family_n;
};

HostSpec parse_host(const std::string& spec)
{
    HostSpec h;
    h.cert.params.kind = ConstructionKind::Host;
    if (spec.rfind("wheel:", 0) == 0) {
        const int q = parse_int(spec.substr(6));
        h.cert.result = build_wheel(q);
        h.cert.params.q = q;
    } else if (spec.rfind("family:", 0) == 0) {
        h.family_n = parse_int(spec.substr(7));
    } else {
        h.cert.result = read_graph(read_text_file(spec));
    }
    return h;
}

int run_exact(const std::string& host_spec, const std::string& pattern_text, int max_edges, const std::string& out,
              const Globals& g)
{
    const auto pattern = PatternSpec::parse(pattern_text);
    ExactOptions opts;
    opts.max_edges = max_edges;
    opts.threads = g.threads;
    HostSpec h = parse_host(host_spec);
    ArResult res;
    json extra = json::object();
    if (h.family_n) {
        const auto planar = exact_planar_ar(*h.family_n, pattern, opts, cache_dir());
        res = planar.best;
        h.cert.result = planar.host;
        extra["catalog_size"] = planar.values.size();
        extra["values"] = planar.values;
    } else {
        res = exact_ar_fixed_host(h.cert.result.graph(), pattern, opts);
    }
    h.cert.params.n = h.cert.result.vertex_count();
    h.cert.coloring = res.witness;
    h.cert.expected_colors = res.value;
    h.cert.pattern = pattern.name();
    if (!out.empty())
        write_text_file(out, write_certificate(h.cert));
    if (g.json) {
        json j = {{"pattern", pattern.name()},          {"value", res.value},
                  {"degenerate", res.degenerate},       {"pattern_copies", res.pattern_copies},
                  {"host_vertices", res.host.vertex_count()}, {"host_edges", res.host.edge_count()},
                  {"nodes", res.stats.nodes},           {"seconds", res.stats.seconds},
                  {"witness", res.witness.colors()}};
        j.update(extra);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << res.value << '\n';
        if (res.degenerate)
            std::cout << "host has no copy of " << pattern.name() << "; value is e(host)\n";
    }
    return exit_pass;
}

ConsistencyGrid grid_of(int n_min, int n_max, const std::vector<int>& ks)
{
    ConsistencyGrid grid;
    grid.n_min = n_min;
    grid.n_max = n_max;
    grid.cycle_lengths = ks;
    return grid;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Plane triangulation constructions, rainbow colourings and anti-Ramsey checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for randomised face choices");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

    BuildArgs b;
    auto* build = app.add_subcommand("build", "Build a construction and write its certificate");
    build->add_option("kind", b.kind,
                      "lemma-th, p89, pk, pk-small, pk-mid, pk-large, c5-star, ck-subdiv, wheel, host")
        ->required();
    build->add_option("--p", b.p, "Path length parameter (lemma-th)");
    build->add_option("--k", b.k, "Pattern length");
    build->add_option("--n", b.n, "Number of vertices");
    build->add_option("--q", b.q, "Rim size (wheel)");
    build->add_option("--r", b.r, "Number of extra stellated triangles (c5-star)");
    build->add_option("--host", b.host, "Host graph file (c5-star, host)");
    build->add_flag("--color", b.color, "Also attach the construction's colouring");
    build->add_option("-o,--out", b.out, "Output certificate (default stdout)");

    std::string cert_path, color_out;
    int color_k = 0;
    auto* color = app.add_subcommand("color", "Attach the construction's colouring to a certificate");
    color->add_option("certificate", cert_path)->required();
    color->add_option("--k", color_k, "Cycle length (wheels)");
    color->add_option("-o,--out", color_out, "Output certificate (default stdout)");

    std::string verify_path, verify_out, pattern_text, companion_text;
    std::vector<std::string> checks;
    auto* verify = app.add_subcommand("verify", "Run checks on a certificate");
    verify->add_option("certificate", verify_path)->required();
    verify->add_option("--pattern", pattern_text, "Forbidden pattern, e.g. P8 or C5");
    verify->add_option("--companion", companion_text, "Pattern that should appear rainbow");
    verify->add_option("--check", checks, "Checks to run (repeatable or comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember(known_checks()));
    verify->add_option("-o,--out", verify_out, "Write the certificate with the updated summary");

    std::string host_spec, exact_pattern, exact_out;
    int max_edges = ExactOptions{}.max_edges;
    auto* exact = app.add_subcommand("exact-ar", "Exact anti-Ramsey number on a host or a small family");
    exact->add_option("--host", host_spec, "Graph file, wheel:<q> or family:<n>")->required();
    exact->add_option("--pattern", exact_pattern, "Pattern, e.g. C6")->required();
    exact->add_option("--max-edges", max_edges, "Refuse hosts with more edges");
    exact->add_option("-o,--out", exact_out, "Write a witness certificate");

    int enum_n = 0;
    std::string enum_out;
    auto* enumerate = app.add_subcommand("enumerate", "Write the catalogue of triangulations on n vertices");
    enumerate->add_option("n", enum_n)->required();
    enumerate->add_option("-o,--out", enum_out, "Output directory")->required();

    int n_min = 8, n_max = 200;
    std::vector<int> ks{5, 6, 7};
    std::string format = "text";
    bool with_wheels = false;
    auto* table = app.add_subcommand("table", "Bounds table and consistency report");
    table->add_option("--n-min", n_min);
    table->add_option("--n-max", n_max);
    table->add_option("--k", ks, "Cycle lengths")->delimiter(',');
    table->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    table->add_flag("--wheel-corollary", with_wheels, "Also compare the printed wheel corollary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*build) {
            emit(write_certificate(build_certificate(b, g)), b.out);
            return exit_pass;
        }
        if (*color) {
            Certificate cert = read_certificate(read_text_file(cert_path));
            if (color_k)
                cert.params.k = color_k;
            apply_coloring_scheme(cert);
            cert.summary = {};
            emit(write_certificate(cert), color_out);
            return exit_pass;
        }
        if (*verify) {
            Certificate cert = read_certificate(read_text_file(verify_path));
            VerifyOptions opts;
            if (!pattern_text.empty())
                opts.pattern = PatternSpec::parse(pattern_text);
            if (!companion_text.empty())
                opts.companion = PatternSpec::parse(companion_text);
            opts.checks = checks;
            cert.summary = verify_certificate(cert, opts);
            if (g.json)
                std::cout << summary_json(cert.summary).dump(2) << '\n';
            else
                print_summary(cert.summary);
            if (!verify_out.empty())
                write_text_file(verify_out, write_certificate(cert));
            return cert.summary.all_pass() ? exit_pass : exit_check_failed;
        }
        if (*exact)
            return run_exact(host_spec, exact_pattern, max_edges, exact_out, g);
        if (*enumerate) {
            std::filesystem::create_directories(enum_out);
            const auto cat = enumerate_triangulations(enum_n, std::filesystem::path(enum_out));
            if (g.json)
                std::cout << json{{"n", enum_n}, {"count", cat.members.size()}}.dump() << '\n';
            else
                std::cout << cat.members.size() << " triangulations on " << enum_n << " vertices\n";
            return exit_pass;
        }
        if (*table) {
            auto grid = grid_of(n_min, n_max, ks);
            grid.wheel_corollary = with_wheels;
            const auto rep = consistency_report(grid);
            if (g.json) {
                json v = json::array();
                for (const auto& x : rep.violations)
                    v.push_back(x.what);
                std::cout << json{{"comparisons", rep.comparisons}, {"violations", v}}.dump(2) << '\n';
            } else {
                std::cout << format_table(rep.records, format == "csv" ? TableFormat::Csv : TableFormat::Text);
                std::ostream& note = format == "csv" ? std::cerr : std::cout;
                note << "# " << rep.comparisons << " comparisons, " << rep.violations.size()
                          << " violations\n";
                for (const auto& x : rep.violations)
                    note << "# violation: " << x.what << '\n';
            }
            return rep.violations.empty() ? exit_pass : exit_check_failed;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
