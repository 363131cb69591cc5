#include "rainbow/certificate.hpp"

#include <fstream>
#include <sstream>

#include "rainbow/graph_io.hpp"

namespace rainbow {

bool VerificationSummary::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

const CheckResult* VerificationSummary::find(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

Certificate make_certificate(const BuildBundle& bundle)
{
    Certificate c;
    c.params = bundle.params;
    c.base = bundle.base;
    c.stellation_set = bundle.stellation_set;
    c.result = bundle.result;
    c.landmarks = bundle.landmarks;
    c.expected_colors = bundle.expected_colors;
    return c;
}

BuildBundle bundle_of(const Certificate& cert)
{
    if (!cert.base)
        throw Error(ErrorCode::InvalidParam, "certificate has no base graph");
    BuildBundle b;
    b.params = cert.params;
    b.base = *cert.base;
    b.stellation_set = cert.stellation_set;
    b.result = cert.result;
    b.landmarks = cert.landmarks;
    b.expected_colors = cert.expected_colors;
    return b;
}

namespace {

struct ParamField {
    const char* name;
    int ConstructionParams::*field;
};

constexpr ParamField param_fields[] = {
    {"n", &ConstructionParams::n},     {"k", &ConstructionParams::k},
    {"p", &ConstructionParams::p},     {"t", &ConstructionParams::t},
    {"q", &ConstructionParams::q},     {"m", &ConstructionParams::m},
    {"r", &ConstructionParams::r},     {"eps", &ConstructionParams::eps},
    {"eps_star", &ConstructionParams::eps_star}, {"eps_prime", &ConstructionParams::eps_prime},
};

void write_ids(std::ostringstream& out, const std::vector<int>& ids)
{
    for (int id : ids)
        out << ' ' << id;
}

std::vector<int> parse_ids(const std::vector<std::string>& words, size_t from, size_t to)
{
    std::vector<int> out;
    for (size_t i = from; i < to; ++i)
        out.push_back(parse_int(words[i]));
    return out;
}

[[noreturn]] void bad(const std::string& line) { throw Error(ErrorCode::Parse, "bad certificate line: " + line); }

} // namespace

std::string write_certificate(const Certificate& cert)
{
    std::ostringstream out;
    out << "certificate " << Certificate::schema_version << '\n';
    out << "kind " << to_string(cert.params.kind) << '\n';
    for (const auto& f : param_fields)
        out << "param " << f.name << ' ' << cert.params.*f.field << '\n';
    out << "expected-colors " << cert.expected_colors << '\n';
    if (cert.pattern)
        out << "pattern " << *cert.pattern << '\n';
    for (const auto& [name, v] : cert.landmarks)
        out << "landmark " << name << ' ' << v << '\n';
    if (cert.base) {
        out << "begin base\n" << write_graph(*cert.base) << "end base\n";
        out << "stellate";
        write_ids(out, cert.stellation_set);
        out << '\n';
    }
    out << "begin result\n" << write_graph(cert.result) << "end result\n";
    if (cert.coloring)
        out << "begin coloring\n" << write_coloring(*cert.coloring) << "end coloring\n";
    for (const auto& c : cert.summary.checks) {
        out << "check " << c.name << ' ' << (c.pass ? "pass" : "fail");
        if (!c.detail.empty())
            out << ' ' << c.detail;
        out << '\n';
        if (c.witness) {
            out << "witness " << c.name << " vertices";
            write_ids(out, c.witness->vertices);
            out << " edges";
            write_ids(out, c.witness->edges);
            out << '\n';
        }
    }
    return out.str();
}

Certificate read_certificate(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty())
        throw Error(ErrorCode::Parse, "empty certificate");
    const auto head = split_words(lines[0]);
    if (head.size() != 2 || head[0] != "certificate")
        throw Error(ErrorCode::Parse, "missing 'certificate' header");
    if (parse_int(head[1]) != Certificate::schema_version)
        throw Error(ErrorCode::Parse, "unsupported certificate version " + head[1]);

    Certificate cert;
    bool have_kind = false, have_result = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto w = split_words(line);
        const std::string& key = w[0];
        if (key == "begin" && w.size() == 2) {
            std::string block;
            size_t j = i + 1;
            for (; j < lines.size() && lines[j] != "end " + w[1]; ++j)
                block += lines[j] + '\n';
            if (j == lines.size())
                throw Error(ErrorCode::Parse, "unterminated block '" + w[1] + "'");
            if (w[1] == "base")
                cert.base = read_graph(block);
            else if (w[1] == "result") {
                cert.result = read_graph(block);
                have_result = true;
            } else if (w[1] == "coloring")
                cert.coloring = read_coloring(block);
            else
                bad(line);
            i = j;
        } else if (key == "kind" && w.size() == 2) {
            cert.params.kind = parse_construction_kind(w[1]);
            have_kind = true;
        } else if (key == "param" && w.size() == 3) {
            bool known = false;
            for (const auto& f : param_fields)
                if (w[1] == f.name) {
                    cert.params.*f.field = parse_int(w[2]);
                    known = true;
                }
            if (!known)
                bad(line);
        } else if (key == "expected-colors" && w.size() == 2) {
            cert.expected_colors = parse_int(w[1]);
        } else if (key == "pattern" && w.size() == 2) {
            cert.pattern = w[1];
        } else if (key == "landmark" && w.size() == 3) {
            cert.landmarks.push_back({w[1], parse_int(w[2])});
        } else if (key == "stellate") {
            cert.stellation_set = parse_ids(w, 1, w.size());
        } else if (key == "check" && w.size() >= 3) {
            CheckResult c;
            c.name = w[1];
            if (w[2] != "pass" && w[2] != "fail")
                bad(line);
            c.pass = w[2] == "pass";
            for (size_t j = 3; j < w.size(); ++j)
                c.detail += (j > 3 ? " " : "") + w[j];
            cert.summary.checks.push_back(std::move(c));
        } else if (key == "witness" && w.size() >= 4 && w[2] == "vertices") {
            if (cert.summary.checks.empty() || cert.summary.checks.back().name != w[1])
                throw Error(ErrorCode::Parse, "witness must follow its check: " + line);
            size_t split = 3;
            while (split < w.size() && w[split] != "edges")
                ++split;
            if (split == w.size())
                bad(line);
            Witness wit;
            wit.vertices = parse_ids(w, 3, split);
            wit.edges = parse_ids(w, split + 1, w.size());
            cert.summary.checks.back().witness = std::move(wit);
        } else {
            bad(line);
        }
    }
    if (!have_kind || !have_result)
        throw Error(ErrorCode::Parse, "certificate needs 'kind' and a result graph");
    if (cert.coloring && cert.coloring->edge_count() != cert.result.edge_count())
        throw Error(ErrorCode::Parse, "colouring does not cover the result graph");
    return cert;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
    out << text;
}

} // namespace rainbow
