#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/colorings.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Single-line, space-separated detail such as "value 15 expected 15".
    std::string detail;
    std::optional<Witness> witness;

    friend bool operator==(const CheckResult& a, const CheckResult& b)
    {
        auto same = [](const std::optional<Witness>& x, const std::optional<Witness>& y) {
            if (x.has_value() != y.has_value())
                return false;
            return !x || (x->vertices == y->vertices && x->edges == y->edges);
        };
        return a.name == b.name && a.pass == b.pass && a.detail == b.detail && same(a.witness, b.witness);
    }
};

struct VerificationSummary {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    const CheckResult* find(std::string_view name) const;
    friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

struct Certificate {
    static constexpr int schema_version = 1;

    ConstructionParams params;
    std::optional<PlaneGraph> base;
    std::vector<FaceId> stellation_set;
    PlaneGraph result;
    Landmarks landmarks;
    int expected_colors = 0;
    std::optional<EdgeColoring> coloring;
    /// Pattern the colouring is meant to avoid, when not implied by the kind.
    std::optional<std::string> pattern;
    VerificationSummary summary;
};

Certificate make_certificate(const BuildBundle& bundle);
/// The bundle a certificate was built from (needs the base graph).
BuildBundle bundle_of(const Certificate& cert);

std::string write_certificate(const Certificate& cert);
Certificate read_certificate(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace rainbow
