#pragma once

#include <compare>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Isomorphism-invariant byte string: equal labels iff isomorphic graphs.
class CanonicalLabel {
public:
    CanonicalLabel() = default;
    explicit CanonicalLabel(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    std::string hex() const;

    auto operator<=>(const CanonicalLabel&) const = default;

private:
    std::string bytes_;
};

/// Individualisation-refinement canonical form: colour refinement to an
/// equitable ordered partition, branching on the first smallest non-trivial
/// cell, keeping the lexicographically smallest adjacency code over leaves.
/// Exponential in the worst case; intended for graphs of a couple of dozen
/// vertices at most.
CanonicalLabel canonical_label(const Graph& g);

} // namespace rainbow
