#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/certificate.hpp"

namespace rainbow {

// Check names:
//   triangulation             result is a plane triangulation
//   vertices                  |result| equals param n
//   colors                    colouring is surjective onto exactly expected-colors colours
//   contains                  result contains the pattern
//   no-rainbow                colouring has no rainbow copy of the pattern
//   rainbow-companion         colouring has a rainbow copy of the companion pattern
//   base-free                 base graph has no copy of the pattern
//   base-companion            base graph contains the companion pattern
//   longest-path              longest path in the result (value checked for lemma-th)
//   longest-path-constrained  longest path with both ends in the base (lemma-th)
//   independent-added         the stellation vertices form an independent set
const std::vector<std::string>& known_checks();

struct VerifyOptions {
    /// Defaults depend on the construction kind.
    std::optional<PatternSpec> pattern;
    std::optional<PatternSpec> companion;
    /// Empty: the kind's default list.
    std::vector<std::string> checks;
    SearchBudget budget;
};

/// Default pattern / companion / checks for the certificate's kind.
VerifyOptions default_verify_options(const Certificate& cert);

/// Runs the checks (filling unset options from the defaults). Deterministic.
VerificationSummary verify_certificate(const Certificate& cert, const VerifyOptions& options = {});

/// Attaches the construction's own colouring scheme. Wheels need params.k
/// set; their expected colour count becomes floor((2k-7)q/(k-3)).
void apply_coloring_scheme(Certificate& cert);

} // namespace rainbow
