#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liepres/catalog.hpp"
#include "liepres/chevalley.hpp"
#include "liepres/lie.hpp"
#include "liepres/report.hpp"
#include "liepres/span.hpp"

namespace liepres {

struct VerifyOptions {
  // Spot-check mode: residuals are tested at this numeric t instead of the
  // formal parameter.  Recovery still runs with formal t.
  std::optional<Rational> t_value;
  // nullptr means the built-in catalog.
  const Catalog* catalog = nullptr;
};

// A catalog key made concrete: the resolved block plus the backend that
// realizes it.  Star keys are limit families with no backend of their own.
struct BackendContext {
  ResolvedCatalog resolved;
  std::optional<GeneratorTriple> triple;
  // Exceptional keys keep the structure-constant algebra for sign retries.
  std::shared_ptr<const ChevalleyAlgebra> chevalley;
  long expected_dim = -1;  // finite-dimensional keys; -1 otherwise
  bool is_lambda = false;  // Weyl backend (formal lambda)
  bool is_star = false;    // limit family, no backend
};

BackendContext build_backend(const ResolvedCatalog& resolved);

// The expected decomposition profile of the adjoint module, as the sorted
// multiset of top weights k (one entry per irreducible summand L^k).
struct SpectrumExpectation {
  std::vector<int> computed;  // what decompose_adjoint must produce
  std::vector<int> printed;   // the stored table row
  bool flagged = false;       // printed row over-counts (the o(2n) rows)
};
SpectrumExpectation expected_spectrum(const std::string& family, long n);

// Runs the key's whole block: relations (0), (1), the numbered relations,
// the truncation relation, then the generation and decomposition checks
// (finite keys) or the Casimir-image check (lambda keys).  Star keys verify
// each stored entry against the lambda -> infinity limit of the matching
// lambda-family entry.  Failures are report entries, never exceptions.
VerificationReport verify_suite(const std::string& key, const VerifyOptions& options = {});

// The unknowns-variant sweep behind `recover`: for every catalog entry of
// the key with a nonempty right side, forget the printed coefficients and
// re-derive them from the backend, reporting whether they match.
VerificationReport recover_suite(const std::string& key, const VerifyOptions& options = {});

}  // namespace liepres
