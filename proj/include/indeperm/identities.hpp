#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indeperm/brute_force.hpp"
#include "indeperm/numeric.hpp"
#include "indeperm/series.hpp"

namespace indeperm {

/// First offending coefficient of a failed identity. i is the descent index,
/// or -1 for a univariate comparison.
struct CoefficientWitness {
  int n = 0;
  int i = -1;
  Rat lhs;
  Rat rhs;
};

/// One displayed generating-function identity, verified coefficientwise with
/// every series rebuilt from brute-force descent tables, so the check is
/// independent of the closed-form module.
struct IdentityRecord {
  enum class Status { Unchecked, Pass, Fail };

  std::string id;
  std::string description;
  bool bivariate = true;  // identity carries the descent refinement
  int order = 0;
  Status status = Status::Unchecked;
  std::optional<CoefficientWitness> witness;
  double seconds = 0.0;
};

const std::vector<std::string>& identity_catalog();

/// Bivariate avoider series assembled from a brute-force descent table.
BivariateSeries avoider_series(const VincularPattern& pattern, Restrict restrict, int order,
                               const EnumerationLimits& limits = {});

/// `id` must come from identity_catalog(). When track_descents is set and the
/// identity carries the refinement, coefficients are compared for every
/// descent index; otherwise at q = 1.
IdentityRecord verify_identity(const std::string& id, int order, bool track_descents,
                               const EnumerationLimits& limits = {});

/// Within-class equality of total avoider counts for the three length-4
/// classes (plus the length-3 agreement with the Catalan numbers) for all
/// n <= max_n, the reverse-complement pairings of indecomposable counts, and
/// distinctness of the three class profiles once max_n is large enough to
/// separate them (n = 7 splits the last pair).
struct WilfReport {
  bool pass = false;
  int max_n = 0;
  bool profiles_distinct = false;  // asserted only when max_n >= 7
  std::string detail;
};

WilfReport verify_wilf_classes(int max_n, const EnumerationLimits& limits = {});

struct SuiteReport {
  std::vector<IdentityRecord> identities;
  WilfReport wilf;
  std::vector<std::string> notes;  // typo-arbitration outcomes
  bool arbitration_pass = false;
  bool all_pass() const;
};

/// Runs every catalog entry at the given order, the Wilf-class check, and the
/// two text-arbitration checks (the 1234 constant term and the 1-32 tail).
SuiteReport run_all(int order, const EnumerationLimits& limits = {});

}  // namespace indeperm
