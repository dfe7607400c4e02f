#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyeuler/poly_euler.hpp"

namespace polyeuler {

enum class VariantClass {
  /// The identity with the printed index ranges, exponents, signs and arguments.
  printed,
  /// A single suspected-typo site changed (transposition, sign, argument, range).
  variant,
  /// A printed sum checked against the series it claims to expand, or a
  /// series-level equality evaluated by substitution.
  oracle,
  /// k = 1 reductions, lambda -> 0 limits and related sanity relations.
  reduction,
};

std::string_view to_string(VariantClass c);

enum class IdentityDomain { classical, degenerate };

using SideEvaluator = std::function<XLambdaPoly(const Families&, int n, int k)>;

/// One registered identity check: LHS(n, k) == RHS(n, k) in Q[lambda][x].
struct IdentitySpec {
  std::string id;
  std::string variant;
  VariantClass variant_class = VariantClass::printed;
  std::string description;
  IdentityDomain domain = IdentityDomain::classical;
  int min_n = 0;
  /// When set, the identity is checked for these k only, whatever grid is requested.
  std::optional<std::vector<int>> fixed_k;
  /// The identity does not involve k; it is checked once per n.
  bool k_independent = false;
  /// Part of the set whose failure makes `verify` exit nonzero.
  bool must_pass = false;
  /// For must-pass entries that are only required up to some n.
  std::optional<int> must_pass_n_max;
  SideEvaluator lhs;
  SideEvaluator rhs;

  /// Default n_max: 12 for classical identities, 10 for degenerate ones.
  int default_n_max() const { return domain == IdentityDomain::classical ? 12 : 10; }
};

struct IdentityFailure {
  int n = 0;
  int k = 0;
  /// LHS - RHS, nonzero.
  XLambdaPoly difference;
};

struct CheckedRange {
  int n_min = 0;
  int n_max = 0;
  /// Empty for k-independent identities.
  std::vector<int> k;
  bool k_independent = false;
  bool empty() const { return n_max < n_min || (!k_independent && k.empty()); }
};

enum class Verdict { pass, fail };

struct IdentityReport {
  std::string id;
  std::string variant;
  VariantClass variant_class = VariantClass::printed;
  bool must_pass = false;
  Verdict verdict = Verdict::pass;
  CheckedRange checked_range;
  std::optional<IdentityFailure> first_failure;
  double runtime_ms = 0.0;

  /// False only for a must-pass entry that failed within its required range.
  bool must_pass_satisfied() const;
};

/// The full registry: every numbered result with its printed form and the
/// registered variants, plus reduction and oracle checks.
std::vector<IdentitySpec> register_builtin();

/// Identifiers of the numbered lemma/theorem/corollary results.
std::vector<std::string> numbered_result_ids();

/// Compares both sides for n = max(min_n, 0)..n_max (outer) and each k
/// (inner), stopping at the first mismatch.
///
/// Throws OrderExceeded when n_max + 2 exceeds the truncation order of `fam`.
IdentityReport check_identity(const Families& fam, const IdentitySpec& spec, int n_max,
                              const std::vector<int>& k_set);

enum class VariantSelection { all, printed_only };

struct SuiteOptions {
  /// Per-identity default when unset.
  std::optional<int> n_max;
  std::vector<int> k_set = {-2, -1, 0, 1, 2, 3};
  VariantSelection variants = VariantSelection::all;
  /// Empty means every registered id. Throws UnknownIdentity for unknown ids.
  std::vector<std::string> ids;
};

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int must_pass_failed = 0;
  /// Failures that do not belong to the must-pass set.
  int discrepancy_count = 0;
  struct ClassCount {
    int passed = 0;
    int failed = 0;
  };
  ClassCount printed, variant, oracle, reduction;
};

struct SuiteResult {
  std::vector<IdentityReport> reports;
  SuiteSummary summary;
  bool all_must_pass_satisfied() const { return summary.must_pass_failed == 0; }
};

/// Runs every selected identity; reports are sorted by (id, variant).
SuiteResult run_suite(const Families& fam, const SuiteOptions& options);

SuiteSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace polyeuler
