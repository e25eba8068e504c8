#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lisakit/analysis.hpp"

namespace lisakit {

/// Relative tolerance for identities that are a single algebraic step.
inline constexpr double kSingleStepTolerance = 1e-9;
/// Relative tolerance for identities that chain several computed quantities.
inline constexpr double kChainedTolerance = 1e-6;
/// A refuted claim counts as refuted when its relative gap exceeds this.
inline constexpr double kRefutationThreshold = 1e-6;

enum class Verdict { IdentityHolds, ClaimRefutedAsExpected, Unexpected };
enum class CheckKind { Identity, RefutedClaim };

std::string_view to_string(Verdict v) noexcept;

struct CheckRecord {
  std::string id;
  std::string equation;     ///< equation number(s) of the relation checked
  std::string description;
  CheckKind kind = CheckKind::Identity;
  bool chained = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  double tolerance = 0.0;
  /// For per-unit checks: index of the worst unit, otherwise -1.
  long worst_unit = -1;
  Verdict verdict = Verdict::Unexpected;
};

struct ReportContext {
  std::size_t n = 0;
  double v0 = 0.0;
  double sigma2 = 0.0;
  double s2 = 0.0;
  double gamma = 0.0;        ///< sigma^2 V0
  double gamma_c = 0.0;      ///< 2 n V0 / (n - 1)
  double gamma_c_row = 0.0;  ///< coefficient linking sum gc2 to C
  double moran_i = 0.0;
  double geary_c = 0.0;
};

struct VerificationReport {
  ReportContext context;
  std::vector<CheckRecord> checks;  ///< ordered by id

  bool identities_hold() const noexcept;
  bool claims_refuted() const noexcept;
  const CheckRecord* find(std::string_view id) const noexcept;
  /// Appends the other report's checks and re-sorts by id.
  void merge(const VerificationReport& other);
};

/// |lhs - rhs| / max(|lhs|, |rhs|, scale); scale guards sums that cancel.
double relative_gap(double lhs, double rhs, double scale = 0.0) noexcept;

/// Coefficient gamma*_c with sum gc2 = gamma*_c C under row weights.
double row_geary_coefficient(const Analysis& a);

/// The proportionality and conversion relations that must hold exactly on
/// any dataset. Any failure here is a bug, not a property of the data.
VerificationReport run_identity_suite(const Analysis& a);
VerificationReport run_identity_suite(const Dataset& data);

/// The two row-normalized relations that do not hold in general
/// (sum mi2 = nI, sum gc2 = 2n^2 C/(n-1)), next to the relations that do.
VerificationReport run_refutation_audit(const Analysis& a);
VerificationReport run_refutation_audit(const Dataset& data);

/// Both suites on one analysis, checks ordered by id.
VerificationReport run_all_checks(const Analysis& a);

}  // namespace lisakit
