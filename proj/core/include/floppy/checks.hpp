#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floppy/arf.hpp"
#include "floppy/curve.hpp"
#include "floppy/pairing.hpp"
#include "floppy/rational.hpp"

namespace floppy {

enum class CheckStatus { pass, fail, not_applicable, conditional };

std::string check_status_str(CheckStatus s);

// One obstruction test. `fail` is a prohibition; `conditional` records an
// extremal case that survives only under the stated hypothesis.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::optional<Rat> lhs, rhs;
  std::string notes;
};

// Shared context: the colored curve, its derived counts, both region pairing
// matrices with their inertia, per-side cover characteristics and flop
// excesses, and the certificates the conditional gates consult.
struct Analysis {
  FloppyCurve curve;  // colored copy of the input
  DerivedCounts counts;
  std::vector<RegionProfile> profiles;
  long long k = 1;
  long long delta_v = 0;
  long long h = 0;
  Dividing dividing_effective = Dividing::unknown;
  bool dividing_forced = false;  // settled by h rather than declared
  long long o_plus = 0, o_minus = 0;
  long long chi_b_plus = 0, chi_b_minus = 0;
  PairingMatrix m_plus, m_minus;
  InertiaResult in_plus, in_minus;
  bool odd_kernel_plus = false, odd_kernel_minus = false;
  bool all_relevant_plus = true, all_relevant_minus = true;
  // exactly one non-orientable region, it is '-', and every constituent is
  // two-sided: the '+' membrane assembly is then the canonical one
  bool canonical_plus = false;
};

// Requires a curve that passed validate_curve (coloring applied on demand).
Analysis analyze(const FloppyCurve& F);

std::vector<CheckResult> check_harnack(const Analysis& A);
std::vector<CheckResult> check_parity(const Analysis& A);
std::vector<CheckResult> check_viro(const Analysis& A);
std::vector<CheckResult> check_addenda(const Analysis& A);
std::vector<CheckResult> check_determinant(const Analysis& A);
std::vector<CheckResult> cover_diagnostics(const Analysis& A);
std::vector<CheckResult> check_congruence(const Analysis& A,
                                          const std::optional<LinkInstance>& link);

struct Verdict {
  std::string verdict;  // not_prohibited | prohibited | prohibited_under_assumptions | invalid
  std::vector<CheckResult> results;
  std::vector<std::string> assumptions;
  std::optional<Analysis> analysis;
};

// Validates, colors, analyzes and runs every check. Validation failures give
// verdict "invalid" unless `strict`, which prohibits on them instead.
Verdict run_all_checks(const FloppyCurve& F, const std::optional<LinkInstance>& link,
                       bool strict = false);

}  // namespace floppy
