#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotchar/cli/knot_spec.hpp"
#include "knotchar/exactalg/quadnum.hpp"

namespace knotchar {

struct GradedGroup {
  /// degree -> rank, zero ranks omitted.
  std::map<int, unsigned long> ranks;

  long euler() const;
  bool is_zero() const { return ranks.empty(); }
  void set(int degree, unsigned long rank);
};

enum class AuditStatus { kVerified, kViolated, kAsserted, kNotApplicable, kUnchecked };
std::string audit_status_name(AuditStatus s);

/// Keys a1_dim1, a2_reduced, b1..b4, c1_smooth, c2_zerodim, c3_alexander.
struct AssumptionReport {
  std::vector<std::pair<std::string, AuditStatus>> entries;
  bool excluded_tau = false;

  AssumptionReport();
  void set(const std::string& key, AuditStatus s);
  AuditStatus get(const std::string& key) const;
  bool any_violated() const;
  bool all_established() const;  // verified, asserted or n/a
};

enum class Regime { kTheorem, kBestEffort, kRefused };
std::string regime_name(Regime r);

struct HPResult {
  std::string knot;
  QuadNum tau;
  /// Absent when the ranks are refused.
  std::optional<GradedGroup> graded;
  /// Euler characteristic of graded; for refused sums of three or more
  /// factors, the additive value alone.
  std::optional<long> casson_lin;
  Regime regime = Regime::kTheorem;
  AssumptionReport audit;
  std::string d_provenance;
  /// Why the regime is not theorem (human output only).
  std::string note;
  /// Slice totals of the prime factors, in order.
  std::vector<unsigned> factor_degrees;
  /// Prime results: slice multiplicities, and whether they were computed.
  std::vector<unsigned> multiplicities;
  bool multiplicities_known = false;
};

/// Prime knots (two-bridge, torus, external). Propagates
/// EXCLUDED_TAU_UNSUPPORTED and tau errors.
HPResult hp_prime(const KnotSpec& knot, const QuadNum& tau);

/// Ranks {-1: m1 m2, 0: m1 + m2 + m1 m2}; refused regime when a factor fails
/// the C checks at tau.
HPResult hp_connected_sum_pair(const KnotSpec& k1, const KnotSpec& k2, const QuadNum& tau);

struct CassonLinResult {
  long value = 0;
  std::vector<HPResult> factors;
};

/// Sum of the factor slice totals. Raises C_ASSUMPTION_VIOLATED naming the
/// factor and assumption.
CassonLinResult casson_lin(const std::vector<KnotSpec>& knots, const QuadNum& tau);

/// Dispatch: prime, pair, or (three or more summands) refused ranks with the
/// additive Casson-Lin value. Torus and external curves at an excluded tau
/// give a refused result instead of EXCLUDED_TAU_UNSUPPORTED.
HPResult hp(const KnotSpec& knot, const QuadNum& tau);

/// "HP* = Z^1 @ deg -1 ⊕ Z^3 @ deg 0; χ = 2" (or "HP* = 0; χ = 0").
std::string format_group(const GradedGroup& g);

enum class OutputMode { kHuman, kJson };
std::string format_result(const HPResult& res, OutputMode mode);

}  // namespace knotchar
