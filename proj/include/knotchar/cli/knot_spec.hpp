#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotchar/exactalg/quadnum.hpp"
#include "knotchar/knotgroups/presentation.hpp"

namespace knotchar {

struct ExternalSpec {
  std::string path;
  std::string name;
  friend bool operator==(const ExternalSpec&, const ExternalSpec&) = default;
};

/// `2bridge:P/Q`, `torus:P,Q`, `apoly:PATH#NAME`, `sum:SPEC+SPEC[+...]`.
class KnotSpec {
 public:
  enum class Kind { kTwoBridge, kTorus, kExternal, kSum };

  KnotSpec(TwoBridgeSpec s) : v_(s) {}  // NOLINT(google-explicit-constructor)
  KnotSpec(TorusSpec s) : v_(s) {}      // NOLINT(google-explicit-constructor)
  KnotSpec(ExternalSpec s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  /// At least two summands, none of them a sum.
  static KnotSpec sum(std::vector<KnotSpec> summands);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_prime() const { return kind() != Kind::kSum; }
  const TwoBridgeSpec& two_bridge() const { return std::get<TwoBridgeSpec>(v_); }
  const TorusSpec& torus() const { return std::get<TorusSpec>(v_); }
  const ExternalSpec& external() const { return std::get<ExternalSpec>(v_); }
  const std::vector<KnotSpec>& summands() const { return std::get<std::vector<KnotSpec>>(v_); }

  /// Canonical text; parse_knot_spec(to_string()) round-trips.
  std::string to_string() const;

  friend bool operator==(const KnotSpec&, const KnotSpec&) = default;

 private:
  KnotSpec() = default;
  std::variant<TwoBridgeSpec, TorusSpec, ExternalSpec, std::vector<KnotSpec>> v_{TwoBridgeSpec(3, 1)};
};

/// Raises PARSE_ERROR (with position) or INVALID_SPEC.
KnotSpec parse_knot_spec(std::string_view text);

/// `N/D` (or `N`), or `N/D+M/K*sqrt(W)` / `N/D-M/K*sqrt(W)`; then -2 < tau < 2.
/// Raises PARSE_ERROR, TAU_OUT_OF_RANGE.
QuadNum parse_tau(std::string_view text);

}  // namespace knotchar
