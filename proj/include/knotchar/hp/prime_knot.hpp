#pragma once

#include <optional>
#include <string>

#include "knotchar/charvar/slice.hpp"
#include "knotchar/cli/knot_spec.hpp"

namespace knotchar {

/// Everything computed once per prime knot: Alexander polynomial (when
/// known), curve model, and the Riley model for two-bridge knots.
struct PrimeKnot {
  KnotSpec spec;
  std::string label;
  std::optional<AlexanderPoly> alexander;
  CurveModel curve;
  std::optional<RileyModel> riley;
};

/// Raises INVALID_ARGUMENT for sums; load errors for external files.
PrimeKnot resolve_prime(const KnotSpec& spec);

}  // namespace knotchar
