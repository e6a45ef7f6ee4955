#pragma once

#include <optional>
#include <string>

#include "knotchar/cli/knot_spec.hpp"
#include "knotchar/exactalg/quadnum.hpp"

namespace knotchar {

enum class AhatMethod { kSlice, kEliminate, kExternal };

struct AhatDegree {
  int value = 0;
  /// "slice", "component-count", "eliminate" or "external".
  std::string provenance;
  /// The tau used by the slice method.
  std::optional<QuadNum> tau;
};

/// Raises METHOD_MISMATCH when the method does not apply to the knot class.
/// The slice method picks a generic rational tau when none is given.
AhatDegree ahat_l_degree(const KnotSpec& knot, AhatMethod method, const std::optional<QuadNum>& tau = std::nullopt);

}  // namespace knotchar
