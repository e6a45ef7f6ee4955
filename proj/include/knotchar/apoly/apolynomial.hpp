#pragma once

#include <optional>
#include <string>

#include "knotchar/exactalg/polynomial.hpp"
#include "knotchar/knotgroups/alexander.hpp"

namespace knotchar {

/// Integer-primitive A-polynomial in (m, l) with no (l - 1) factor.
struct APolynomial {
  enum class Source { kEliminated, kExternal };

  RationalPoly poly;
  Source source = Source::kEliminated;
  std::string label;
  /// Optional Alexander polynomial carried by an external file.
  std::optional<AlexanderPoly> alexander;
};

int deg_l(const APolynomial& ap);

}  // namespace knotchar
