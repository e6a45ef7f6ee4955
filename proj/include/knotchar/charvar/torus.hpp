#pragma once

#include <utility>
#include <vector>

#include "knotchar/exactalg/polynomial.hpp"
#include "knotchar/knotgroups/presentation.hpp"

namespace knotchar {

/// One-dimensional components of the irreducible character locus of T(p,q):
/// tr U = 2cos(pi i/p), tr V = 2cos(pi j/q), tr UV free.
struct TorusComponentModel {
  TorusSpec spec;
  std::vector<std::pair<int, int>> components;  // (i, j), i = j mod 2
  /// tr(U^a V^b) in (x1, x2, x3) = (tr U, tr V, tr UV).
  RationalPoly meridian_trace;
};

TorusComponentModel torus_components(const TorusSpec& spec);

}  // namespace knotchar
