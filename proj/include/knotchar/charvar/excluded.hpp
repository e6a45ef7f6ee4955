#pragma once

#include <vector>

#include "knotchar/exactalg/polynomial.hpp"
#include "knotchar/exactalg/quadnum.hpp"
#include "knotchar/knotgroups/alexander.hpp"

namespace knotchar {

/// Raises TAU_OUT_OF_RANGE unless -2 < tau < 2 (exact).
void check_tau_range(const QuadNum& tau);

/// Res_z(Delta(z), z^2 - w z + 1) as a polynomial in w.
RationalPoly excluded_w_polynomial(const AlexanderPoly& delta);

/// True iff Res_z(Delta(z), z^2 - (tau^2 - 2) z + 1) = 0.
bool excluded_tau_test(const AlexanderPoly& delta, const QuadNum& tau);

struct ExcludedSet {
  RationalPoly w_polynomial;
  /// Squarefree factors of the w-polynomial.
  std::vector<RationalPoly> factors;
  /// tau^2 = w + 2 for the roots w of factors of degree <= 2, restricted to [0, 4).
  std::vector<QuadNum> tau_squared;
  /// Explicit tau values in (-2, 2), when tau lies in Q or a quadratic field.
  std::vector<QuadNum> taus;
  /// Factors of degree > 2, not solved.
  std::vector<RationalPoly> unresolved;
};

ExcludedSet excluded_tau_set(const AlexanderPoly& delta);

}  // namespace knotchar
