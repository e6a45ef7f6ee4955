#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotchar/apoly/apolynomial.hpp"
#include "knotchar/charvar/riley.hpp"
#include "knotchar/charvar/torus.hpp"
#include "knotchar/exactalg/quadnum.hpp"
#include "knotchar/knotgroups/alexander.hpp"

namespace knotchar {

using CurveModel = std::variant<PlaneCurve, TorusComponentModel, APolynomial>;

struct SliceFlags {
  bool excluded_tau = false;
  bool non_transverse = false;
  bool curve_singular_at_slice = false;
  bool component_in_hyperplane = false;
};

struct SliceResult {
  QuadNum tau;
  /// Descending; one entry per point of the slice.
  std::vector<unsigned> multiplicities;
  unsigned total_degree = 0;
  SliceFlags flags;
  /// False for external A-polynomials: the entries are the generic all-ones
  /// pattern, not computed.
  bool multiplicities_known = true;
  /// tau hits the finite non-generic set of the curve.
  bool nongeneric_tau = false;
  /// Multiplicity of the discarded reducible root y = 2.
  unsigned discarded_reducible = 0;
  /// Plane curves only: the specialised polynomial P(tau, y).
  std::string slice_polynomial;
};

/// Finite bad set of a curve: tau is non-generic when it is a root of one of
/// the polynomials (in x for plane curves; in m, through m + 1/m = tau, for
/// A-polynomials).
struct NongenericReport {
  enum class Coordinate { kTrace, kEigenvalue, kNone };
  Coordinate coordinate = Coordinate::kNone;
  RationalPoly discriminant;  // transversality
  RationalPoly leading;       // points escaping to infinity
  RationalPoly content;       // y-independent factors

  bool hits(const QuadNum& tau) const;
  bool hits_discriminant(const QuadNum& tau) const;
  bool hits_leading(const QuadNum& tau) const;
  bool hits_content(const QuadNum& tau) const;
};

NongenericReport nongeneric_tau_report(const CurveModel& curve);

/// Raises TAU_OUT_OF_RANGE, ZERO_SLICE, REDUCIBLE_SLICE_POINT (y = 2 at a
/// non-excluded tau), EXCLUDED_TAU_UNSUPPORTED (torus or external curve at
/// an excluded tau).
SliceResult slice_count(const CurveModel& curve, const QuadNum& tau, const std::optional<AlexanderPoly>& delta);

/// Not excluded and outside the non-generic set.
bool is_generic_tau(const CurveModel& curve, const std::optional<AlexanderPoly>& delta, const QuadNum& tau);

/// First generic tau among 1/2, 1/3, 2/3, 1/4, 3/4, ... and their negatives.
QuadNum first_generic_tau(const CurveModel& curve, const std::optional<AlexanderPoly>& delta);

}  // namespace knotchar
