#pragma once

#include <string>
#include <vector>

#include "knotchar/exactalg/mat2.hpp"
#include "knotchar/exactalg/polynomial.hpp"
#include "knotchar/knotgroups/presentation.hpp"

namespace knotchar {

/// 2x2 matrix num / s^shift with num over Q[s, ...]; s is variable 0.
struct LaurentMatrix {
  Mat2<RationalPoly> num;
  int shift = 0;

  static LaurentMatrix identity(const Variables& ctx);
  /// Inverse of a determinant-one matrix.
  LaurentMatrix inverse() const { return {num.adjugate(), shift}; }

  friend LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y);
};

/// Product of generator images along w. Raises DET_NOT_ONE unless every
/// image used has determinant 1.
LaurentMatrix word_matrix(const Word& w, const std::vector<LaurentMatrix>& images, const Variables& ctx);

/// Irreducible normal form a -> [[s,1],[0,1/s]], b -> [[s,0],[u,1/s]].
struct RileyModel {
  Presentation presentation;
  int p = 0;
  Word w;
  Variables ctx;  // (s, u)
  RationalPoly phi;
  std::vector<LaurentMatrix> images;  // a, b
  /// phi / s^center is invariant under s -> 1/s.
  int center = 0;
};

std::vector<LaurentMatrix> riley_images(const Variables& ctx);

/// phi := gcd of the entries of W A - B W, made primitive in u. Raises
/// GCD_DEGENERATE when the gcd is trivial or deg_u phi != (p-1)/2.
RileyModel riley_polynomial(const Presentation& pres);
RileyModel riley_model(const TwoBridgeSpec& spec);

/// Trace coordinates x = tr a, y = tr(a b^-1) = 2 - u, with every (y - 2)
/// factor removed.
struct PlaneCurve {
  RationalPoly P;  // (x, y)
  unsigned reducible_power = 0;
  std::string reducible_factor = "y - 2";
  std::string label;
};

PlaneCurve trace_curve(const RileyModel& model);

/// True iff lambda is null-homologous and commutes with rho(a) modulo phi.
bool verify_longitude(const RileyModel& model, const Word& lambda);

/// Zero test for F in Q[s,u] modulo phi (pseudo-remainder in u).
bool vanishes_mod_phi(const RileyModel& model, const RationalPoly& f);

}  // namespace knotchar
