#pragma once

#include <map>
#include <string>

#include "knotchar/exactalg/polynomial.hpp"

namespace knotchar {

/// base(t) / t^shift with base(0) != 0, i.e. the shift is maximal.
/// The zero Laurent polynomial is (0, 0).
struct LaurentPoly {
  RationalPoly base;
  int shift = 0;

  bool is_zero() const { return base.is_zero(); }
  /// Exponent -> coefficient form.
  std::map<int, BigRational> terms() const;
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift == b.shift && a.base == b.base;
  }
};

LaurentPoly laurent_normalize(const std::map<int, BigRational>& terms, const std::string& var);

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Unique q with q(s + 1/s) = p(s). Raises NOT_SYMMETRIC unless p(1/s) = p(s).
RationalPoly symmetric_rewrite(const LaurentPoly& p, const std::string& target_var);

/// The polynomials T_k with T_k(s + 1/s) = s^k + s^-k (T_0 = 2).
RationalPoly power_sum_in_trace(unsigned k, const Variables& ctx, std::size_t var);

}  // namespace knotchar
