#pragma once

#include <string>

#include "knotchar/exactalg/rational.hpp"

namespace knotchar {

/// An element a + b*sqrt(D) of a quadratic field Q(sqrt(D)).
///
/// The radicand D is the field context; D = 0 marks a value created from a
/// rational and means "no extension chosen yet". Rational values (b = 0)
/// combine with any field. Combining two irrational values from different
/// fields raises MIXED_FIELDS.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadNum(const BigRational& value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  /// Requires D squarefree and D != 0, 1 whenever b != 0.
  QuadNum(const BigRational& a, const BigRational& b, long radicand);

  static QuadNum sqrt_of(long radicand) { return QuadNum(0, 1, radicand); }

  const BigRational& rational_part() const { return a_; }
  const BigRational& radical_part() const { return b_; }
  long radicand() const { return radicand_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadNum conjugate() const;
  /// a^2 - D b^2.
  BigRational norm() const;
  QuadNum inverse() const;

  /// Exact sign for real fields (D > 0). Raises INVALID_ARGUMENT for D < 0
  /// irrational values.
  int sign() const;

  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
  friend QuadNum operator-(const QuadNum& x);

  friend bool operator==(const QuadNum& x, const QuadNum& y);
  friend bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

  /// Display form used inside polynomial printing: "3/2", "sqrt(3)", "1/2 + 2*sqrt(3)".
  std::string to_string() const;
  /// Bit-stable tau grammar: "N/D" or "N/D+M/K*sqrt(W)" (minus sign as "N/D-M/K*sqrt(W)").
  std::string to_tau_string() const;

 private:
  long merged_radicand(const QuadNum& o) const;

  BigRational a_;
  BigRational b_;
  long radicand_ = 0;
};

inline bool is_zero(const QuadNum& c) { return c.is_zero(); }
inline bool is_one(const QuadNum& c) { return c.is_rational() && c.rational_part() == 1; }
inline std::string to_string(const QuadNum& c) { return c.to_string(); }

}  // namespace knotchar
