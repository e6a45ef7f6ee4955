#pragma once

#include <gmpxx.h>

#include <string>

namespace knotchar {

using BigInt = mpz_class;
/// GMP rationals are kept canonical (reduced, positive denominator) by every
/// arithmetic operator; only raw construction from a numerator/denominator
/// pair needs an explicit canonicalize, which make_rational does.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const BigRational& c) { return sgn(c) == 0; }
inline bool is_one(const BigRational& c) { return c == 1; }
inline bool is_integer(const BigRational& c) { return c.get_den() == 1; }

/// "3/2", "-1", "0".
inline std::string to_string(const BigRational& c) { return c.get_str(); }

/// Reduced fraction, always with an explicit denominator: "3/2", "-1/1".
inline std::string to_fraction_string(const BigRational& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigRational parse_rational(const std::string& text);

/// Exact integer square root test; returns true and sets root when n is a perfect square.
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

/// Writes n = square * squarefree with squarefree carrying the sign of n (n != 0).
/// Trial division; intended for the small radicands that occur here.
void split_square(const BigInt& n, BigInt& square_root_part, BigInt& squarefree_part);

bool is_squarefree(long n);

}  // namespace knotchar
