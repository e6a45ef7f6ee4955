#include "knotchar/exactalg/polynomial.hpp"

namespace knotchar {

RationalPoly integer_primitive_keep_sign(const RationalPoly& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm = 1;
  BigInt num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  return p * make_rational(den_lcm, num_gcd);
}

RationalPoly integer_primitive(const RationalPoly& p) {
  RationalPoly r = integer_primitive_keep_sign(p);
  if (!r.is_zero() && sgn(r.leading_coefficient()) < 0) r = -r;
  return r;
}

}  // namespace knotchar
