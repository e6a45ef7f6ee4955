#include "knotchar/charvar/excluded.hpp"

#include "knotchar/error.hpp"
#include "knotchar/exactalg/polyalg.hpp"

namespace knotchar {

namespace {

/// Rational square root when it exists.
std::optional<BigRational> rational_sqrt(const BigRational& r) {
  if (sgn(r) < 0) return std::nullopt;
  BigInt n;
  BigInt d;
  if (!is_perfect_square(r.get_num(), &n) || !is_perfect_square(r.get_den(), &d)) return std::nullopt;
  return make_rational(n, d);
}

/// Square roots of alpha in Q or Q(sqrt D) (empty when none is representable).
std::vector<QuadNum> square_roots(const QuadNum& alpha) {
  if (alpha.is_zero()) return {QuadNum(0)};
  if (alpha.is_rational()) {
    const BigRational& r = alpha.rational_part();
    if (sgn(r) < 0) return {};
    if (auto s = rational_sqrt(r)) return {QuadNum(*s), QuadNum(-*s)};
    BigInt f;
    BigInt D;
    split_square(BigInt(r.get_num() * r.get_den()), f, D);
    const BigRational coeff = make_rational(f, r.get_den());
    return {QuadNum(0, coeff, D.get_si()), QuadNum(0, -coeff, D.get_si())};
  }
  // (a + b sqrt D)^2 = alpha + beta sqrt D needs a^2 = (alpha +- sqrt(norm)) / 2 rational square.
  const auto n = rational_sqrt(alpha.norm());
  if (!n) return {};
  for (int s : {1, -1}) {
    const BigRational a2 = (alpha.rational_part() + s * *n) / 2;
    const auto a = rational_sqrt(a2);
    if (!a || sgn(*a) == 0) continue;
    const BigRational b = alpha.radical_part() / (2 * *a);
    const QuadNum root(*a, b, alpha.radicand());
    if (root * root == alpha) return {root, -root};
  }
  return {};
}

std::vector<QuadNum> quadratic_roots(const RationalPoly& f) {
  const int d = f.degree(std::size_t{0});
  auto coeff = [&](int k) {
    Monomial m;
    m[0] = static_cast<std::uint32_t>(k);
    return f.coefficient(m);
  };
  if (d == 1) return {QuadNum(-coeff(0) / coeff(1))};
  const BigRational a = coeff(2);
  const BigRational b = coeff(1);
  const BigRational c = coeff(0);
  const BigRational disc = b * b - 4 * a * c;
  std::vector<QuadNum> out;
  for (const QuadNum& r : square_roots(QuadNum(disc))) out.push_back((QuadNum(-b) + r) / QuadNum(2 * a));
  return out;
}

}  // namespace

void check_tau_range(const QuadNum& tau) {
  if ((tau - QuadNum(2)).sign() >= 0 || (tau + QuadNum(2)).sign() <= 0) {
    raise(ErrorCode::kTauOutOfRange, "tau = " + tau.to_string() + " is outside (-2, 2)");
  }
}

RationalPoly excluded_w_polynomial(const AlexanderPoly& delta) {
  const Variables ctx{"z", "w"};
  const RationalPoly z = RationalPoly::variable(ctx, "z");
  const RationalPoly w = RationalPoly::variable(ctx, "w");
  const RationalPoly d = delta.polynomial().rename(Variables{"z"}).embed(ctx);
  const RationalPoly r = resultant(d, z * z - w * z + RationalPoly(ctx, BigRational(1)), 0);
  return r.embed(Variables{"w"});
}

bool excluded_tau_test(const AlexanderPoly& delta, const QuadNum& tau) {
  check_tau_range(tau);
  const Variables ctx{"z"};
  const QuadPoly z = QuadPoly::variable(ctx, "z");
  const QuadPoly d = QuadPoly(delta.polynomial().rename(ctx));
  const QuadNum w = tau * tau - QuadNum(2);
  const QuadPoly r = resultant(d, z * z - z * w + QuadPoly(ctx, QuadNum(1)), 0);
  return r.is_zero();
}

ExcludedSet excluded_tau_set(const AlexanderPoly& delta) {
  ExcludedSet out;
  out.w_polynomial = excluded_w_polynomial(delta);
  if (out.w_polynomial.degree(std::size_t{0}) <= 0) return out;
  for (const auto& part : squarefree_decompose(out.w_polynomial, 0).parts) {
    out.factors.push_back(part.factor);
    if (part.factor.degree(std::size_t{0}) > 2) {
      out.unresolved.push_back(part.factor);
      continue;
    }
    for (const QuadNum& w : quadratic_roots(part.factor)) {
      const QuadNum t2 = w + QuadNum(2);
      if (t2.sign() < 0 || (t2 - QuadNum(4)).sign() >= 0) continue;
      out.tau_squared.push_back(t2);
      for (const QuadNum& tau : square_roots(t2)) out.taus.push_back(tau);
    }
  }
  return out;
}

}  // namespace knotchar
