#include <gtest/gtest.h>

#include "knotchar/exactalg/chebyshev.hpp"
#include "knotchar/exactalg/laurent.hpp"
#include "knotchar/exactalg/mat2.hpp"
#include "knotchar/exactalg/polyalg.hpp"
#include "knotchar/exactalg/polynomial.hpp"
#include "knotchar/exactalg/quadnum.hpp"

namespace knotchar {
namespace {

const Variables kXY{"x", "y"};

RationalPoly X() { return RationalPoly::variable(kXY, "x"); }
RationalPoly Y() { return RationalPoly::variable(kXY, "y"); }
RationalPoly C(long c) { return RationalPoly(kXY, BigRational(c)); }

TEST(Polynomial, ExpandsProductInGrlexOrder) {
  const RationalPoly p = (Y() - C(2)) * (X() * X() - Y() - C(1));
  EXPECT_EQ(p.to_string(), "x^2*y - 2*x^2 - y^2 + y + 2");
}

TEST(Polynomial, ZeroPrintsAsZero) {
  EXPECT_EQ(RationalPoly(kXY).to_string(), "0");
  EXPECT_TRUE((X() - X()).is_zero());
}

TEST(Polynomial, ContextMismatchRaises) {
  const Variables other{"s", "u"};
  const RationalPoly s = RationalPoly::variable(other, "s");
  try {
    (void)(X() + s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVariableMismatch);
  }
}

TEST(Polynomial, SubstituteQuadraticValue) {
  const QuadPoly p(X() * X() - Y() - C(1));
  const QuadPoly q = p.substitute(0, QuadNum::sqrt_of(3));
  EXPECT_EQ(q, QuadPoly(C(2) - Y()));
}

TEST(Polynomial, ExactDivision) {
  const RationalPoly f = (X() + Y()) * (X() - C(3) * Y());
  EXPECT_EQ(divide_exact(f, X() + Y()), X() - C(3) * Y());
  try {
    (void)divide_exact(f, X() + C(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotExact);
  }
}

TEST(Polynomial, IntegerPrimitiveFixesSign) {
  const RationalPoly p = BigRational(-1, 2) * X() + BigRational(1, 3) * C(1);
  EXPECT_EQ(integer_primitive(p), C(3) * X() - C(2));
}

TEST(QuadNum, ArithmeticAndSign) {
  const QuadNum r3 = QuadNum::sqrt_of(3);
  EXPECT_EQ(r3 * r3, QuadNum(3));
  EXPECT_EQ((QuadNum(1) + r3) * (QuadNum(1) - r3), QuadNum(-2));
  EXPECT_EQ((r3 - QuadNum(2)).sign(), -1);
  EXPECT_EQ((r3 - BigRational(17, 10)).sign(), 1);
  EXPECT_EQ((QuadNum(1) / (QuadNum(1) + r3)) * (QuadNum(1) + r3), QuadNum(1));
}

TEST(QuadNum, MixedFieldsRaise) {
  try {
    (void)(QuadNum::sqrt_of(2) + QuadNum::sqrt_of(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedFields);
  }
}

TEST(QuadNum, TauStrings) {
  EXPECT_EQ(QuadNum(BigRational(1, 2)).to_tau_string(), "1/2");
  EXPECT_EQ(QuadNum(0).to_tau_string(), "0/1");
  EXPECT_EQ(QuadNum(0, -1, 3).to_tau_string(), "0/1-1/1*sqrt(3)");
  EXPECT_EQ(QuadNum(BigRational(1, 2), BigRational(3, 2), 5).to_tau_string(), "1/2+3/2*sqrt(5)");
}

TEST(Resultant, VanishesExactlyAtCommonRoot) {
  const Variables ctx{"z", "w"};
  const RationalPoly z = RationalPoly::variable(ctx, "z");
  const RationalPoly w = RationalPoly::variable(ctx, "w");
  const RationalPoly one(ctx, BigRational(1));
  const RationalPoly r = resultant(z * z - z + one, z * z - w * z + one, 0);
  EXPECT_EQ(r, (w - one) * (w - one));
  EXPECT_TRUE(r.substitute(1, BigRational(1)).is_zero());
  EXPECT_EQ(r, sylvester_resultant(z * z - z + one, z * z - w * z + one, 0));
}

TEST(Resultant, LinearFactors) {
  // Res_x(x - a, x - b) = a - b form over constants: Res(x-2, x-5) = -3.
  const Variables ctx{"x"};
  const RationalPoly x = RationalPoly::variable(ctx, "x");
  const RationalPoly r = resultant(x - RationalPoly(ctx, 2), x - RationalPoly(ctx, 5), 0);
  EXPECT_EQ(r.constant_value(), BigRational(-3));
}

TEST(Discriminant, QuadraticMatchesTextbook) {
  const Variables ctx{"y", "b", "c"};
  const RationalPoly y = RationalPoly::variable(ctx, "y");
  const RationalPoly b = RationalPoly::variable(ctx, "b");
  const RationalPoly c = RationalPoly::variable(ctx, "c");
  EXPECT_EQ(discriminant(y * y + b * y + c, 0), b * b - RationalPoly(ctx, 4) * c);
}

TEST(Discriminant, FigureEightCurve) {
  const RationalPoly x2m1 = X() * X() - C(1);
  const RationalPoly p = Y() * Y() - x2m1 * Y() + x2m1;
  EXPECT_EQ(discriminant(p, 1), x2m1 * x2m1 - C(4) * x2m1);
}

TEST(Gcd, MultivariateCommonFactor) {
  const RationalPoly f = X() * X() - Y() - C(1);
  const RationalPoly g1 = f * (X() + Y() + C(2));
  const RationalPoly g2 = f * (X() - Y()) * C(7);
  EXPECT_EQ(gcd(g1, g2), make_monic(f));
  EXPECT_TRUE(gcd(X() + C(1), Y() + C(1)).is_constant());
}

TEST(Squarefree, YunDecomposition) {
  const Variables ctx{"y"};
  const RationalPoly y = RationalPoly::variable(ctx, "y");
  const RationalPoly one(ctx, 1);
  const RationalPoly f = (y - one) * (y + one).pow(2) * (y * y + one).pow(3) * RationalPoly(ctx, 5);
  const auto d = squarefree_decompose(f, 0);
  ASSERT_EQ(d.parts.size(), 3U);
  EXPECT_EQ(d.parts[0].factor, y - one);
  EXPECT_EQ(d.parts[1].factor, y + one);
  EXPECT_EQ(d.parts[2].factor, y * y + one);
  EXPECT_EQ(d.parts[2].multiplicity, 3U);
  EXPECT_EQ(d.degree(0), 9);
}

TEST(Squarefree, DoubleRootAtTauOne) {
  // Figure-eight slice at x = 1: y^2 exactly.
  const RationalPoly x2m1 = X() * X() - C(1);
  const RationalPoly p = Y() * Y() - x2m1 * Y() + x2m1;
  const RationalPoly f = p.substitute(0, BigRational(1));
  const auto d = squarefree_decompose(f, 1);
  ASSERT_EQ(d.parts.size(), 1U);
  EXPECT_EQ(d.parts[0].multiplicity, 2U);
}

TEST(Squarefree, NonUnivariateRaises) {
  try {
    (void)squarefree_decompose(X() * Y(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotUnivariate);
  }
}

TEST(Laurent, SymmetricRewrite) {
  const LaurentPoly p = laurent_normalize({{4, 1}, {-4, 1}}, "s");
  const Variables ctx{"x"};
  const RationalPoly x = RationalPoly::variable(ctx, "x");
  EXPECT_EQ(symmetric_rewrite(p, "x"), x.pow(4) - RationalPoly(ctx, 4) * x * x + RationalPoly(ctx, 2));
}

TEST(Laurent, AsymmetricRaises) {
  const LaurentPoly p = laurent_normalize({{1, 1}, {0, 1}}, "s");
  try {
    (void)symmetric_rewrite(p, "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSymmetric);
  }
}

TEST(Laurent, PowerSumsSatisfyDefinition) {
  const Variables ctx{"x"};
  for (unsigned k = 0; k < 8; ++k) {
    const RationalPoly tk = power_sum_in_trace(k, ctx, 0);
    const std::map<int, BigRational> expect =
        k == 0 ? std::map<int, BigRational>{{0, 2}} : std::map<int, BigRational>{{static_cast<int>(k), 1}, {-static_cast<int>(k), 1}};
    EXPECT_EQ(symmetric_rewrite(laurent_normalize(expect, "s"), "x"), tk) << k;
  }
}

TEST(Chebyshev, FirstValues) {
  EXPECT_EQ(chebyshev_s(3).to_string(), "x^3 - 2*x");
  EXPECT_EQ(chebyshev_s(0).to_string(), "1");
  EXPECT_TRUE(chebyshev_s(-1).is_zero());
  try {
    (void)chebyshev_s(-2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Chebyshev, CayleyHamiltonPowers) {
  // M^n = S_{n-1}(t) M - S_{n-2}(t) I for M = [[2,1],[1,1]], trace 3.
  const Mat2<BigRational> m(2, 1, 1, 1);
  Mat2<BigRational> power = Mat2<BigRational>::identity(1, 0);
  for (int n = 1; n <= 9; ++n) {
    power = power * m;
    const BigRational a = chebyshev_s(n - 1).evaluate({BigRational(3)});
    const BigRational b = n >= 2 ? chebyshev_s(n - 2).evaluate({BigRational(3)}) : BigRational(0);
    const Mat2<BigRational> expect(a * 2 - b, a, a, a - b);
    EXPECT_EQ(power, expect) << n;
  }
}

}  // namespace
}  // namespace knotchar
