#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <nlohmann/json.hpp>

#include "knotchar/apoly/ahat.hpp"
#include "knotchar/apoly/elimination.hpp"
#include "knotchar/error.hpp"
#include "knotchar/exactalg/polyalg.hpp"
#include "knotchar/knotgroups/longitude.hpp"

namespace knotchar {
namespace {

// Terms (coefficient, m exponent, l exponent).
RationalPoly ml(std::initializer_list<std::tuple<long, unsigned, unsigned>> terms) {
  const Variables ctx{"m", "l"};
  std::vector<RationalPoly::Term> out;
  for (const auto& [c, i, j] : terms) {
    Monomial mono;
    mono[0] = i;
    mono[1] = j;
    out.push_back({mono, BigRational(c)});
  }
  return RationalPoly::from_terms(ctx, out);
}

APolynomial eliminate(int p, int q) {
  const TwoBridgeSpec spec(p, q);
  return a_polynomial_two_bridge(riley_model(spec), longitude_two_bridge(spec).word);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

nlohmann::json doc(const std::string& text) { return nlohmann::json::parse(text); }

TEST(Elimination, TrefoilGolden) {
  const APolynomial a = eliminate(3, 1);
  EXPECT_TRUE(apoly_equivalent(a.poly, ml({{1, 0, 0}, {1, 6, 1}})));
  EXPECT_EQ(deg_l(a), 1);
}

TEST(Elimination, FigureEightGolden) {
  // l^2 m^4 + l (-m^8 + m^6 + 2m^4 + m^2 - 1) + m^4
  const RationalPoly golden =
      ml({{1, 4, 2}, {-1, 8, 1}, {1, 6, 1}, {2, 4, 1}, {1, 2, 1}, {-1, 0, 1}, {1, 4, 0}});
  const APolynomial a = eliminate(5, 3);
  EXPECT_TRUE(apoly_equivalent(a.poly, golden));
  EXPECT_EQ(deg_l(a), 2);
}

TEST(Elimination, EquivalenceRejectsDifferentCurves) {
  EXPECT_FALSE(apoly_equivalent(ml({{1, 0, 0}, {1, 6, 1}}), ml({{1, 0, 0}, {1, 4, 1}})));
  // m -> 1/m and a monomial unit are allowed.
  EXPECT_TRUE(apoly_equivalent(ml({{1, 6, 0}, {1, 0, 1}}), ml({{3, 0, 0}, {3, 6, 1}})));
}

TEST(Elimination, TwistKnotDegrees) {
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(deg_l(eliminate(7, 5)), 3);
  EXPECT_EQ(deg_l(eliminate(9, 7)), 4);
  EXPECT_EQ(deg_l(eliminate(11, 9)), 5);
  EXPECT_EQ(deg_l(eliminate(13, 11)), 6);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 60.0);
}

TEST(Elimination, NormalizedForm) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {7, 5}, {9, 7}}) {
    const RationalPoly a = eliminate(p, q).poly;
    BigInt g = 0;
    for (const auto& t : a.terms()) {
      ASSERT_TRUE(is_integer(t.coeff));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    }
    EXPECT_EQ(g, 1);
    EXPECT_GT(a.leading_coefficient(), 0);
    // No (l - 1) factor.
    EXPECT_FALSE(a.substitute(1, BigRational(1)).is_zero());
  }
}

TEST(Elimination, OrientationReversal) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {7, 5}}) {
    const TwoBridgeSpec spec(p, q);
    const RileyModel model = riley_model(spec);
    const Word lambda = longitude_two_bridge(spec).word;
    const APolynomial a = a_polynomial_two_bridge(model, lambda);
    const APolynomial b = a_polynomial_two_bridge(model, lambda.inverse());
    EXPECT_EQ(deg_l(a), deg_l(b));
    EXPECT_TRUE(apoly_equivalent(invert_l(a.poly), b.poly)) << p << "/" << q;
  }
}

TEST(ApolyFile, PretzelLoads) {
  const APolynomial a = load_apoly_file("pretzel237.json", "A");
  EXPECT_EQ(a.source, APolynomial::Source::kExternal);
  EXPECT_EQ(a.poly.size(), 11U);
  EXPECT_EQ(deg_l(a), 6);
  ASSERT_TRUE(a.alexander.has_value());
  EXPECT_EQ(a.alexander->degree(), 10);
}

TEST(ApolyFile, Errors) {
  EXPECT_EQ(code_of([] { load_apoly(doc(R"({"name":"A","variables":["m","l"],"terms":[]})")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { load_apoly(doc(R"({"name":"A","variables":["x","l"],"terms":[[1,0,1]]})")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { load_apoly(doc(R"({"name":"A","variables":["m","l"],"terms":[[1,0,1],[2,0,1]]})")); }),
            ErrorCode::kInvalidTerms);
  EXPECT_EQ(code_of([] { load_apoly(doc(R"({"name":"A","variables":["m","l"],"terms":[[1,-1,1]]})")); }),
            ErrorCode::kInvalidTerms);
  EXPECT_EQ(code_of([] { load_apoly(doc(R"({"name":"A","variables":["m","l"],"terms":[[0,1,1]]})")); }),
            ErrorCode::kInvalidTerms);
  EXPECT_EQ(code_of([] { load_apoly(doc(R"({"name":"A","variables":["m","l"],"terms":[[1,2,0]]})")); }),
            ErrorCode::kInvalidTerms);
  EXPECT_EQ(code_of([] { load_apoly_file("no-such-file.json", "A"); }), ErrorCode::kIoError);
}

TEST(ApolyFile, EnvironmentDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "knotchar_apoly_env";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "trefoil.json") << R"([{"name":"T","variables":["m","l"],"terms":[[1,0,0],[1,6,1]]}])";
  setenv("KNOTCHAR_APOLY_DIR", dir.c_str(), 1);
  const APolynomial a = load_apoly_file("trefoil.json", "T");
  unsetenv("KNOTCHAR_APOLY_DIR");
  EXPECT_EQ(deg_l(a), 1);
  EXPECT_FALSE(a.alexander.has_value());
  EXPECT_EQ(code_of([&] { load_apoly_file((dir / "trefoil.json").string(), "missing"); }), ErrorCode::kParseError);
}

TEST(Ahat, SliceAgreesWithEliminationOnTwistKnots) {
  const std::vector<std::tuple<int, int, int>> twist{{3, 1, 1}, {5, 3, 2}, {7, 5, 3}, {9, 7, 4}, {11, 9, 5}, {13, 11, 6}};
  for (const auto& [p, q, d] : twist) {
    const KnotSpec k = TwoBridgeSpec(p, q);
    const AhatDegree s = ahat_l_degree(k, AhatMethod::kSlice, QuadNum(BigRational(1, 2)));
    const AhatDegree e = ahat_l_degree(k, AhatMethod::kEliminate);
    EXPECT_EQ(s.value, d);
    EXPECT_EQ(e.value, d);
    EXPECT_EQ(s.provenance, "slice");
    EXPECT_EQ(e.provenance, "eliminate");
  }
}

TEST(Ahat, TorusAndExternal) {
  const AhatDegree t = ahat_l_degree(TorusSpec(3, 4), AhatMethod::kSlice);
  EXPECT_EQ(t.value, 3);
  EXPECT_EQ(t.provenance, "component-count");
  EXPECT_EQ(ahat_l_degree(ExternalSpec{"pretzel237.json", "A"}, AhatMethod::kExternal).value, 6);
}

TEST(Ahat, MethodMismatch) {
  EXPECT_EQ(code_of([] { ahat_l_degree(TorusSpec(3, 4), AhatMethod::kEliminate); }), ErrorCode::kMethodMismatch);
  EXPECT_EQ(code_of([] { ahat_l_degree(ExternalSpec{"pretzel237.json", "A"}, AhatMethod::kSlice); }),
            ErrorCode::kMethodMismatch);
  EXPECT_EQ(code_of([] { ahat_l_degree(TwoBridgeSpec(3, 1), AhatMethod::kExternal); }), ErrorCode::kMethodMismatch);
}

}  // namespace
}  // namespace knotchar
