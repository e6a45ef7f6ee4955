#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <sstream>

#include "knotchar/cli/knot_spec.hpp"
#include "knotchar/cli/run.hpp"
#include "knotchar/error.hpp"

namespace knotchar {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
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

TEST(KnotSpecParse, CanonicalRoundTrip) {
  for (const char* text : {"2bridge:3/1", "2bridge:13/11", "2bridge:7/2", "torus:3,4", "torus:2,5",
                           "apoly:pretzel237.json#A", "apoly:dir/with#hash.json#B",
                           "sum:2bridge:3/1+torus:2,5", "sum:2bridge:3/1+2bridge:3/1+apoly:x.json#A"}) {
    const KnotSpec k = parse_knot_spec(text);
    EXPECT_EQ(k.to_string(), text);
    EXPECT_EQ(parse_knot_spec(k.to_string()), k);
  }
}

TEST(KnotSpecParse, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    std::vector<KnotSpec> parts;
    const int count = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < count; ++i) {
      if (rng() % 2 == 0) {
        const int p = 2 * std::uniform_int_distribution<int>(1, 8)(rng) + 1;
        int q = std::uniform_int_distribution<int>(1, p - 1)(rng);
        while (std::gcd(p, q) != 1) q = q % (p - 1) + 1;
        parts.emplace_back(TwoBridgeSpec(p, q));
      } else {
        const int p = std::uniform_int_distribution<int>(2, 6)(rng);
        int q = std::uniform_int_distribution<int>(p + 1, 13)(rng);
        while (std::gcd(p, q) != 1) ++q;
        parts.emplace_back(TorusSpec(p, q));
      }
    }
    const KnotSpec k = count == 1 ? parts[0] : KnotSpec::sum(parts);
    EXPECT_EQ(parse_knot_spec(k.to_string()), k);
    EXPECT_EQ(parse_knot_spec(k.to_string()).to_string(), k.to_string());
  }
}

TEST(KnotSpecParse, Errors) {
  EXPECT_EQ(code_of([] { parse_knot_spec("2bridge:4/1"); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { parse_knot_spec("2bridge:3"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_knot_spec("2bridge:3/x"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_knot_spec("knot:3_1"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_knot_spec("sum:2bridge:3/1"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_knot_spec("sum:2bridge:3/1+"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_knot_spec("apoly:file.json"); }), ErrorCode::kParseError);
  try {
    parse_knot_spec("sum:2bridge:3/1+torus:2");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 22"), std::string::npos) << e.what();
  }
}

TEST(TauParse, GrammarAndRange) {
  EXPECT_EQ(parse_tau("1/2"), QuadNum(BigRational(1, 2)));
  EXPECT_EQ(parse_tau("0/1"), QuadNum(0));
  EXPECT_EQ(parse_tau("-3/2"), QuadNum(BigRational(-3, 2)));
  EXPECT_EQ(parse_tau("0/1+1/1*sqrt(3)"), QuadNum::sqrt_of(3));
  EXPECT_EQ(parse_tau("0/1-1/1*sqrt(3)"), -QuadNum::sqrt_of(3));
  EXPECT_EQ(parse_tau("1/2-1/2*sqrt(12)"), QuadNum(BigRational(1, 2), BigRational(-1), 3));
  EXPECT_EQ(code_of([] { parse_tau("5/2"); }), ErrorCode::kTauOutOfRange);
  EXPECT_EQ(code_of([] { parse_tau("2"); }), ErrorCode::kTauOutOfRange);
  EXPECT_EQ(code_of([] { parse_tau("0/1+1/1*sqrt(12)"); }), ErrorCode::kTauOutOfRange);
  EXPECT_EQ(code_of([] { parse_tau("0/1+1/1*sqrt(4)"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_tau("abc"); }), ErrorCode::kParseError);
}

TEST(TauParse, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    BigRational a(std::uniform_int_distribution<long>(-7, 7)(rng), std::uniform_int_distribution<long>(1, 9)(rng));
    BigRational b(std::uniform_int_distribution<long>(-3, 3)(rng), std::uniform_int_distribution<long>(2, 9)(rng));
    a.canonicalize();
    b.canonicalize();
    const long d = std::vector<long>{2, 3, 5, 6, 7}[n % 5];
    const QuadNum tau = b == 0 ? QuadNum(a) : QuadNum(a, b, d);
    try {
      EXPECT_EQ(parse_tau(tau.to_tau_string()), tau) << tau.to_tau_string();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kTauOutOfRange);
    }
  }
}

TEST(Cli, HpJsonAndExitCodes) {
  const CliRun r = run({"hp", "--knot", "2bridge:3/1", "--tau", "0/1", "--output", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"ranks\": {\n    \"0\": 1\n  }"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"regime\": \"theorem\""), std::string::npos);
  EXPECT_EQ(r.out, run({"hp", "--knot", "2bridge:3/1", "--tau", "0/1", "--output", "json"}).out);
  EXPECT_EQ(run({"hp", "--knot", "sum:2bridge:3/1+2bridge:3/1+2bridge:5/3", "--tau", "0"}).code, 2);
  EXPECT_EQ(run({"hp", "--knot", "sum:2bridge:3/1+2bridge:5/3", "--tau", "1"}).code, 2);
  EXPECT_EQ(run({"hp", "--knot", "2bridge:3/1", "--tau", "0/1+1/1*sqrt(3)"}).code, 0);
  EXPECT_EQ(run({"hp", "--knot", "2bridge:3/1", "--tau", "5/2"}).code, 1);
  EXPECT_EQ(run({"hp", "--knot", "2bridge:4/1", "--tau", "0"}).code, 1);
}

TEST(Cli, TauRequiredAndForbidden) {
  EXPECT_EQ(run({"hp", "--knot", "2bridge:3/1"}).code, 1);
  EXPECT_EQ(run({"slice", "--knot", "2bridge:3/1"}).code, 1);
  EXPECT_EQ(run({"alexander", "--knot", "2bridge:3/1", "--tau", "0"}).code, 1);
  EXPECT_EQ(run({"curve", "--knot", "2bridge:3/1", "--tau", "0"}).code, 1);
  EXPECT_EQ(run({"apoly", "--knot", "torus:3,4"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, SpecExamples) {
  const CliRun excluded = run({"excluded", "--knot", "2bridge:3/1"});
  EXPECT_EQ(excluded.code, 0);
  EXPECT_NE(excluded.out.find("excluded tau^2: {3}"), std::string::npos) << excluded.out;
  EXPECT_NE(excluded.out.find("sqrt(3)"), std::string::npos);
  const CliRun apoly = run({"apoly", "--knot", "apoly:pretzel237.json#A", "--output", "human"});
  EXPECT_EQ(apoly.code, 0);
  EXPECT_NE(apoly.out.find("deg_l = 6"), std::string::npos) << apoly.out;
}

TEST(Cli, OtherSubcommands) {
  EXPECT_NE(run({"alexander", "--knot", "2bridge:5/3"}).out.find("t^2 - 3*t + 1"), std::string::npos);
  EXPECT_NE(run({"alexander", "--knot", "sum:2bridge:3/1+2bridge:3/1"}).out.find("t^4 - 2*t^3 + 3*t^2 - 2*t + 1"),
            std::string::npos);
  EXPECT_NE(run({"curve", "--knot", "2bridge:3/1"}).out.find("x^2 - y - 1"), std::string::npos);
  EXPECT_NE(run({"curve", "--knot", "torus:3,5"}).out.find("4 components"), std::string::npos);
  const CliRun slice = run({"slice", "--knot", "2bridge:5/3", "--tau", "1", "--output", "json"});
  EXPECT_NE(slice.out.find("\"non_transverse\": true"), std::string::npos) << slice.out;
  EXPECT_NE(run({"apoly", "--knot", "2bridge:3/1"}).out.find("A(m, l) = m^6*l + 1"), std::string::npos);
  EXPECT_NE(run({"apoly", "--knot", "torus:3,4", "--method", "slice", "--tau", "1/2"}).out.find("deg_l = 3"),
            std::string::npos);
  EXPECT_EQ(run({"apoly", "--knot", "torus:3,4", "--method", "eliminate"}).code, 1);
}

}  // namespace
}  // namespace knotchar
