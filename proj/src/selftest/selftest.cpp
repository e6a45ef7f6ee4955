#include "knotchar/selftest/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "knotchar/charvar/riley.hpp"
#include "knotchar/charvar/torus.hpp"
#include "knotchar/error.hpp"
#include "knotchar/exactalg/chebyshev.hpp"
#include "knotchar/exactalg/mat2.hpp"
#include "knotchar/exactalg/polyalg.hpp"
#include "knotchar/hp/hp.hpp"
#include "knotchar/hp/prime_knot.hpp"

namespace knotchar {

namespace {

class Suite {
 public:
  explicit Suite(SuiteReport& r) : r_(r) {}
  void expect(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }

 private:
  SuiteReport& r_;
};

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Random polynomial in (x, y) with deg_x exactly dx.
RationalPoly random_xy(std::mt19937_64& rng, const Variables& ctx, int dx, int dy) {
  std::vector<RationalPoly::Term> terms;
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dy; ++j) {
      Monomial m;
      m[0] = static_cast<std::uint32_t>(i);
      m[1] = static_cast<std::uint32_t>(j);
      long c = pick(rng, -5, 5);
      if (i == dx && j == 0 && c == 0) c = 1;
      terms.push_back({m, BigRational(c)});
    }
  }
  return RationalPoly::from_terms(ctx, std::move(terms));
}

RationalPoly random_univariate(std::mt19937_64& rng, const Variables& ctx, int d) {
  std::vector<RationalPoly::Term> terms;
  for (int i = 0; i <= d; ++i) {
    Monomial m;
    m[0] = static_cast<std::uint32_t>(i);
    long c = pick(rng, -6, 6);
    if (i == d && c == 0) c = 1;
    terms.push_back({m, BigRational(c)});
  }
  return RationalPoly::from_terms(ctx, std::move(terms));
}

BigRational random_rational(std::mt19937_64& rng) {
  BigRational r(pick(rng, -9, 9), pick(rng, 1, 7));
  r.canonicalize();
  return r;
}

// Random rational tau in (-2, 2).
QuadNum random_tau(std::mt19937_64& rng) {
  const long den = pick(rng, 2, 60);
  BigRational t(pick(rng, -(2 * den - 1), 2 * den - 1), den);
  t.canonicalize();
  return QuadNum(t);
}

std::vector<QuadNum> generic_taus(std::mt19937_64& rng, const std::vector<const PrimeKnot*>& knots, int count) {
  std::vector<QuadNum> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 1000; ++tries) {
    const QuadNum t = random_tau(rng);
    bool ok = true;
    for (const auto* k : knots) ok = ok && is_generic_tau(k->curve, k->alexander, t);
    if (ok) out.push_back(t);
  }
  return out;
}

void suite_resultant(Suite& s, std::mt19937_64& rng) {
  const Variables ctx{"x", "y"};
  for (int n = 0; n < 100; ++n) {
    const RationalPoly f = random_xy(rng, ctx, static_cast<int>(pick(rng, 1, 3)), static_cast<int>(pick(rng, 0, 2)));
    const RationalPoly g = random_xy(rng, ctx, static_cast<int>(pick(rng, 1, 3)), static_cast<int>(pick(rng, 0, 2)));
    const RationalPoly h = random_xy(rng, ctx, static_cast<int>(pick(rng, 1, 3)), static_cast<int>(pick(rng, 0, 2)));
    const std::string tag = "instance " + std::to_string(n) + ": f = " + f.to_string() + ", g = " + g.to_string();
    const RationalPoly rfh = resultant(f, h, 0);
    s.expect(resultant(f * g, h, 0) == rfh * resultant(g, h, 0), tag + ": Res(fg, h) multiplicativity");
    const int df = f.degree(std::size_t{0});
    const int dg = g.degree(std::size_t{0});
    RationalPoly swapped = resultant(g, f, 0);
    if ((df * dg) % 2 == 1) swapped = -swapped;
    s.expect(resultant(f, g, 0) == swapped, tag + ": Res(f, g) = (-1)^(mn) Res(g, f)");
    s.expect(rfh == sylvester_resultant(f, h, 0), tag + ": subresultant vs Sylvester");
  }
}

void suite_squarefree(Suite& s, std::mt19937_64& rng) {
  const Variables ctx{"x"};
  for (int n = 0; n < 50; ++n) {
    RationalPoly f(ctx, random_rational(rng) + 1000);
    const int parts = static_cast<int>(pick(rng, 1, 3));
    for (int i = 1; i <= parts; ++i) f *= random_univariate(rng, ctx, static_cast<int>(pick(rng, 1, 2))).pow(static_cast<unsigned>(i));
    const auto dec = squarefree_decompose(f, 0);
    RationalPoly rebuilt(ctx, f.leading_coefficient());
    bool squarefree = true;
    for (const auto& part : dec.parts) {
      rebuilt *= part.factor.pow(part.multiplicity);
      squarefree = squarefree && gcd_univariate(part.factor, part.factor.derivative(0), 0).degree(std::size_t{0}) == 0;
    }
    s.expect(rebuilt == f, "reconstruction of " + f.to_string());
    s.expect(squarefree, "squarefree parts of " + f.to_string());
  }
}

void suite_cayley_hamilton(Suite& s, std::mt19937_64& rng) {
  using M = Mat2<BigRational>;
  const Variables ctx{"x"};
  for (int n = 0; n < 40; ++n) {
    const M upper(BigRational(1), random_rational(rng), BigRational(0), BigRational(1));
    const M lower(BigRational(1), BigRational(0), random_rational(rng), BigRational(1));
    const BigRational d = random_rational(rng) + 10;
    const M diag(d, BigRational(0), BigRational(0), 1 / d);
    const M a = upper * diag * lower;
    const M id = M::identity(BigRational(1), BigRational(0));
    const BigRational tr = a.trace();
    const int k = static_cast<int>(pick(rng, -6, 9));
    M power = id;
    const M step = k >= 0 ? a : a.adjugate();
    for (int i = 0; i < std::abs(k); ++i) power = power * step;
    const BigRational s1 = chebyshev_s_any(k - 1, ctx, 0).evaluate({tr});
    const BigRational s2 = chebyshev_s_any(k - 2, ctx, 0).evaluate({tr});
    const M rhs(s1 * a.e[0] - s2, s1 * a.e[1], s1 * a.e[2], s1 * a.e[3] - s2);
    s.expect(a.det() == 1, "det of instance " + std::to_string(n));
    s.expect(power == rhs, "A^" + std::to_string(k) + " for instance " + std::to_string(n));
  }
}

void suite_alexander(Suite& s) {
  auto check = [&](const Presentation& pres) {
    const AlexanderPoly delta = alexander_polynomial(pres);
    const RationalPoly& p = delta.polynomial();
    const BigRational at1 = p.evaluate({BigRational(1)});
    s.expect(at1 == 1 || at1 == -1, pres.label + ": Delta(1) = " + at1.get_str());
    const int d = delta.degree();
    bool palindromic = true;
    for (int i = 0; i <= d; ++i) {
      Monomial lo;
      Monomial hi;
      lo[0] = static_cast<std::uint32_t>(i);
      hi[0] = static_cast<std::uint32_t>(d - i);
      palindromic = palindromic && p.coefficient(lo) == p.coefficient(hi);
    }
    s.expect(palindromic, pres.label + ": palindromic");
  };
  for (const auto& k : two_bridge_catalog()) check(two_bridge_presentation(k));
  for (const auto& t : torus_catalog()) check(torus_presentation(t));
}

void suite_riley_degree(Suite& s) {
  for (const auto& k : two_bridge_catalog()) {
    const RileyModel m = riley_model(k);
    s.expect(m.phi.degree("u") == (k.p() - 1) / 2, m.presentation.label + ": deg_u phi = " + std::to_string(m.phi.degree("u")));
  }
}

void suite_mirror(Suite& s, std::mt19937_64& rng) {
  for (const auto& k : two_bridge_catalog()) {
    const PrimeKnot a = resolve_prime(k);
    const PrimeKnot b = resolve_prime(k.mirror());
    for (const auto& tau : generic_taus(rng, {&a, &b}, 3)) {
      const SliceResult sa = slice_count(a.curve, tau, a.alexander);
      const SliceResult sb = slice_count(b.curve, tau, b.alexander);
      s.expect(sa.multiplicities == sb.multiplicities,
               a.label + " vs mirror " + b.label + " at tau = " + tau.to_tau_string());
      s.expect(hp_prime(k, tau).graded->ranks == hp_prime(k.mirror(), tau).graded->ranks,
               a.label + " HP vs mirror at tau = " + tau.to_tau_string());
    }
  }
}

void suite_torus_path(Suite& s, std::mt19937_64& rng) {
  for (int q : {3, 5, 7}) {
    const PrimeKnot torus = resolve_prime(TorusSpec(2, q));
    const PrimeKnot twobridge = resolve_prime(TwoBridgeSpec(q, 1));
    for (const auto& tau : generic_taus(rng, {&torus, &twobridge}, 5)) {
      const unsigned a = slice_count(torus.curve, tau, torus.alexander).total_degree;
      const unsigned b = slice_count(twobridge.curve, tau, twobridge.alexander).total_degree;
      s.expect(a == b, "T(2," + std::to_string(q) + ") " + std::to_string(a) + " vs b(" + std::to_string(q) + ",1) " +
                           std::to_string(b) + " at tau = " + tau.to_tau_string());
    }
    s.expect(*torus.alexander == *twobridge.alexander, "T(2," + std::to_string(q) + ") Alexander polynomial");
  }
}

void suite_tau_independence(Suite& s, std::mt19937_64& rng) {
  for (const auto& spec : prime_catalog()) {
    const PrimeKnot k = resolve_prime(spec);
    const std::vector<QuadNum> taus = generic_taus(rng, {&k}, 10);
    s.expect(taus.size() == 10, k.label + ": found 10 generic tau");
    std::optional<std::map<int, unsigned long>> first;
    for (const auto& tau : taus) {
      const auto ranks = hp_prime(spec, tau).graded->ranks;
      if (!first) first = ranks;
      s.expect(ranks == *first && ranks.size() == 1 && ranks.count(0) == 1,
               k.label + ": ranks change at tau = " + tau.to_tau_string());
    }
  }
}

}  // namespace

std::vector<TwoBridgeSpec> two_bridge_catalog() {
  std::vector<TwoBridgeSpec> out;
  for (int p = 3; p <= 13; p += 2) {
    for (int q = 1; q < p; q += 2) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

std::vector<TorusSpec> torus_catalog() { return {TorusSpec(2, 3), TorusSpec(2, 5), TorusSpec(2, 7), TorusSpec(3, 4), TorusSpec(3, 5)}; }

std::vector<KnotSpec> prime_catalog() {
  std::vector<KnotSpec> out;
  for (const auto& k : two_bridge_catalog()) out.emplace_back(k);
  for (const auto& t : torus_catalog()) out.emplace_back(t);
  out.emplace_back(ExternalSpec{"pretzel237.json", "A"});
  return out;
}

const std::vector<std::string>& selftest_suite_names() {
  static const std::vector<std::string> names{"resultant",    "squarefree", "cayley_hamilton", "alexander",
                                              "riley_degree", "mirror",     "torus_path",      "tau_independence"};
  return names;
}

SuiteReport run_selftest_suite(const std::string& name, std::uint64_t seed) {
  const auto& names = selftest_suite_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) raise(ErrorCode::kInvalidArgument, "unknown selftest suite '" + name + "'");
  SuiteReport report;
  report.name = name;
  Suite s(report);
  // Each suite gets its own stream so results do not depend on run order.
  std::seed_seq seq{seed, static_cast<std::uint64_t>(it - names.begin())};
  std::mt19937_64 rng(seq);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (name == "resultant") {
      suite_resultant(s, rng);
    } else if (name == "squarefree") {
      suite_squarefree(s, rng);
    } else if (name == "cayley_hamilton") {
      suite_cayley_hamilton(s, rng);
    } else if (name == "alexander") {
      suite_alexander(s);
    } else if (name == "riley_degree") {
      suite_riley_degree(s);
    } else if (name == "mirror") {
      suite_mirror(s, rng);
    } else if (name == "torus_path") {
      suite_torus_path(s, rng);
    } else if (name == "tau_independence") {
      suite_tau_independence(s, rng);
    }
  } catch (const Error& e) {
    s.expect(false, e.what());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SuiteReport> run_selftests(std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const auto& name : selftest_suite_names()) out.push_back(run_selftest_suite(name, seed));
  return out;
}

}  // namespace knotchar
