// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "knotchar/apoly/ahat.hpp"
#include "knotchar/apoly/elimination.hpp"
#include "knotchar/charvar/excluded.hpp"
#include "knotchar/charvar/torus.hpp"
#include "knotchar/hp/hp.hpp"
#include "knotchar/knotgroups/alexander.hpp"
#include "knotchar/knotgroups/longitude.hpp"
#include "knotchar/selftest/selftest.hpp"

using namespace knotchar;

namespace {

using Complex = std::complex<double>;
using Mat = Eigen::Matrix2cd;

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && detail_.empty()) detail_ = what;
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  const std::string& detail() const { return detail_; }

 private:
  bool ok_ = true;
  std::string detail_;
};

const QuadNum kSqrt3 = QuadNum::sqrt_of(3);
const KnotSpec kTrefoil = TwoBridgeSpec(3, 1);
const KnotSpec kFigureEight = TwoBridgeSpec(5, 3);

QuadNum rat(long n, long d = 1) { return QuadNum(BigRational(n, d)); }

bool is_ranks(const HPResult& r, std::map<int, unsigned long> expected) { return r.graded && r.graded->ranks == expected; }

void criterion1(Check& c) {
  for (const QuadNum& tau : {rat(0), rat(1, 2), rat(-3, 2)}) {
    const HPResult r = hp(kTrefoil, tau);
    c.expect(is_ranks(r, {{0, 1}}) && r.regime == Regime::kTheorem, "trefoil at " + tau.to_tau_string());
  }
}

void criterion2(Check& c) {
  for (const QuadNum& tau : {kSqrt3, -kSqrt3}) {
    const HPResult r = hp(kTrefoil, tau);
    c.expect(is_ranks(r, {}) && r.regime == Regime::kBestEffort && r.audit.excluded_tau,
             "trefoil at " + tau.to_tau_string());
  }
}

void criterion3(Check& c) {
  for (const QuadNum& tau : {rat(0), rat(1, 2), rat(1), kSqrt3}) {
    const HPResult r = hp(kFigureEight, tau);
    c.expect(is_ranks(r, {{0, 2}}) && r.regime == Regime::kTheorem, "figure-eight at " + tau.to_tau_string());
  }
  c.expect(hp_prime(kFigureEight, rat(1)).multiplicities == std::vector<unsigned>{2}, "double point at tau = 1");
}

void criterion4(Check& c) {
  const std::vector<std::tuple<std::string, int, int, int>> twist{
      {"5_2", 7, 5, 3}, {"6_1", 9, 7, 4}, {"7_2", 11, 9, 5}, {"8_1", 13, 11, 6}};
  for (const auto& [name, p, q, d] : twist) {
    const KnotSpec k = TwoBridgeSpec(p, q);
    const int s = ahat_l_degree(k, AhatMethod::kSlice, rat(1, 2)).value;
    const int e = ahat_l_degree(k, AhatMethod::kEliminate).value;
    c.expect(s == d && e == d, name + ": slice " + std::to_string(s) + ", eliminate " + std::to_string(e));
  }
}

RationalPoly ml(std::initializer_list<std::tuple<long, unsigned, unsigned>> terms) {
  const Variables ctx{"m", "l"};
  std::vector<RationalPoly::Term> out;
  for (const auto& [coef, i, j] : terms) {
    Monomial mono;
    mono[0] = i;
    mono[1] = j;
    out.push_back({mono, BigRational(coef)});
  }
  return RationalPoly::from_terms(ctx, out);
}

void criterion5(Check& c) {
  auto eliminate = [](int p, int q) {
    const TwoBridgeSpec spec(p, q);
    return a_polynomial_two_bridge(riley_model(spec), longitude_two_bridge(spec).word).poly;
  };
  c.expect(apoly_equivalent(eliminate(3, 1), ml({{1, 0, 0}, {1, 6, 1}})), "A(3_1)");
  const RationalPoly fig8 = ml({{1, 4, 2}, {-1, 8, 1}, {1, 6, 1}, {2, 4, 1}, {1, 2, 1}, {-1, 0, 1}, {1, 4, 0}});
  c.expect(apoly_equivalent(eliminate(5, 3), fig8), "A(4_1)");
}

void criterion6(Check& c) {
  const KnotSpec k = ExternalSpec{"pretzel237.json", "A"};
  c.expect(ahat_l_degree(k, AhatMethod::kExternal).value == 6, "deg_l");
  c.expect(is_ranks(hp(k, rat(1, 2)), {{0, 6}}), "HP at 1/2");
}

void criterion7(Check& c) {
  const KnotSpec e81 = TwoBridgeSpec(13, 11);
  const std::vector<std::tuple<std::string, KnotSpec, KnotSpec, QuadNum, std::map<int, unsigned long>, long>> cases{
      {"3_1#3_1", kTrefoil, kTrefoil, rat(0), {{-1, 1}, {0, 3}}, 2},
      {"4_1#4_1", kFigureEight, kFigureEight, rat(1, 2), {{-1, 4}, {0, 8}}, 4},
      {"3_1#4_1", kTrefoil, kFigureEight, rat(0), {{-1, 2}, {0, 5}}, 3},
      {"8_1#8_1", e81, e81, rat(1, 2), {{-1, 36}, {0, 48}}, 12}};
  for (const auto& [name, a, b, tau, ranks, chi] : cases) {
    const HPResult r = hp(KnotSpec::sum({a, b}), tau);
    const long m1 = *hp_prime(a, tau).casson_lin;
    const long m2 = *hp_prime(b, tau).casson_lin;
    c.expect(is_ranks(r, ranks) && r.casson_lin && *r.casson_lin == chi && chi == m1 + m2, name);
  }
}

void criterion8(Check& c) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 2}, {2, 1}}) {
    std::vector<KnotSpec> knots(static_cast<std::size_t>(n), kTrefoil);
    knots.insert(knots.end(), static_cast<std::size_t>(m), kFigureEight);
    const long chi = casson_lin(knots, rat(0)).value;
    c.expect(chi == n + 2 * m, "n = " + std::to_string(n) + ", m = " + std::to_string(m) + ": " + std::to_string(chi));
  }
}

void criterion9(Check& c) {
  const ExcludedSet t = excluded_tau_set(alexander_polynomial(two_bridge_presentation(TwoBridgeSpec(3, 1))));
  const bool pm = t.taus.size() == 2 && ((t.taus[0] == kSqrt3 && t.taus[1] == -kSqrt3) ||
                                         (t.taus[0] == -kSqrt3 && t.taus[1] == kSqrt3));
  c.expect(pm && t.unresolved.empty(), "trefoil");
  const ExcludedSet f = excluded_tau_set(alexander_polynomial(two_bridge_presentation(TwoBridgeSpec(5, 3))));
  c.expect(f.taus.empty() && f.tau_squared.empty() && f.unresolved.empty(), "figure-eight");
}

void criterion10(Check& c) {
  for (const auto& r : run_selftests(20261016)) c.expect(r.passed(), r.name + ": " + r.first_failure);
}

// Numeric oracle for torus knots: randomly conjugated U, V with eigenvalues
// exp(i pi k / p), exp(i pi j / q). A pair (k, j) carries irreducible
// representations iff U^p = V^q; the conjugation parameter moves tr UV.
Mat random_sl2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat m;
  do {
    m << Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
  } while (std::abs(m.determinant()) < 0.1);
  return m / std::sqrt(m.determinant());
}

Mat power(const Mat& m, int n) {
  Mat out = Mat::Identity();
  const Mat step = n >= 0 ? m : m.inverse();
  for (int i = 0; i < std::abs(n); ++i) out = out * step;
  return out;
}

std::size_t sampled_components(const TorusComponentModel& model, std::mt19937_64& rng, std::string& issue) {
  const int p = model.spec.p();
  const int q = model.spec.q();
  const double pi = std::acos(-1.0);
  std::size_t count = 0;
  for (int k = 1; k < p; ++k) {
    for (int j = 1; j < q; ++j) {
      const Complex lambda = std::polar(1.0, pi * k / p);
      const Complex mu = std::polar(1.0, pi * j / q);
      std::vector<Complex> traces_uv;
      bool relation = true;
      for (int sample = 0; sample < 4; ++sample) {
        const Mat a = random_sl2(rng);
        const Mat b = random_sl2(rng);
        Mat du = Mat::Zero();
        du(0, 0) = lambda;
        du(1, 1) = 1.0 / lambda;
        Mat dv = Mat::Zero();
        dv(0, 0) = mu;
        dv(1, 1) = 1.0 / mu;
        const Mat u = a * du * a.inverse();
        const Mat v = b * dv * b.inverse();
        relation = relation && (power(u, p) - power(v, q)).norm() < 1e-8;
        traces_uv.push_back((u * v).trace());
        // Cross-check the meridian trace polynomial at this point.
        const Mat meridian = power(u, model.spec.a()) * power(v, model.spec.b());
        Complex predicted = 0;
        const Complex x[3] = {u.trace(), v.trace(), (u * v).trace()};
        for (const auto& t : model.meridian_trace.terms()) {
          Complex term = t.coeff.get_d();
          for (int i = 0; i < 3; ++i) term *= std::pow(x[i], static_cast<int>(t.mono[static_cast<std::size_t>(i)]));
          predicted += term;
        }
        if (std::abs(predicted - meridian.trace()) > 1e-8 * (1 + std::abs(predicted))) issue = "meridian trace mismatch";
      }
      const bool varies = std::abs(traces_uv[0] - traces_uv[1]) > 1e-6 || std::abs(traces_uv[0] - traces_uv[2]) > 1e-6;
      if (relation && varies) ++count;
      if (relation != ((k - j) % 2 == 0)) issue = "relation pattern at (" + std::to_string(k) + ", " + std::to_string(j) + ")";
    }
  }
  return count;
}

void criterion11(Check& c) {
  std::mt19937_64 rng(4242);
  const std::vector<std::tuple<int, int, std::size_t>> cases{{2, 3, 1}, {2, 5, 2}, {3, 4, 3}, {3, 5, 4}};
  for (const auto& [p, q, n] : cases) {
    const TorusComponentModel model = torus_components(TorusSpec(p, q));
    std::string issue;
    const std::size_t sampled = sampled_components(model, rng, issue);
    const std::string name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    c.expect(model.components.size() == n, name + ": exact count " + std::to_string(model.components.size()));
    c.expect(sampled == n, name + ": sampled count " + std::to_string(sampled));
    c.expect(issue.empty(), name + ": " + issue);
    c.expect(is_ranks(hp(TorusSpec(p, q), rat(1, 2)), {{0, n}}), name + ": HP");
  }
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<void(Check&)>>> criteria{
      {1, "trefoil Z at degree 0 for tau in {0, 1/2, -3/2}", 1, criterion1},
      {2, "trefoil HP = 0 at tau = +-sqrt(3), best-effort, excluded", 1, criterion2},
      {3, "figure-eight Z^2 for tau in {0, 1/2, 1, sqrt(3)}, theorem at the double point", 1, criterion3},
      {4, "twist knots 5_2, 6_1, 7_2, 8_1: slice and elimination degrees 3, 4, 5, 6", 60, criterion4},
      {5, "A-polynomial goldens for 3_1 and 4_1", 5, criterion5},
      {6, "pretzel (-2,3,7): deg_l 6 and HP = Z^6", 1, criterion6},
      {7, "connected sums 3_1#3_1, 4_1#4_1, 3_1#4_1, 8_1#8_1", 60, criterion7},
      {8, "chi of n trefoils and m figure-eights is n + 2m", 60, criterion8},
      {9, "excluded sets: trefoil {+-sqrt(3)}, figure-eight empty", 1, criterion9},
      {10, "selftest suites under a fixed seed", 120, criterion10},
      {11, "torus component counts 1, 2, 3, 4 with numeric sampling", 60, criterion11},
  };
  int failures = 0;
  for (const auto& [id, text, limit, run] : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << seconds << " s";
    check.expect(seconds < limit, "took " + time.str());
    if (!check.ok()) ++failures;
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << text << " (" << time.str() << ")";
    if (!check.ok()) std::cout << " -- " << check.detail();
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
