#include "knotchar/knotgroups/presentation.hpp"

#include <cstdlib>
#include <numeric>

#include "knotchar/error.hpp"
#include "knotchar/exactalg/rational.hpp"

namespace knotchar {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

using IntMatrix = std::vector<std::vector<long>>;

/// Diagonal of a Smith normal form (nonzero entries, absolute values).
std::vector<long> smith_diagonal(IntMatrix m) {
  std::vector<long> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || std::labs(m[i][j]) < std::labs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const long f = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const long f = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility of the remaining block
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divisible = false;
          break;
        }
      }
    }
    if (!divisible) continue;
    diag.push_back(std::labs(m[t][t]));
    ++t;
  }
  return diag;
}

/// Primitive integer generator of the rational kernel of m (rank n-1 assumed).
std::vector<long> kernel_vector(const IntMatrix& m, std::size_t n) {
  std::vector<std::vector<BigRational>> a;
  for (const auto& row : m) {
    std::vector<BigRational> r;
    for (long v : row) r.emplace_back(v);
    a.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t k = r;
    while (k < a.size() && sgn(a[k][c]) == 0) ++k;
    if (k == a.size()) continue;
    std::swap(a[r], a[k]);
    const BigRational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const BigRational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::size_t free_col = n;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
      free_col = c;
      break;
    }
  }
  std::vector<BigRational> v(n, BigRational(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free_col];
  BigInt lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
  BigInt g = 0;
  for (auto& x : v) {
    x *= lcm_den;
    g = gcd(g, x.get_num());
  }
  std::vector<long> out;
  for (const auto& x : v) out.push_back(BigInt(x.get_num() / g).get_si());
  return out;
}

}  // namespace

TwoBridgeSpec::TwoBridgeSpec(int p, int q) : p_(p), q_(q) {
  if (p < 3 || p % 2 == 0) raise(ErrorCode::kInvalidSpec, "p must be odd and at least 3 (got " + std::to_string(p) + ")");
  if (q <= 0 || q >= p) raise(ErrorCode::kInvalidSpec, "q must satisfy 0 < q < p (got " + std::to_string(q) + ")");
  if (std::gcd(p, q) != 1) raise(ErrorCode::kInvalidSpec, "p and q must be coprime");
}

std::vector<int> TwoBridgeSpec::epsilon() const {
  std::vector<int> eps;
  const int qo = q_odd();
  for (int i = 1; i < p_; ++i) eps.push_back(floor_div(static_cast<long>(i) * qo, p_) % 2 == 0 ? 1 : -1);
  return eps;
}

TorusSpec::TorusSpec(int p, int q) : p_(p), q_(q) {
  if (p < 2 || q < 2) raise(ErrorCode::kInvalidSpec, "torus parameters must be at least 2");
  if (std::gcd(p, q) != 1) raise(ErrorCode::kInvalidSpec, "torus parameters must be coprime");
  bool found = false;
  for (int a = -p; a <= p; ++a) {
    const long rest = 1 - static_cast<long>(a) * q;
    if (rest % p != 0) continue;
    const int b = static_cast<int>(rest / p);
    if (!found || std::abs(a) < std::abs(a_) || (std::abs(a) == std::abs(a_) && std::abs(b) < std::abs(b_))) {
      a_ = a;
      b_ = b;
      found = true;
    }
  }
}

Word two_bridge_w(const TwoBridgeSpec& spec) {
  std::vector<Letter> letters;
  const auto eps = spec.epsilon();
  for (std::size_t i = 0; i < eps.size(); ++i) letters.push_back({i % 2 == 0 ? 0 : 1, eps[i]});
  return Word(letters);
}

Presentation two_bridge_presentation(const TwoBridgeSpec& spec) {
  const Word w = two_bridge_w(spec);
  const Word a = Word::power(0, 1);
  const Word b = Word::power(1, 1);
  Presentation pres;
  pres.generator_count = 2;
  pres.generator_names = "ab";
  pres.relators = {w * a * w.inverse() * b.inverse()};
  pres.meridian = a;
  pres.label = "b(" + std::to_string(spec.p()) + "," + std::to_string(spec.q()) + ")";
  return pres;
}

Presentation torus_presentation(const TorusSpec& spec) {
  const Word mu = Word::power(0, spec.a()) * Word::power(1, spec.b());
  Presentation pres;
  pres.generator_count = 2;
  pres.generator_names = "uv";
  pres.relators = {Word::power(0, spec.p()) * Word::power(1, -spec.q())};
  pres.meridian = mu;
  Word lambda = Word::power(0, spec.p());
  for (int k = 0; k < spec.p() * spec.q(); ++k) lambda = lambda * mu.inverse();
  pres.longitude = lambda;
  pres.label = "T(" + std::to_string(spec.p()) + "," + std::to_string(spec.q()) + ")";
  return pres;
}

long Abelianization::of(const Word& w) const {
  long e = 0;
  for (const auto& l : w.letters()) e += l.exponent * generator_exponent.at(static_cast<std::size_t>(l.generator));
  return e;
}

Abelianization abelianization_map(const Presentation& pres) {
  const auto n = static_cast<std::size_t>(pres.generator_count);
  if (n == 0) raise(ErrorCode::kH1NotZ, "presentation has no generators");
  IntMatrix m;
  for (const auto& r : pres.relators) {
    std::vector<long> row(n, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = r.exponent_sum(static_cast<int>(j));
    m.push_back(row);
  }
  const auto diag = smith_diagonal(m);
  if (diag.size() + 1 != n) raise(ErrorCode::kH1NotZ, pres.label + ": H1 has rank " + std::to_string(n - diag.size()));
  for (long d : diag) {
    if (d != 1) raise(ErrorCode::kH1NotZ, pres.label + ": H1 has torsion of order " + std::to_string(d));
  }
  std::vector<long> e = n == 1 ? std::vector<long>{1} : kernel_vector(m, n);
  Abelianization ab{e};
  const long mu = ab.of(pres.meridian);
  if (mu != 1 && mu != -1) raise(ErrorCode::kH1NotZ, pres.label + ": meridian does not generate H1");
  if (mu == -1) {
    for (auto& x : ab.generator_exponent) x = -x;
  }
  return ab;
}

long abelianization(const Presentation& pres, const Word& w) { return abelianization_map(pres).of(w); }

}  // namespace knotchar
