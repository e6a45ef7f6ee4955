#include "knotchar/knotgroups/alexander.hpp"

#include "knotchar/error.hpp"
#include "knotchar/exactalg/polyalg.hpp"

namespace knotchar {

namespace {

const Variables& t_context() {
  static const Variables ctx{"t"};
  return ctx;
}

RationalPoly t_power(long e) {
  Monomial m;
  m[0] = static_cast<std::uint32_t>(e);
  return RationalPoly::monomial(t_context(), m, BigRational(1));
}

/// Bareiss determinant over Q[t].
RationalPoly determinant(std::vector<std::vector<RationalPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return RationalPoly(t_context(), BigRational(1));
  BigRational sign = 1;
  RationalPoly prev(t_context(), BigRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return RationalPoly(t_context());
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = RationalPoly(t_context());
    }
    prev = a[k][k];
  }
  return a[n - 1][n - 1] * sign;
}

/// Strip t-power factors, fix the sign, check symmetry and Delta(1) = +-1.
AlexanderPoly normalize(const RationalPoly& p, const std::string& label) {
  if (p.is_zero()) raise(ErrorCode::kDegeneratePresentation, label + ": Alexander minor vanishes");
  std::map<int, BigRational> terms;
  for (const auto& t : p.terms()) terms[static_cast<int>(t.mono[0])] = t.coeff;
  LaurentPoly lp = laurent_normalize(terms, "t");
  lp.shift = 0;
  if (sgn(lp.base.leading_coefficient()) < 0) lp.base = -lp.base;
  const int d = lp.base.degree(std::size_t{0});
  for (int i = 0; i <= d; ++i) {
    Monomial a;
    Monomial b;
    a[0] = static_cast<std::uint32_t>(i);
    b[0] = static_cast<std::uint32_t>(d - i);
    if (lp.base.coefficient(a) != lp.base.coefficient(b)) {
      raise(ErrorCode::kDegeneratePresentation, label + ": Alexander polynomial " + lp.base.to_string() + " is not palindromic");
    }
  }
  const BigRational at_one = lp.base.evaluate({BigRational(1)});
  if (at_one != 1 && at_one != -1) {
    raise(ErrorCode::kDegeneratePresentation, label + ": Alexander polynomial has value " + at_one.get_str() + " at 1");
  }
  return AlexanderPoly{lp};
}

}  // namespace

LaurentPoly fox_derivative(const Word& w, int generator, const Abelianization& ab) {
  std::map<int, BigRational> acc;
  long prefix = 0;
  for (const auto& l : w.letters()) {
    const long e = ab.generator_exponent.at(static_cast<std::size_t>(l.generator));
    if (l.exponent > 0) {
      if (l.generator == generator) acc[static_cast<int>(prefix)] += 1;
      prefix += e;
    } else {
      prefix -= e;
      if (l.generator == generator) acc[static_cast<int>(prefix)] -= 1;
    }
  }
  return laurent_normalize(acc, "t");
}

std::vector<std::vector<LaurentPoly>> fox_alexander_matrix(const Presentation& pres) {
  const Abelianization ab = abelianization_map(pres);
  std::vector<std::vector<LaurentPoly>> out;
  for (const auto& r : pres.relators) {
    std::vector<LaurentPoly> row;
    for (int j = 0; j < pres.generator_count; ++j) row.push_back(fox_derivative(r, j, ab));
    out.push_back(std::move(row));
  }
  return out;
}

AlexanderPoly alexander_polynomial(const Presentation& pres, std::optional<int> deleted_column) {
  const int n = pres.generator_count;
  if (static_cast<int>(pres.relators.size()) != n - 1) {
    raise(ErrorCode::kDegeneratePresentation, pres.label + ": presentation is not of deficiency one");
  }
  const int del = deleted_column.value_or(n - 1);
  if (del < 0 || del >= n) raise(ErrorCode::kInvalidArgument, "deleted column out of range");
  const Abelianization ab = abelianization_map(pres);
  const long e = ab.generator_exponent[static_cast<std::size_t>(del)];
  if (e == 0) raise(ErrorCode::kDegeneratePresentation, pres.label + ": deleted generator is null-homologous");
  const auto fox = fox_alexander_matrix(pres);
  std::vector<std::vector<RationalPoly>> minor;
  for (const auto& row : fox) {
    int top = 0;
    for (int j = 0; j < n; ++j) {
      if (j != del) top = std::max(top, row[static_cast<std::size_t>(j)].shift);
    }
    std::vector<RationalPoly> prow;
    for (int j = 0; j < n; ++j) {
      if (j == del) continue;
      const LaurentPoly& entry = row[static_cast<std::size_t>(j)];
      prow.push_back(entry.is_zero() ? RationalPoly(t_context()) : entry.base.embed(t_context()) * t_power(top - entry.shift));
    }
    minor.push_back(std::move(prow));
  }
  const RationalPoly det = determinant(std::move(minor));
  if (det.is_zero()) raise(ErrorCode::kDegeneratePresentation, pres.label + ": Alexander minor vanishes");
  const RationalPoly one(t_context(), BigRational(1));
  const RationalPoly scaled = divide_exact(det * (t_power(1) - one), t_power(e < 0 ? -e : e) - one);
  return normalize(scaled, pres.label);
}

AlexanderPoly alexander_from_coefficients(const std::vector<long>& coefficients) {
  std::vector<RationalPoly::Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Monomial m;
    m[0] = static_cast<std::uint32_t>(i);
    terms.push_back({m, BigRational(coefficients[i])});
  }
  return normalize(RationalPoly::from_terms(t_context(), std::move(terms)), "supplied");
}

}  // namespace knotchar
