#include "knotchar/charvar/riley.hpp"

#include <algorithm>

#include "knotchar/error.hpp"
#include "knotchar/exactalg/laurent.hpp"
#include "knotchar/exactalg/polyalg.hpp"

namespace knotchar {

namespace {

RationalPoly s_power(const Variables& ctx, int k) {
  Monomial m;
  m[0] = static_cast<std::uint32_t>(k);
  return RationalPoly::monomial(ctx, m, BigRational(1));
}

/// Pull the common power of s out of num, keeping shift >= 0.
LaurentMatrix reduce(LaurentMatrix m) {
  int k = m.shift;
  for (const auto& e : m.num.e) {
    if (!e.is_zero()) k = std::min(k, e.min_degree(0));
  }
  if (k <= 0) return m;
  Monomial d;
  d[0] = static_cast<std::uint32_t>(k);
  for (auto& e : m.num.e) {
    std::vector<RationalPoly::Term> terms;
    for (const auto& t : e.terms()) terms.push_back({t.mono / d, t.coeff});
    e = RationalPoly::from_terms(e.variables(), std::move(terms));
  }
  m.shift -= k;
  return m;
}

/// Numerators of x and y over the common denominator s^max(shift).
std::pair<Mat2<RationalPoly>, Mat2<RationalPoly>> align(const LaurentMatrix& x, const LaurentMatrix& y, int& shift) {
  shift = std::max(x.shift, y.shift);
  auto lift = [&](const LaurentMatrix& m) {
    Mat2<RationalPoly> out = m.num;
    if (m.shift == shift) return out;
    const RationalPoly f = s_power(m.num.e[0].variables(), shift - m.shift);
    for (auto& e : out.e) e = e * f;
    return out;
  };
  return {lift(x), lift(y)};
}

void check_det_one(const LaurentMatrix& m) {
  const RationalPoly d = m.num.det();
  if (d != s_power(d.variables(), 2 * m.shift)) {
    raise(ErrorCode::kDetNotOne, "generator image has determinant " + d.to_string() + " / s^" + std::to_string(2 * m.shift));
  }
}

}  // namespace

LaurentMatrix LaurentMatrix::identity(const Variables& ctx) {
  return {Mat2<RationalPoly>::identity(RationalPoly(ctx, BigRational(1)), RationalPoly(ctx)), 0};
}

LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y) {
  return reduce({x.num * y.num, x.shift + y.shift});
}

LaurentMatrix word_matrix(const Word& w, const std::vector<LaurentMatrix>& images, const Variables& ctx) {
  std::vector<bool> checked(images.size(), false);
  LaurentMatrix acc = LaurentMatrix::identity(ctx);
  for (const auto& l : w.letters()) {
    const auto g = static_cast<std::size_t>(l.generator);
    if (g >= images.size()) raise(ErrorCode::kInvalidArgument, "word uses a generator without an image");
    if (!checked[g]) {
      check_det_one(images[g]);
      checked[g] = true;
    }
    acc = acc * (l.exponent > 0 ? images[g] : images[g].inverse());
  }
  return acc;
}

std::vector<LaurentMatrix> riley_images(const Variables& ctx) {
  const RationalPoly s = RationalPoly::variable(ctx, ctx.name(0));
  const RationalPoly u = RationalPoly::variable(ctx, ctx.name(1));
  const RationalPoly one(ctx, BigRational(1));
  const RationalPoly zero(ctx);
  // [[s,1],[0,1/s]] = [[s^2, s],[0, 1]] / s and [[s,0],[u,1/s]] = [[s^2, 0],[u s, 1]] / s
  return {LaurentMatrix{Mat2<RationalPoly>(s * s, s, zero, one), 1},
          LaurentMatrix{Mat2<RationalPoly>(s * s, zero, u * s, one), 1}};
}

RileyModel riley_polynomial(const Presentation& pres) {
  if (pres.generator_count != 2 || pres.relators.size() != 1) {
    raise(ErrorCode::kInvalidArgument, "Riley model needs a two-generator one-relator presentation");
  }
  const auto& rel = pres.relators[0].letters();
  const std::size_t len = rel.size();
  if (len < 6 || len % 2 != 0) raise(ErrorCode::kInvalidArgument, "relator is not of the form w a w^-1 b^-1");
  const std::size_t wl = (len - 2) / 2;
  const Word w(std::vector<Letter>(rel.begin(), rel.begin() + static_cast<long>(wl)));
  const Word expect = w * Word::power(0, 1) * w.inverse() * Word::power(1, -1);
  if (!(expect == pres.relators[0])) raise(ErrorCode::kInvalidArgument, "relator is not of the form w a w^-1 b^-1");

  RileyModel model;
  model.presentation = pres;
  model.p = static_cast<int>(wl) + 1;
  model.w = w;
  model.ctx = Variables{"s", "u"};
  model.images = riley_images(model.ctx);
  const LaurentMatrix wm = word_matrix(w, model.images, model.ctx);
  int shift = 0;
  const auto [wa, bw] = align(wm * model.images[0], model.images[1] * wm, shift);
  std::vector<RationalPoly> entries;
  for (int k = 0; k < 4; ++k) {
    RationalPoly d = wa.e[static_cast<std::size_t>(k)] - bw.e[static_cast<std::size_t>(k)];
    if (!d.is_zero()) entries.push_back(std::move(d));
  }
  if (entries.empty()) raise(ErrorCode::kGcdDegenerate, pres.label + ": relator holds identically");
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  RationalPoly g = entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (!divides(g, entries[i])) g = gcd(g, entries[i]);
  }
  if (g.degree(1) <= 0) raise(ErrorCode::kGcdDegenerate, pres.label + ": entries share no factor involving u");
  g = integer_primitive(primitive_part_in(g, 1));
  if (g.degree(1) != (model.p - 1) / 2) {
    raise(ErrorCode::kGcdDegenerate, pres.label + ": deg_u phi = " + std::to_string(g.degree(1)) + ", expected " +
                                         std::to_string((model.p - 1) / 2));
  }
  const int lo = g.min_degree(0);
  const int hi = g.degree(0);
  if ((lo + hi) % 2 != 0) raise(ErrorCode::kNotSymmetric, pres.label + ": phi has no s -> 1/s symmetry centre");
  model.center = (lo + hi) / 2;
  model.phi = std::move(g);
  return model;
}

RileyModel riley_model(const TwoBridgeSpec& spec) { return riley_polynomial(two_bridge_presentation(spec)); }

PlaneCurve trace_curve(const RileyModel& model) {
  const Variables sy{"s", "y"};
  const RationalPoly u = RationalPoly::variable(model.ctx, "u");
  const RationalPoly two(model.ctx, BigRational(2));
  const RationalPoly psi = model.phi.substitute(1, two - u).rename(sy);
  const Variables xy{"x", "y"};
  const RationalPoly y = RationalPoly::variable(xy, "y");
  RationalPoly P(xy);
  const auto coeffs = psi.coefficients_in(1);
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    std::map<int, BigRational> lt;
    for (const auto& t : coeffs[j].terms()) lt[static_cast<int>(t.mono[0]) - model.center] = t.coeff;
    const RationalPoly q = symmetric_rewrite(laurent_normalize(lt, "s"), "x").embed(xy);
    P = P * y + q;
  }
  PlaneCurve curve;
  curve.label = model.presentation.label;
  const RationalPoly y_minus_2 = y - RationalPoly(xy, BigRational(2));
  while (!P.is_zero() && P.substitute(1, BigRational(2)).is_zero()) {
    P = divide_exact(P, y_minus_2);
    ++curve.reducible_power;
  }
  curve.P = integer_primitive_keep_sign(P);
  return curve;
}

bool vanishes_mod_phi(const RileyModel& model, const RationalPoly& f) {
  if (f.is_zero()) return true;
  return pseudo_remainder(f, model.phi, 1).is_zero();
}

bool verify_longitude(const RileyModel& model, const Word& lambda) {
  if (abelianization(model.presentation, lambda) != 0) return false;
  const LaurentMatrix l = word_matrix(lambda, model.images, model.ctx);
  int shift = 0;
  const auto [la, al] = align(l * model.images[0], model.images[0] * l, shift);
  for (std::size_t k = 0; k < 4; ++k) {
    if (!vanishes_mod_phi(model, la.e[k] - al.e[k])) return false;
  }
  return true;
}

}  // namespace knotchar
