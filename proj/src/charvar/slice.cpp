#include "knotchar/charvar/slice.hpp"

#include <algorithm>

#include "knotchar/charvar/excluded.hpp"
#include "knotchar/error.hpp"
#include "knotchar/exactalg/polyalg.hpp"

namespace knotchar {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool root_of(const RationalPoly& g, const QuadNum& tau, NongenericReport::Coordinate coord) {
  if (g.is_zero()) return true;
  if (g.degree(std::size_t{0}) <= 0) return false;
  const Variables ctx{g.variables().name(0)};
  const QuadPoly q(g.embed(ctx));
  if (coord == NongenericReport::Coordinate::kTrace) return q.substitute(0, tau).is_zero();
  const QuadPoly m = QuadPoly::variable(ctx, ctx.name(0));
  return resultant(q, m * m - m * tau + QuadPoly(ctx, QuadNum(1)), 0).is_zero();
}

SliceResult plane_slice(const PlaneCurve& curve, const QuadNum& tau, const std::optional<AlexanderPoly>& delta) {
  SliceResult res;
  res.tau = tau;
  res.flags.excluded_tau = delta ? excluded_tau_test(*delta, tau) : false;
  const Variables yctx{"y"};
  const QuadPoly P(curve.P);
  QuadPoly f = P.substitute(0, tau).embed(yctx);
  res.slice_polynomial = f.to_string();
  if (f.is_zero()) {
    raise(ErrorCode::kZeroSlice, curve.label + ": the hyperplane x = " + tau.to_string() + " contains a curve component");
  }
  const QuadPoly full = f;
  const QuadPoly y_minus_2 = QuadPoly::variable(yctx, "y") - QuadPoly(yctx, QuadNum(2));
  while (f.degree(std::size_t{0}) > 0 && f.substitute(0, QuadNum(2)).is_zero()) {
    f = divide_exact(f, y_minus_2);
    ++res.discarded_reducible;
  }
  if (res.discarded_reducible > 0 && !res.flags.excluded_tau) {
    raise(ErrorCode::kReducibleSlicePoint,
          curve.label + ": slice at tau = " + tau.to_string() + " meets y = 2 although tau is not excluded");
  }
  for (const auto& part : squarefree_decompose(f, 0).parts) {
    const int d = part.factor.degree(std::size_t{0});
    for (int i = 0; i < d; ++i) res.multiplicities.push_back(part.multiplicity);
  }
  std::sort(res.multiplicities.rbegin(), res.multiplicities.rend());
  for (unsigned m : res.multiplicities) {
    res.total_degree += m;
    if (m > 1) res.flags.non_transverse = true;
  }
  QuadPoly g = gcd_univariate(full, P.derivative(0).substitute(0, tau).embed(yctx), 0);
  g = gcd_univariate(g, P.derivative(1).substitute(0, tau).embed(yctx), 0);
  res.flags.curve_singular_at_slice = g.degree(std::size_t{0}) > 0 || res.discarded_reducible > 0;
  res.nongeneric_tau = nongeneric_tau_report(curve).hits(tau);
  return res;
}

SliceResult torus_slice(const TorusComponentModel& model, const QuadNum& tau, const std::optional<AlexanderPoly>& delta) {
  SliceResult res;
  res.tau = tau;
  if (delta && excluded_tau_test(*delta, tau)) {
    raise(ErrorCode::kExcludedTauUnsupported,
          "T(" + std::to_string(model.spec.p()) + "," + std::to_string(model.spec.q()) + "): tau = " + tau.to_string() +
              " is excluded; no count is available there");
  }
  res.multiplicities.assign(model.components.size(), 1U);
  res.total_degree = static_cast<unsigned>(model.components.size());
  return res;
}

SliceResult external_slice(const APolynomial& ap, const QuadNum& tau, const std::optional<AlexanderPoly>& delta) {
  SliceResult res;
  res.tau = tau;
  const std::optional<AlexanderPoly>& d = delta ? delta : ap.alexander;
  if (d && excluded_tau_test(*d, tau)) {
    raise(ErrorCode::kExcludedTauUnsupported, ap.label + ": tau = " + tau.to_string() + " is excluded; no count is available there");
  }
  res.total_degree = static_cast<unsigned>(deg_l(ap));
  res.multiplicities.assign(res.total_degree, 1U);
  res.multiplicities_known = false;
  res.nongeneric_tau = nongeneric_tau_report(ap).hits(tau);
  return res;
}

}  // namespace

bool NongenericReport::hits(const QuadNum& tau) const {
  return hits_discriminant(tau) || hits_leading(tau) || hits_content(tau);
}

bool NongenericReport::hits_discriminant(const QuadNum& tau) const {
  return coordinate != Coordinate::kNone && root_of(discriminant, tau, coordinate);
}

bool NongenericReport::hits_leading(const QuadNum& tau) const {
  return coordinate != Coordinate::kNone && root_of(leading, tau, coordinate);
}

bool NongenericReport::hits_content(const QuadNum& tau) const {
  return coordinate != Coordinate::kNone && root_of(content, tau, coordinate);
}

NongenericReport nongeneric_tau_report(const CurveModel& curve) {
  return std::visit(
      Overloaded{
          [](const PlaneCurve& c) {
            NongenericReport r;
            r.coordinate = NongenericReport::Coordinate::kTrace;
            const Variables x{"x"};
            const int dy = c.P.degree(1);
            r.leading = c.P.leading_coefficient_in(1).embed(x);
            r.content = content_in(c.P, 1).embed(x);
            r.discriminant = dy >= 1 ? discriminant(c.P, 1).embed(x) : RationalPoly(x, BigRational(1));
            return r;
          },
          [](const TorusComponentModel&) { return NongenericReport{}; },
          [](const APolynomial& ap) {
            // Leading and content data in m only; the l-discriminant of a
            // large external polynomial is not computed.
            NongenericReport r;
            r.coordinate = NongenericReport::Coordinate::kEigenvalue;
            const Variables m{"m"};
            const std::size_t l = ap.poly.variables().index_of("l");
            r.leading = ap.poly.leading_coefficient_in(l).embed(m);
            r.content = content_in(ap.poly, l).embed(m);
            r.discriminant = RationalPoly(m, BigRational(1));
            return r;
          },
      },
      curve);
}

SliceResult slice_count(const CurveModel& curve, const QuadNum& tau, const std::optional<AlexanderPoly>& delta) {
  check_tau_range(tau);
  return std::visit(Overloaded{
                        [&](const PlaneCurve& c) { return plane_slice(c, tau, delta); },
                        [&](const TorusComponentModel& t) { return torus_slice(t, tau, delta); },
                        [&](const APolynomial& a) { return external_slice(a, tau, delta); },
                    },
                    curve);
}

bool is_generic_tau(const CurveModel& curve, const std::optional<AlexanderPoly>& delta, const QuadNum& tau) {
  check_tau_range(tau);
  if (delta && excluded_tau_test(*delta, tau)) return false;
  if (const auto* ap = std::get_if<APolynomial>(&curve); ap && !delta && ap->alexander &&
                                                          excluded_tau_test(*ap->alexander, tau)) {
    return false;
  }
  return !nongeneric_tau_report(curve).hits(tau);
}

QuadNum first_generic_tau(const CurveModel& curve, const std::optional<AlexanderPoly>& delta) {
  for (long den = 2; den < 100; ++den) {
    for (long num = 1; num < den; ++num) {
      for (long sign : {1L, -1L}) {
        BigRational t(sign * num, den);
        t.canonicalize();
        const QuadNum tau(t);
        if (is_generic_tau(curve, delta, tau)) return tau;
      }
    }
  }
  raise(ErrorCode::kInvalidArgument, "no generic rational tau found");
}

}  // namespace knotchar
