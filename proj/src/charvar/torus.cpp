#include "knotchar/charvar/torus.hpp"

#include "knotchar/exactalg/chebyshev.hpp"

namespace knotchar {

TorusComponentModel torus_components(const TorusSpec& spec) {
  TorusComponentModel model{spec, {}, {}};
  for (int i = 1; i < spec.p(); ++i) {
    for (int j = 1; j < spec.q(); ++j) {
      if ((i - j) % 2 == 0) model.components.emplace_back(i, j);
    }
  }
  const Variables ctx{"x1", "x2", "x3"};
  const RationalPoly x1 = RationalPoly::variable(ctx, "x1");
  const RationalPoly x2 = RationalPoly::variable(ctx, "x2");
  const RationalPoly x3 = RationalPoly::variable(ctx, "x3");
  // U^n = S_{n-1}(tr U) U - S_{n-2}(tr U) I
  const RationalPoly sa1 = chebyshev_s_any(spec.a() - 1, ctx, 0);
  const RationalPoly sa2 = chebyshev_s_any(spec.a() - 2, ctx, 0);
  const RationalPoly sb1 = chebyshev_s_any(spec.b() - 1, ctx, 1);
  const RationalPoly sb2 = chebyshev_s_any(spec.b() - 2, ctx, 1);
  model.meridian_trace = sa1 * sb1 * x3 - sa1 * sb2 * x1 - sa2 * sb1 * x2 + RationalPoly(ctx, BigRational(2)) * sa2 * sb2;
  return model;
}

}  // namespace knotchar
