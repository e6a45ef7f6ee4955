#include "knotchar/exactalg/chebyshev.hpp"

namespace knotchar {

RationalPoly chebyshev_s_any(int k, const Variables& ctx, std::size_t var) {
  if (k < -1) return -chebyshev_s_any(-k - 2, ctx, var);
  if (k == -1) return RationalPoly(ctx);
  const RationalPoly x = RationalPoly::variable(ctx, ctx.name(var));
  RationalPoly prev(ctx);
  RationalPoly cur(ctx, BigRational(1));
  for (int i = 0; i < k; ++i) {
    RationalPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPoly chebyshev_s(int k, const std::string& var) {
  if (k < -1) raise(ErrorCode::kInvalidArgument, "chebyshev_s needs k >= -1, got " + std::to_string(k));
  const Variables ctx{var};
  return chebyshev_s_any(k, ctx, 0);
}

}  // namespace knotchar
