#include "knotchar/exactalg/laurent.hpp"

#include <vector>

namespace knotchar {

std::map<int, BigRational> LaurentPoly::terms() const {
  std::map<int, BigRational> out;
  for (const auto& t : base.terms()) out[static_cast<int>(t.mono[0]) - shift] = t.coeff;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (shift == 0 || base.is_zero()) return base.to_string();
  if (shift < 0) {
    Monomial m;
    m[0] = static_cast<std::uint32_t>(-shift);
    return base.mul_term(m, BigRational(1)).to_string();
  }
  const std::string& v = base.variables().name(0);
  return "(" + base.to_string() + ")/" + v + (shift == 1 ? "" : "^" + std::to_string(shift));
}

LaurentPoly laurent_normalize(const std::map<int, BigRational>& terms, const std::string& var) {
  const Variables ctx{var};
  int low = 0;
  bool any = false;
  for (const auto& [e, c] : terms) {
    if (is_zero(c)) continue;
    low = any ? std::min(low, e) : e;
    any = true;
  }
  if (!any) return {RationalPoly(ctx), 0};
  std::vector<RationalPoly::Term> out;
  for (const auto& [e, c] : terms) {
    if (is_zero(c)) continue;
    Monomial m;
    m[0] = static_cast<std::uint32_t>(e - low);
    out.push_back({m, c});
  }
  return {RationalPoly::from_terms(ctx, std::move(out)), -low};
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
  auto ta = a.terms();
  for (const auto& [e, c] : b.terms()) ta[e] += c;
  const std::string var = a.base.variables().empty() ? b.base.variables().name(0) : a.base.variables().name(0);
  return laurent_normalize(ta, var);
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    const auto& ctx = a.base.variables().empty() ? b.base.variables() : a.base.variables();
    return {RationalPoly(ctx), 0};
  }
  return {a.base * b.base, a.shift + b.shift};
}

RationalPoly power_sum_in_trace(unsigned k, const Variables& ctx, std::size_t var) {
  const RationalPoly x = RationalPoly::variable(ctx, ctx.name(var));
  RationalPoly prev(ctx, BigRational(2));
  if (k == 0) return prev;
  RationalPoly cur = x;
  for (unsigned i = 1; i < k; ++i) {
    RationalPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPoly symmetric_rewrite(const LaurentPoly& p, const std::string& target_var) {
  const Variables ctx{target_var};
  if (p.is_zero()) return RationalPoly(ctx);
  auto terms = p.terms();
  for (const auto& [e, c] : terms) {
    auto it = terms.find(-e);
    if (it == terms.end() || it->second != c) {
      raise(ErrorCode::kNotSymmetric, "Laurent polynomial " + p.to_string() + " is not invariant under s -> 1/s");
    }
  }
  // Peel off the top symmetric power c*(s^k + s^-k) until only the constant remains.
  RationalPoly result(ctx);
  while (!terms.empty()) {
    auto top = std::prev(terms.end());
    const int k = top->first;
    const BigRational c = top->second;
    if (k == 0) {
      result += RationalPoly(ctx, c);
      break;
    }
    result += power_sum_in_trace(static_cast<unsigned>(k), ctx, 0) * c;
    terms.erase(top);
    terms.erase(terms.find(-k));
  }
  return result;
}

}  // namespace knotchar
