#pragma once

// Univariate-in-one-variable algorithms over polynomial coefficient rings:
// pseudo-division, subresultant resultants, recursive gcd, Yun squarefree
// decomposition, discriminants.

#include <optional>
#include <utility>
#include <vector>

#include "knotchar/exactalg/polynomial.hpp"

namespace knotchar {

template <class C>
struct SquarefreeDecomposition {
  struct Part {
    Polynomial<C> factor;
    unsigned multiplicity;
  };
  std::vector<Part> parts;

  /// Sum of deg(factor) * multiplicity.
  int degree(std::size_t var) const {
    int d = 0;
    for (const auto& p : parts) d += p.factor.degree(var) * static_cast<int>(p.multiplicity);
    return d;
  }
};

namespace detail {

template <class C>
using Dense = std::vector<Polynomial<C>>;

template <class C>
void trim(Dense<C>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class C>
int deg(const Dense<C>& a) {
  return static_cast<int>(a.size()) - 1;
}

/// lc(b)^(deg a - deg b + 1) * a = q*b + r, returns r (dense form).
template <class C>
Dense<C> pseudo_remainder_dense(Dense<C> a, const Dense<C>& b) {
  trim(a);
  const int db = deg(b);
  if (db < 0) raise(ErrorCode::kInvalidArgument, "pseudo-division by zero");
  int steps = deg(a) - db + 1;
  if (steps <= 0) return a;
  const Polynomial<C>& lb = b.back();
  while (deg(a) >= db) {
    const Polynomial<C> la = a.back();
    const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k + 1 < b.size(); ++k) a[k + shift] = a[k + shift] - la * b[k];
    a.pop_back();
    trim(a);
    --steps;
  }
  if (steps > 0) {
    const Polynomial<C> f = lb.pow(static_cast<unsigned>(steps));
    for (auto& c : a) c = c * f;
  }
  return a;
}

}  // namespace detail

/// Dense coefficient list in var (ascending), trailing zeros trimmed.
template <class C>
std::vector<Polynomial<C>> dense_in(const Polynomial<C>& p, std::size_t var) {
  auto d = p.coefficients_in(var);
  detail::trim(d);
  return d;
}

template <class C>
Polynomial<C> pseudo_remainder(const Polynomial<C>& a, const Polynomial<C>& b, std::size_t var) {
  const Variables ctx = common_context(a.variables(), b.variables());
  return Polynomial<C>::from_coefficients(ctx, var, detail::pseudo_remainder_dense(dense_in(a, var), dense_in(b, var)));
}

/// Resultant with respect to var by the subresultant polynomial remainder
/// sequence; coefficient divisions are exact in the polynomial ring.
/// A factor of degree 0 in var, g, gives g^(deg f).
template <class C>
Polynomial<C> resultant(const Polynomial<C>& f, const Polynomial<C>& g, std::size_t var) {
  using P = Polynomial<C>;
  const Variables ctx = common_context(f.variables(), g.variables());
  if (f.is_zero() || g.is_zero()) return P(ctx);
  auto a = dense_in(f, var);
  auto b = dense_in(g, var);
  int da = detail::deg(a);
  int db = detail::deg(b);
  if (db == 0) return b[0].pow(static_cast<unsigned>(da)).embed(ctx);
  if (da == 0) return a[0].pow(static_cast<unsigned>(db)).embed(ctx);
  C sign(1);
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
  }
  P g_acc(ctx, C(1));
  P h_acc(ctx, C(1));
  while (true) {
    const int delta = detail::deg(a) - detail::deg(b);
    if ((detail::deg(a) % 2 == 1) && (detail::deg(b) % 2 == 1)) sign = -sign;
    auto r = detail::pseudo_remainder_dense(a, b);
    if (r.empty()) return P(ctx);
    a = std::move(b);
    const P divisor = g_acc * h_acc.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = divide_exact(c, divisor);
    b = std::move(r);
    g_acc = a.back();
    if (delta == 0) {
      // h stays as is
    } else {
      h_acc = divide_exact(g_acc.pow(static_cast<unsigned>(delta)), h_acc.pow(static_cast<unsigned>(delta - 1)));
    }
    if (detail::deg(b) == 0) {
      const int n = detail::deg(a);
      P res = n == 0 ? P(ctx, C(1))
                     : divide_exact(b.back().pow(static_cast<unsigned>(n)), h_acc.pow(static_cast<unsigned>(n - 1)));
      return res * sign;
    }
  }
}

/// Sylvester-matrix determinant by fraction-free (Bareiss) elimination.
/// Independent route used to cross-check the subresultant PRS.
template <class C>
Polynomial<C> sylvester_resultant(const Polynomial<C>& f, const Polynomial<C>& g, std::size_t var) {
  using P = Polynomial<C>;
  const Variables ctx = common_context(f.variables(), g.variables());
  auto a = dense_in(f, var);
  auto b = dense_in(g, var);
  const int m = detail::deg(a);
  const int n = detail::deg(b);
  if (m < 0 || n < 0) return P(ctx);
  if (n == 0) return b[0].pow(static_cast<unsigned>(m)).embed(ctx);
  if (m == 0) return a[0].pow(static_cast<unsigned>(n)).embed(ctx);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<P>> mat(size, std::vector<P>(size, P(ctx)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) mat[i][i + (m - k)] = a[k];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) mat[n + i][i + (n - k)] = b[k];
  }
  C sign(1);
  P prev(ctx, C(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && mat[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return P(ctx);
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mat[i][j] = divide_exact(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j], prev);
      }
      mat[i][k] = P(ctx);
    }
    prev = mat[k][k];
  }
  return mat[size - 1][size - 1] * sign;
}

/// Index of the highest-position variable occurring in p or q, if any.
template <class C>
std::optional<std::size_t> main_variable(const Polynomial<C>& p, const Polynomial<C>& q) {
  const std::size_t n = std::max(p.variables().size(), q.variables().size());
  for (std::size_t i = n; i-- > 0;) {
    if ((i < p.variables().size() && p.depends_on(i)) || (i < q.variables().size() && q.depends_on(i))) return i;
  }
  return std::nullopt;
}

template <class C>
Polynomial<C> gcd(const Polynomial<C>& f, const Polynomial<C>& g);

/// gcd of the coefficients of p viewed as a polynomial in var, made monic.
template <class C>
Polynomial<C> content_in(const Polynomial<C>& p, std::size_t var) {
  auto coeffs = dense_in(p, var);
  if (coeffs.empty()) return Polynomial<C>(p.variables());
  // Small coefficients first keeps the gcd fold cheap.
  std::sort(coeffs.begin(), coeffs.end(), [](const auto& x, const auto& y) {
    if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
    return x.size() < y.size();
  });
  Polynomial<C> c = Polynomial<C>(p.variables());
  for (const auto& k : coeffs) {
    if (k.is_zero()) continue;
    c = gcd(c, k);
    if (c.is_constant()) return Polynomial<C>(p.variables(), C(1));
  }
  return c;
}

template <class C>
Polynomial<C> primitive_part_in(const Polynomial<C>& p, std::size_t var) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, var));
}

/// Greatest common divisor in Q[v1..vn] (or Q(sqrt D)[..]): content and
/// primitive-part recursion on the last occurring variable with a primitive
/// PRS in that variable. Result is monic in graded-lex order.
template <class C>
Polynomial<C> gcd(const Polynomial<C>& f, const Polynomial<C>& g) {
  using P = Polynomial<C>;
  const Variables ctx = common_context(f.variables(), g.variables());
  if (f.is_zero()) return make_monic(g.embed(ctx));
  if (g.is_zero()) return make_monic(f.embed(ctx));
  const auto var = main_variable(f, g);
  if (!var) return P(ctx, C(1));
  const std::size_t v = *var;
  const P cf = content_in(f, v);
  const P cg = content_in(g, v);
  const P c = gcd(cf, cg);
  P a = divide_exact(f, cf);
  P b = divide_exact(g, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  if (b.degree(v) == 0) return make_monic(c);
  const bool univariate_field = [&] {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (i != v && (a.depends_on(i) || b.depends_on(i))) return false;
    }
    return true;
  }();
  while (!b.is_zero() && b.degree(v) > 0) {
    P r = univariate_field ? divide(a, b).second : pseudo_remainder(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = P(ctx);
    } else if (univariate_field) {
      b = make_monic(r);
    } else {
      b = primitive_part_in(r, v);
    }
  }
  if (!b.is_zero()) return make_monic(c);  // nonzero constant in v: coprime
  return make_monic(c * primitive_part_in(a, v));
}

template <class C>
bool is_univariate_in(const Polynomial<C>& p, std::size_t var) {
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (i != var && p.depends_on(i)) return false;
  }
  return true;
}

/// Monic gcd of two univariate polynomials over a field; gcd(f, 0) = monic(f).
template <class C>
Polynomial<C> gcd_univariate(const Polynomial<C>& f, const Polynomial<C>& g, std::size_t var) {
  if (!is_univariate_in(f, var) || !is_univariate_in(g, var)) {
    raise(ErrorCode::kNotUnivariate, "gcd_univariate expects polynomials in a single variable");
  }
  Polynomial<C> a = f;
  Polynomial<C> b = g;
  while (!b.is_zero()) {
    Polynomial<C> r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Yun's algorithm in characteristic zero. Factors are monic, pairwise
/// coprime, squarefree; their product with multiplicities recovers f up to
/// the leading coefficient.
template <class C>
SquarefreeDecomposition<C> squarefree_decompose(const Polynomial<C>& f, std::size_t var) {
  if (f.is_zero()) raise(ErrorCode::kZeroPolynomial, "squarefree decomposition of 0");
  if (!is_univariate_in(f, var)) raise(ErrorCode::kNotUnivariate, "squarefree_decompose expects a univariate polynomial");
  SquarefreeDecomposition<C> out;
  if (f.degree(var) == 0) return out;
  const Polynomial<C> df = f.derivative(var);
  const Polynomial<C> c = gcd_univariate(f, df, var);
  Polynomial<C> w = divide_exact(f, c);
  Polynomial<C> y = divide_exact(df, c);
  Polynomial<C> z = y - w.derivative(var);
  unsigned i = 1;
  while (w.degree(var) > 0) {
    const Polynomial<C> g = gcd_univariate(w, z, var);
    if (g.degree(var) > 0) out.parts.push_back({make_monic(g), i});
    w = divide_exact(w, g);
    y = divide_exact(z, g);
    z = y - w.derivative(var);
    ++i;
  }
  return out;
}

/// Product of the distinct irreducible factors involving var (up to a unit).
/// Works for multivariate input by gcd with the derivative in var.
template <class C>
Polynomial<C> squarefree_part_in(const Polynomial<C>& f, std::size_t var) {
  if (f.degree(var) <= 0) return f;
  const Polynomial<C> g = gcd(f, f.derivative(var));
  return divide_exact(f, g);
}

/// (-1)^(n(n-1)/2) * Res(f, df/dvar) / lc(f), n = deg_var f.
template <class C>
Polynomial<C> discriminant(const Polynomial<C>& f, std::size_t var) {
  const int n = f.degree(var);
  if (n < 1) raise(ErrorCode::kDegreeTooLow, "discriminant needs positive degree");
  Polynomial<C> r = divide_exact(resultant(f, f.derivative(var), var), f.leading_coefficient_in(var));
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace knotchar
