#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotchar/error.hpp"
#include "knotchar/exactalg/quadnum.hpp"
#include "knotchar/exactalg/rational.hpp"

namespace knotchar {

inline constexpr std::size_t kMaxVariables = 6;

struct Monomial {
  std::array<std::uint32_t, kMaxVariables> exps{};

  std::uint32_t degree() const {
    return std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
  }
  std::uint32_t operator[](std::size_t i) const { return exps[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps[i]; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps[i] > other.exps[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) a.exps[i] += b.exps[i];
    return a;
  }
  /// Requires divisor.divides(a).
  friend Monomial operator/(Monomial a, const Monomial& divisor) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) a.exps[i] -= divisor.exps[i];
    return a;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order over the declared variable order; "greater"
/// means earlier in canonical (leading-term-first) order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
  }
};

/// Ordered variable names shared by polynomials of one computation. An empty
/// list is the context of pure constants, which promote into any context.
class Variables {
 public:
  Variables() = default;
  Variables(std::initializer_list<std::string> names)
      : Variables(std::vector<std::string>(names)) {}
  explicit Variables(std::vector<std::string> names) {
    if (names.size() > kMaxVariables) {
      raise(ErrorCode::kTooManyVariables, "at most " + std::to_string(kMaxVariables) + " variables");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) raise(ErrorCode::kInvalidArgument, "duplicate variable " + names[i]);
      }
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  std::size_t size() const { return names_ ? names_->size() : 0; }
  bool empty() const { return size() == 0; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const {
    static const std::vector<std::string> kNone;
    return names_ ? *names_ : kNone;
  }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if ((*names_)[i] == name) return i;
    }
    return std::nullopt;
  }
  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    raise(ErrorCode::kUnknownVariable, "unknown variable '" + std::string(name) + "'");
  }

  friend bool operator==(const Variables& a, const Variables& b) {
    if (a.names_ == b.names_) return true;
    return a.names() == b.names();
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline Variables common_context(const Variables& a, const Variables& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  std::string lhs;
  std::string rhs;
  for (const auto& n : a.names()) lhs += n + " ";
  for (const auto& n : b.names()) rhs += n + " ";
  raise(ErrorCode::kVariableMismatch, "variable contexts differ: (" + lhs + ") vs (" + rhs + ")");
}

namespace detail {

inline bool coeff_is_negative(const BigRational& c) { return sgn(c) < 0; }
inline bool coeff_is_negative(const QuadNum& c) {
  if (c.is_rational()) return sgn(c.rational_part()) < 0;
  return sgn(c.rational_part()) == 0 && sgn(c.radical_part()) < 0;
}
inline bool coeff_is_compound(const BigRational&) { return false; }
inline bool coeff_is_compound(const QuadNum& c) {
  return !c.is_rational() && sgn(c.rational_part()) != 0;
}

}  // namespace detail

/// Sparse multivariate polynomial with exact coefficients in a field C
/// (BigRational or QuadNum). Terms are kept in graded-lex descending order
/// with no zero coefficients, so structural equality is value equality.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  struct Term {
    Monomial mono;
    C coeff;
  };

  Polynomial() = default;
  explicit Polynomial(Variables vars) : vars_(std::move(vars)) {}
  Polynomial(Variables vars, const C& constant) : vars_(std::move(vars)) {
    if (!knotchar::is_zero(constant)) terms_.push_back({Monomial{}, constant});
  }
  /// Constant in the empty context.
  static Polynomial constant(const C& c) { return Polynomial(Variables{}, c); }

  static Polynomial variable(const Variables& vars, std::string_view name, std::uint32_t power = 1) {
    Polynomial p(vars);
    Monomial m;
    m[vars.index_of(name)] = power;
    p.terms_.push_back({m, C(1)});
    return p;
  }

  static Polynomial monomial(const Variables& vars, const Monomial& m, const C& c) {
    Polynomial p(vars);
    if (!knotchar::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  /// Sorts and merges arbitrary terms; drops zero coefficients.
  static Polynomial from_terms(const Variables& vars, std::vector<Term> terms) {
    Polynomial p(vars);
    for (const auto& t : terms) {
      for (std::size_t i = vars.size(); i < kMaxVariables; ++i) {
        if (t.mono[i] != 0) raise(ErrorCode::kInvalidArgument, "exponent outside the variable context");
      }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GrlexGreater{}(a.mono, b.mono); });
    p.terms_ = combine_sorted(std::move(terms));
    return p;
  }

  /// Converting constructor, e.g. rational to quadratic coefficients.
  template <class D>
  explicit Polynomial(const Polynomial<D>& other) : vars_(other.variables()) {
    terms_.reserve(other.terms().size());
    for (const auto& t : other.terms()) terms_.push_back({t.mono, C(t.coeff)});
  }

  const Variables& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }
  C constant_value() const {
    if (terms_.empty()) return C(0);
    if (!is_constant()) raise(ErrorCode::kInvalidArgument, "polynomial is not constant");
    return terms_[0].coeff;
  }

  const C& leading_coefficient() const { return terms_.front().coeff; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  /// Coefficient of an exact monomial (zero when absent).
  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return GrlexGreater{}(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return C(0);
  }

  /// -1 for the zero polynomial.
  int degree(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
  }
  int degree(std::string_view var) const { return degree(vars_.index_of(var)); }
  int min_degree(std::size_t var) const {
    if (terms_.empty()) return -1;
    int d = static_cast<int>(terms_.front().mono[var]);
    for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono[var]));
    return d;
  }
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

  bool depends_on(std::size_t var) const { return degree(var) > 0; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const C& c) {
    if (knotchar::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
  }
  Polynomial& operator/=(const C& c) {
    if (knotchar::is_zero(c)) raise(ErrorCode::kInvalidArgument, "division by zero scalar");
    const C inv = C(1) / c;
    for (auto& t : terms_) t.coeff *= inv;
    return *this;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const C& c) { return a *= c; }
  friend Polynomial operator*(const C& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const C& c) { return a /= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(common_context(a.vars_, b.vars_));
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff, r.vars_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff, r.vars_);
    std::map<Monomial, C, GrlexGreater> acc;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        const Monomial m = ta.mono * tb.mono;
        auto [it, inserted] = acc.try_emplace(m, ta.coeff);
        if (inserted) {
          it->second *= tb.coeff;
        } else {
          it->second += ta.coeff * tb.coeff;
        }
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!knotchar::is_zero(c)) r.terms_.push_back({m, std::move(c)});
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !a.is_constant() && !(a.vars_ == b.vars_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned n) const {
    Polynomial result(vars_, C(1));
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  Polynomial mul_term(const Monomial& m, const C& c) const { return mul_term(m, c, vars_); }

  /// Partial derivative.
  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.mono[var] == 0) continue;
      Monomial m = t.mono;
      const auto e = m[var];
      m[var] -= 1;
      out.push_back({m, t.coeff * C(static_cast<long>(e))});
    }
    return from_terms(vars_, std::move(out));
  }

  /// Coefficients of var^0 .. var^deg; each coefficient keeps the context but not var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const {
    const int d = degree(var);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d + 1, 0)));
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      const auto e = m[var];
      m[var] = 0;
      buckets[e].push_back({m, t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      // Removing one exponent from a grlex-sorted list can break the order.
      out.push_back(from_terms(vars_, std::move(b)));
    }
    return out;
  }

  static Polynomial from_coefficients(const Variables& vars, std::size_t var,
                                      const std::vector<Polynomial>& coeffs) {
    std::vector<Term> out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      for (const auto& t : coeffs[k].terms_) {
        Monomial m = t.mono;
        m[var] += static_cast<std::uint32_t>(k);
        out.push_back({m, t.coeff});
      }
    }
    return from_terms(vars, std::move(out));
  }

  /// Coefficient of var^k as a polynomial in the remaining variables.
  Polynomial coefficient_in(std::size_t var, unsigned k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.mono[var] != k) continue;
      Monomial m = t.mono;
      m[var] = 0;
      out.push_back({m, t.coeff});
    }
    return from_terms(vars_, std::move(out));
  }
  Polynomial leading_coefficient_in(std::size_t var) const {
    return coefficient_in(var, static_cast<unsigned>(std::max(degree(var), 0)));
  }

  /// Replace var by a scalar; var drops out of the support.
  Polynomial substitute(std::size_t var, const C& value) const {
    std::vector<C> powers{C(1)};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      const auto e = t.mono[var];
      while (powers.size() <= e) powers.push_back(powers.back() * value);
      Monomial m = t.mono;
      m[var] = 0;
      out.push_back({m, t.coeff * powers[e]});
    }
    return from_terms(vars_, std::move(out));
  }

  /// Replace var by a polynomial of the same context (or a constant).
  Polynomial substitute(std::size_t var, const Polynomial& value) const {
    const auto coeffs = coefficients_in(var);
    Polynomial result(vars_);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      result = result * value + coeffs[k];
    }
    if (result.vars_.empty()) result.vars_ = vars_;
    return result;
  }

  /// Full evaluation; values indexed by variable position.
  C evaluate(const std::vector<C>& values) const {
    C acc(0);
    for (const auto& t : terms_) {
      C term = t.coeff;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::uint32_t k = 0; k < t.mono[i]; ++k) term *= values[i];
      }
      acc += term;
    }
    return acc;
  }

  /// Re-express in another context, matching variables by name. Variables
  /// that occur in the support must exist in the target.
  Polynomial embed(const Variables& target) const {
    std::array<std::optional<std::size_t>, kMaxVariables> map{};
    for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.find(vars_.name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!map[i]) {
          raise(ErrorCode::kVariableMismatch, "variable '" + vars_.name(i) + "' missing from target context");
        }
        m[*map[i]] = t.mono[i];
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(target, std::move(out));
  }

  /// Same exponents, new names (positionally).
  Polynomial rename(const Variables& names) const {
    if (names.size() != vars_.size()) raise(ErrorCode::kVariableMismatch, "rename needs the same arity");
    Polynomial p = *this;
    p.vars_ = names;
    return p;
  }

  /// Canonical text: graded-lex order, "c*v1^e1*v2^e2", unit exponents and
  /// unit coefficients omitted, terms joined by " + " / " - ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      const bool neg = detail::coeff_is_negative(t.coeff);
      const C mag = neg ? C(-t.coeff) : t.coeff;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_.name(i);
        if (t.mono[i] != 1) mono += "^" + std::to_string(t.mono[i]);
      }
      if (mono.empty()) {
        out += detail::coeff_is_compound(mag) ? "(" + knotchar::to_string(mag) + ")" : knotchar::to_string(mag);
      } else if (knotchar::is_one(mag)) {
        out += mono;
      } else {
        std::string cs = knotchar::to_string(mag);
        if (detail::coeff_is_compound(mag)) cs = "(" + cs + ")";
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  Polynomial mul_term(const Monomial& m, const C& c, const Variables& ctx) const {
    Polynomial r(ctx);
    if (knotchar::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  static std::vector<Term> combine_sorted(std::vector<Term> terms) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
        if (knotchar::is_zero(out.back().coeff)) out.pop_back();
      } else if (!knotchar::is_zero(t.coeff)) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r(common_context(a.vars_, b.vars_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    GrlexGreater greater;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? C(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        C c = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!knotchar::is_zero(c)) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Variables vars_;
  std::vector<Term> terms_;
};

using RationalPoly = Polynomial<BigRational>;
using QuadPoly = Polynomial<QuadNum>;

/// Multivariate division by leading terms; returns (quotient, remainder).
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> divide(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (b.is_zero()) raise(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  const Variables ctx = common_context(a.variables(), b.variables());
  using Term = typename Polynomial<C>::Term;
  if (b.is_constant()) return {a / b.constant_value(), Polynomial<C>(ctx)};
  std::map<Monomial, C, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  const Monomial lm = b.leading_monomial();
  const C lc_inv = C(1) / b.leading_coefficient();
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lm.divides(it->first)) {
      remainder.push_back({it->first, it->second});
      rem.erase(it);
      continue;
    }
    const Monomial qm = it->first / lm;
    const C qc = it->second * lc_inv;
    quotient.push_back({qm, qc});
    rem.erase(it);
    for (std::size_t k = 1; k < b.terms().size(); ++k) {
      const auto& bt = b.terms()[k];
      const Monomial m = bt.mono * qm;
      auto [pos, inserted] = rem.try_emplace(m, C(0));
      pos->second -= qc * bt.coeff;
      if (is_zero(pos->second)) rem.erase(pos);
    }
  }
  return {Polynomial<C>::from_terms(ctx, std::move(quotient)), Polynomial<C>::from_terms(ctx, std::move(remainder))};
}

/// a / b when b divides a; raises NOT_EXACT otherwise.
template <class C>
Polynomial<C> divide_exact(const Polynomial<C>& a, const Polynomial<C>& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) raise(ErrorCode::kNotExact, "inexact division");
  return q;
}

template <class C>
bool divides(const Polynomial<C>& b, const Polynomial<C>& a) {
  return divide(a, b).second.is_zero();
}

/// Scale so that the graded-lex leading coefficient is 1.
template <class C>
Polynomial<C> make_monic(const Polynomial<C>& p) {
  if (p.is_zero()) return p;
  return p / p.leading_coefficient();
}

/// For rational polynomials: integer coefficients with gcd 1 and a positive
/// graded-lex leading coefficient.
RationalPoly integer_primitive(const RationalPoly& p);

/// Integer-primitive but keeping the sign of the input.
RationalPoly integer_primitive_keep_sign(const RationalPoly& p);

}  // namespace knotchar
