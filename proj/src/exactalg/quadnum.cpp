#include "knotchar/exactalg/quadnum.hpp"

#include <cctype>

#include "knotchar/error.hpp"

namespace knotchar {

BigRational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto skip_sign = [&] {
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  };
  auto digits = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  skip_sign();
  const bool negative = pos > 0 && text[0] == '-';
  const std::size_t num_start = pos;
  if (!digits()) raise(ErrorCode::kParseError, "expected integer in '" + text + "'");
  BigInt num(text.substr(num_start, pos - num_start), 10);
  if (negative) num = -num;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_start = pos;
    if (!digits()) raise(ErrorCode::kParseError, "expected denominator in '" + text + "'");
    den = BigInt(text.substr(den_start, pos - den_start), 10);
    if (den == 0) raise(ErrorCode::kParseError, "zero denominator in '" + text + "'");
  }
  if (pos != text.size()) raise(ErrorCode::kParseError, "trailing characters in '" + text + "'");
  return make_rational(num, den);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (sgn(n) < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) *root = sqrt(n);
  return true;
}

void split_square(const BigInt& n, BigInt& square_root_part, BigInt& squarefree_part) {
  BigInt m = abs(n);
  square_root_part = 1;
  squarefree_part = sgn(n) < 0 ? -1 : 1;
  for (BigInt p = 2; p * p <= m && p < 1000000; ++p) {
    unsigned count = 0;
    while (m % p == 0) {
      m /= p;
      ++count;
    }
    for (unsigned k = 0; k + 1 < count; k += 2) square_root_part *= p;
    if (count % 2 == 1) squarefree_part *= p;
  }
  BigInt r;
  if (m > 1 && is_perfect_square(m, &r)) {
    square_root_part *= r;
  } else {
    squarefree_part *= m;
  }
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  long m = n < 0 ? -n : n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

QuadNum::QuadNum(const BigRational& a, const BigRational& b, long radicand)
    : a_(a), b_(b), radicand_(radicand) {
  if (radicand_ != 0 && (radicand_ == 1 || !is_squarefree(radicand_))) {
    raise(ErrorCode::kInvalidArgument,
          "radicand " + std::to_string(radicand_) + " is not a squarefree integer != 0, 1");
  }
  if (radicand_ == 0 && sgn(b_) != 0) {
    raise(ErrorCode::kInvalidArgument, "irrational part given without a radicand");
  }
}

long QuadNum::merged_radicand(const QuadNum& o) const {
  if (radicand_ == o.radicand_) return radicand_;
  if (radicand_ == 0) return o.radicand_;
  if (o.radicand_ == 0) return radicand_;
  if (is_rational()) return o.radicand_;
  if (o.is_rational()) return radicand_;
  raise(ErrorCode::kMixedFields, "cannot combine Q(sqrt(" + std::to_string(radicand_) +
                                     ")) with Q(sqrt(" + std::to_string(o.radicand_) + "))");
}

QuadNum QuadNum::conjugate() const {
  QuadNum r = *this;
  r.b_ = -b_;
  return r;
}

BigRational QuadNum::norm() const { return a_ * a_ - BigRational(radicand_) * b_ * b_; }

QuadNum QuadNum::inverse() const {
  if (is_zero()) raise(ErrorCode::kInvalidArgument, "inverse of zero");
  const BigRational n = norm();
  QuadNum r = *this;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  return r;
}

int QuadNum::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (radicand_ < 0) raise(ErrorCode::kInvalidArgument, "sign of a non-real quadratic number");
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const BigRational lhs = a_ * a_;
  const BigRational rhs = BigRational(radicand_) * b_ * b_;
  return lhs > rhs ? sa : sb;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  radicand_ = merged_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  radicand_ = merged_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  const long d = merged_radicand(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
  } else if (sgn(o.b_) == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
  } else {
    const BigRational a = a_ * o.a_ + BigRational(d) * b_ * o.b_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = a;
  }
  radicand_ = d;
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) raise(ErrorCode::kInvalidArgument, "division by zero");
    radicand_ = merged_radicand(o);
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

QuadNum operator-(const QuadNum& x) {
  QuadNum r = x;
  r.a_ = -x.a_;
  r.b_ = -x.b_;
  return r;
}

bool operator==(const QuadNum& x, const QuadNum& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return sgn(x.b_) == 0 || x.radicand_ == y.radicand_;
}

std::string QuadNum::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string rad;
  if (b_ == 1) {
    rad = "sqrt(" + std::to_string(radicand_) + ")";
  } else if (b_ == -1) {
    rad = "-sqrt(" + std::to_string(radicand_) + ")";
  } else {
    rad = b_.get_str() + "*sqrt(" + std::to_string(radicand_) + ")";
  }
  if (sgn(a_) == 0) return rad;
  if (sgn(b_) < 0) {
    return a_.get_str() + " - " + rad.substr(1);
  }
  return a_.get_str() + " + " + rad;
}

std::string QuadNum::to_tau_string() const {
  std::string s = to_fraction_string(a_);
  if (is_rational()) return s;
  const BigRational mag = abs(b_);
  s += sgn(b_) < 0 ? "-" : "+";
  s += to_fraction_string(mag) + "*sqrt(" + std::to_string(radicand_) + ")";
  return s;
}

}  // namespace knotchar
