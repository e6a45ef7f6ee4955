#pragma once

#include <array>

namespace knotchar {

/// Dense 2x2 matrix over any commutative ring R. Row-major.
template <class R>
struct Mat2 {
  std::array<R, 4> e;

  Mat2() = default;
  Mat2(R a, R b, R c, R d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 identity(const R& one, const R& zero) { return Mat2(one, zero, zero, one); }

  const R& operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  R& operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }

  R trace() const { return e[0] + e[3]; }
  R det() const { return e[0] * e[3] - e[1] * e[2]; }
  /// Equals the inverse when det = 1.
  Mat2 adjugate() const { return Mat2(e[3], -e[1], -e[2], e[0]); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2(x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]);
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return Mat2(x.e[0] - y.e[0], x.e[1] - y.e[1], x.e[2] - y.e[2], x.e[3] - y.e[3]);
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return Mat2(x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]);
  }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.e == y.e; }
};

}  // namespace knotchar
