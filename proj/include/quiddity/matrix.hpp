#pragma once

#include "quiddity/error.hpp"
#include "quiddity/integer.hpp"
#include "quiddity/word.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace quiddity {

/// 2x2 matrix [[a, b], [c, d]] over an exact integer type.
template <class Int>
struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {Int{1}, Int{0}, Int{0}, Int{1}}; }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }

  /// Inverse of a determinant-1 matrix.
  Mat2 unimodular_inverse() const { return {d, -b, -c, a}; }

  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

using Matrix = Mat2<BigInt>;
using FastMatrix = Mat2<std::int64_t>;

template <class To, class From>
Mat2<To> matrix_cast(const Mat2<From>& m) {
  return {To(m.a), To(m.b), To(m.c), To(m.d)};
}

/// [[a, -1], [1, 0]].
template <class Int = BigInt>
Mat2<Int> elementary(const Int& a) {
  return {a, Int{-1}, Int{1}, Int{0}};
}

/// The generators S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].
template <class Int = BigInt>
Mat2<Int> generator_s() { return {Int{0}, Int{-1}, Int{1}, Int{0}}; }

template <class Int = BigInt>
Mat2<Int> generator_t() { return {Int{1}, Int{1}, Int{0}, Int{1}}; }

/// Left-multiply `m` by elementary(a) with overflow detection.
std::optional<FastMatrix> checked_step(const FastMatrix& m, std::int64_t a) noexcept;

/// elementary(a_n) * ... * elementary(a_1) in int64, or nullopt on overflow.
std::optional<FastMatrix> checked_word_product(std::span<const Entry> w) noexcept;

/// elementary(a_n) * ... * elementary(a_1). The last entry is the leftmost
/// factor. Throws DomainError on an empty sequence.
Matrix word_product(std::span<const Entry> w);
inline Matrix word_product(const Word& w) { return word_product(w.entries()); }

/// elementary(a_1) * ... * elementary(a_n): the same letters read left to
/// right, as used for group elements. Equals word_product(w.reversed()).
Matrix word_product_left_to_right(std::span<const Entry> w);
inline Matrix word_product_left_to_right(const Word& w) {
  return word_product_left_to_right(w.entries());
}

/// Trace of word_product(w). Cyclically invariant.
BigInt rotundus(const Word& w);

/// Tridiagonal determinant with diagonal xs and off-diagonal 1:
/// K_i = x_i K_{i-1} - K_{i-2}, K_0 = 1, K_{-1} = 0.
template <class Int = BigInt>
Int continuant(std::span<const Entry> xs) {
  Int prev{0}, cur{1};
  for (Entry x : xs) {
    Int next = Int(x) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// word_product assembled from four continuants. Requires n >= 2.
Matrix product_from_continuants(const Word& w);

enum class MatrixClass { Identity, NegIdentity, TraceZero, Other };

/// Precedence Identity > NegIdentity > TraceZero > Other.
/// Throws DomainError when det(m) != 1.
MatrixClass classify_matrix(const Matrix& m);

std::string to_string(MatrixClass c);

template <class Int>
std::ostream& operator<<(std::ostream& os, const Mat2<Int>& m) {
  return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

}  // namespace quiddity
