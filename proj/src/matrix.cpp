#include "quiddity/matrix.hpp"

namespace quiddity {

std::optional<FastMatrix> checked_step(const FastMatrix& m, std::int64_t a) noexcept {
  // [[a,-1],[1,0]] * [[p,q],[r,s]] = [[a p - r, a q - s], [p, q]]
  FastMatrix out;
  std::int64_t t = 0;
  if (!checked::mul(a, m.a, t) || !checked::sub(t, m.c, out.a)) return std::nullopt;
  if (!checked::mul(a, m.b, t) || !checked::sub(t, m.d, out.b)) return std::nullopt;
  out.c = m.a;
  out.d = m.b;
  return out;
}

std::optional<FastMatrix> checked_word_product(std::span<const Entry> w) noexcept {
  FastMatrix m = FastMatrix::identity();
  for (Entry a : w) {
    auto next = checked_step(m, a);
    if (!next) return std::nullopt;
    m = *next;
  }
  return m;
}

Matrix word_product(std::span<const Entry> w) {
  if (w.empty()) {
    throw DomainError("word_product of an empty word is undefined");
  }
  if (auto fast = checked_word_product(w)) {
    return matrix_cast<BigInt>(*fast);
  }
  Matrix m = Matrix::identity();
  for (Entry a : w) {
    m = elementary<BigInt>(BigInt(a)) * m;
  }
  return m;
}

Matrix word_product_left_to_right(std::span<const Entry> w) {
  if (w.empty()) {
    throw DomainError("word_product of an empty word is undefined");
  }
  std::vector<Entry> rev(w.rbegin(), w.rend());
  return word_product(rev);
}

BigInt rotundus(const Word& w) { return word_product(w).trace(); }

Matrix product_from_continuants(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2) {
    throw DomainError("product_from_continuants needs a word of length >= 2");
  }
  auto e = w.entries();
  return {continuant(e), -continuant(e.subspan(1)),
          continuant(e.first(n - 1)), -continuant(e.subspan(1, n - 2))};
}

MatrixClass classify_matrix(const Matrix& m) {
  if (m.det() != 1) {
    throw DomainError("classify_matrix: determinant is not 1");
  }
  if (m == Matrix::identity()) return MatrixClass::Identity;
  if (m == -Matrix::identity()) return MatrixClass::NegIdentity;
  if (m.trace() == 0) return MatrixClass::TraceZero;
  return MatrixClass::Other;
}

std::string to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::Identity: return "Identity";
    case MatrixClass::NegIdentity: return "NegIdentity";
    case MatrixClass::TraceZero: return "TraceZero";
    case MatrixClass::Other: return "Other";
  }
  return "?";
}

}  // namespace quiddity
