#pragma once

#include "quiddity/budget.hpp"
#include "quiddity/dissection.hpp"
#include "quiddity/matrix.hpp"
#include "quiddity/sturm.hpp"
#include "quiddity/word.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace quiddity {

/// A determinant-1 integer matrix taken up to sign.
class GroupElement {
 public:
  /// Throws DomainError unless det(m) == 1.
  explicit GroupElement(Matrix m);

  const Matrix& representative() const noexcept { return m_; }
  /// The representative with (c, d) lexicographically positive.
  Matrix canonical() const;
  GroupElement inverse() const { return GroupElement(m_.unimodular_inverse()); }

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.m_ == y.m_ || x.m_ == -y.m_;
  }
  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.m_ * y.m_);
  }

 private:
  Matrix m_;
};

/// Apply (a,1,b) -> (a-1,b-1) for a, b > 1 and (a,1,1,b) -> (a+b-1) until
/// none is left. word_product_left_to_right changes at most by sign.
Word normalize(const Word& w);

/// The reduced word whose left-to-right product is +-A.
Word reduced_decomposition(const GroupElement& a);

/// Reduced words of A and A^{-1}, concatenated in that order.
struct ElementQuiddity {
  Word left;
  Word right;
  Word combined;
  bool sign_defect = false;  // product of `combined` is -Id
};

ElementQuiddity element_quiddity(const GroupElement& a);
Dissection element_dissection(const GroupElement& a);
HalfInteger element_index(const GroupElement& a);

struct ProductCollision {
  Matrix element;  // canonical sign
  Word first;
  Word second;
};

/// Distinct words with the same left-to-right product up to sign.
std::vector<ProductCollision> find_product_collisions(const std::vector<Word>& words);
std::string describe(const ProductCollision& c);

/// Reduced words of length <= max_length with entries <= max_entry.
std::vector<Word> reduced_words(std::size_t max_length, Entry max_entry);

/// True iff no two reduced words (length <= max_length, entries <=
/// max_entry) share a product up to sign. Throws BudgetExceeded for
/// max_length > 10 or too many words.
bool uniqueness_spot_check(std::size_t max_length, Entry max_entry = 6, const Budget& budget = {});

struct ProbeRecord {
  Matrix element;  // canonical sign
  Word reduced;
  Word quiddity;
  std::int64_t index_twice = 0;
  std::size_t dissections_found = 0;
};

/// Every element whose quiddity has length <= bound, ordered by that
/// length and then lexicographically, with the number of 3d-dissections
/// carrying its quiddity.
std::vector<ProbeRecord> conjecture_probe(std::size_t bound, const Budget& budget = {});

std::string to_json(const ProbeRecord& r);

}  // namespace quiddity
