#pragma once

#include "quiddity/integer.hpp"
#include "quiddity/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace quiddity {

/// Rows of cyclic continuants: entry(r, i) = K_r(a_i, ..., a_{i+r-1}).
/// Each row is stored over one period of the word.
struct Frieze {
  Word word;
  std::vector<std::vector<BigInt>> rows;

  std::size_t row_count() const noexcept { return rows.size(); }
  /// Cyclic in i. Rows -1 and row_count() read as zero.
  BigInt entry(std::ptrdiff_t r, std::ptrdiff_t i) const;
};

/// Frieze of a Problem II or III solution. The default row count is n - 1
/// for Problem II (last row all ones) and 2n - 1 for Problem III.
/// Throws NotASolutionError for non-solutions and DomainError for
/// Problem I words.
Frieze frieze(const Word& w, std::optional<std::size_t> row_count = std::nullopt);

/// e(r,i) e(r,i+1) - e(r+1,i) e(r-1,i+1) = 1 for every stored row r.
bool check_diamond(const Frieze& f);

/// Every 3x3 diamond has zero determinant. Needs at least 3 rows.
bool check_tame(const Frieze& f);

/// e(r, i) = e(R - r, i + r + 1) with R the last row index.
bool check_glide(const Frieze& f);

/// Staggered grid: odd rows flush, even rows shifted half a column.
/// `first_column` picks the word index shown first in row 1; `columns`
/// defaults to one period of the full frieze (2n for Problem III).
std::string render_text(const Frieze& f, std::ptrdiff_t first_column = 0, std::size_t columns = 0);

/// {"word": [...], "rows": [[...], ...]}
std::string to_json(const Frieze& f);

}  // namespace quiddity
