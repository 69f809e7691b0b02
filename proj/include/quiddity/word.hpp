#pragma once

#include "quiddity/integer.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quiddity {

/// A non-empty sequence of positive integers (a_1, ..., a_n), read
/// cyclically where the context calls for it.
class Word {
 public:
  /// Throws DomainError when `entries` is empty or has an entry < 1.
  explicit Word(std::vector<Entry> entries);
  Word(std::initializer_list<Entry> entries);

  /// Parse "1,2,3". Whitespace around entries is tolerated.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  Entry operator[](std::size_t i) const noexcept { return entries_[i]; }
  /// Cyclic access; `i` may be any integer.
  Entry at_cyclic(std::ptrdiff_t i) const noexcept;

  std::span<const Entry> entries() const noexcept { return entries_; }
  const std::vector<Entry>& vector() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Entry sum() const noexcept;
  Entry max() const noexcept;

  /// Left rotation: result[j] = (*this)[(j + k) mod n]. `k` may be negative.
  Word rotated(std::ptrdiff_t k) const;
  /// Lexicographically least rotation.
  Word canonical_rotation() const;
  /// Lexicographically least element of the dihedral orbit.
  Word canonical_dihedral() const;
  Word reversed() const;
  /// (a_1..a_n, a_1..a_n).
  Word doubled() const;
  /// True iff the word equals its rotation by `period` (period divides n).
  bool has_period(std::size_t period) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Entry> entries_;
};

Word concat(const Word& lhs, const Word& rhs);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace quiddity
