#pragma once

#include "quiddity/integer.hpp"
#include "quiddity/word.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quiddity {

/// Values of V_{i+1} = a_i V_i - V_{i-1} with the word read periodically,
/// a_1 = word[0].
struct SLSequence {
  Word coefficients;
  std::vector<BigInt> values;  // V_0 .. V_steps
};

SLSequence iterate(const Word& w, const BigInt& v0, const BigInt& v1, std::size_t steps);

/// Points (X_i, Y_i) of the sequences started at (1,0) and (0,1).
struct BrokenLine {
  std::vector<std::pair<BigInt, BigInt>> points;
};

BrokenLine broken_line(const Word& w, std::size_t steps);

/// The common value of X_{i+1} Y_i - X_i Y_{i+1}. Throws DomainError for
/// fewer than two points and InternalError if the value is not constant.
BigInt wronskian(const BrokenLine& line);

/// An exact multiple of 1/2.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(std::int64_t twice) { return HalfInteger(twice); }

  constexpr std::int64_t twice_value() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  /// "1", "3/2", "-1/2".
  std::string to_string() const;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ + b.twice_);
  }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// Winding of the broken line over one period, counted from the zeros and
/// sign changes of the (0,1) sequence. Problem III words are measured on
/// their double. Throws NotASolutionError otherwise.
HalfInteger rotation_index(const Word& w);

/// Every cyclic continuant K_{j+1}(a_i..a_{i+j}), j <= n-3, is positive.
/// Problem III words are tested through their double.
bool is_totally_positive(const Word& w);

/// Quiddity of the triangulated polygon on the Farey fractions of order N:
/// each vertex counts its unimodular partners minus one. Needs N >= 2.
Word farey_quiddity(std::size_t order);

}  // namespace quiddity
