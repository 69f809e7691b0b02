#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace quiddity {

/// Arbitrary precision signed integer used by the public API.
using BigInt = boost::multiprecision::cpp_int;

/// A single word entry. Entries are positive and small in every workload
/// this library targets; matrix entries are where growth happens.
using Entry = std::int64_t;

namespace checked {

inline bool add(std::int64_t x, std::int64_t y, std::int64_t& out) noexcept {
  return !__builtin_add_overflow(x, y, &out);
}

inline bool sub(std::int64_t x, std::int64_t y, std::int64_t& out) noexcept {
  return !__builtin_sub_overflow(x, y, &out);
}

inline bool mul(std::int64_t x, std::int64_t y, std::int64_t& out) noexcept {
  return !__builtin_mul_overflow(x, y, &out);
}

}  // namespace checked

/// Narrow a big integer to int64 when it fits.
inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace quiddity
