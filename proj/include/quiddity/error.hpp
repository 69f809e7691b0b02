#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <cstdint>

namespace quiddity {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad word, bad split,
/// determinant not 1, malformed certificate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Reduction got stuck: the word is not a solution of Problems I-III.
class NotASolutionError : public Error {
 public:
  NotASolutionError(const std::string& what, std::vector<std::int64_t> stuck)
      : Error(what), stuck_(std::move(stuck)) {}

  /// The word on which reduction stopped.
  const std::vector<std::int64_t>& stuck_word() const noexcept { return stuck_; }

 private:
  std::vector<std::int64_t> stuck_;
};

/// A configured resource ceiling (length or node count) would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace quiddity
