#pragma once

#include <cstddef>

namespace quiddity {

/// Resource ceilings for exhaustive searches. Exceeding one raises
/// BudgetExceeded instead of truncating results.
struct Budget {
  std::size_t brute_force_max_n = 12;
  std::size_t generative_max_n = 14;
  std::size_t dissection_max_n = 14;
  /// Cap on words held by one generative closure.
  std::size_t max_stored_words = 20'000'000;

  /// Defaults, with every length ceiling replaced by QUIDDITY_BUDGET when
  /// that variable holds a positive integer.
  static Budget from_environment();
};

}  // namespace quiddity
