#include "quiddity/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace quiddity {

Budget Budget::from_environment() {
  Budget b;
  const char* raw = std::getenv("QUIDDITY_BUDGET");
  if (raw == nullptr) return b;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec == std::errc{} && ptr == end && value > 0) {
    b.brute_force_max_n = value;
    b.generative_max_n = value;
    b.dissection_max_n = value;
  }
  return b;
}

}  // namespace quiddity
