#include "quiddity/word.hpp"

#include "quiddity/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

namespace quiddity {

Word::Word(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw DomainError("word must be non-empty");
  }
  for (Entry e : entries_) {
    if (e < 1) {
      throw DomainError("word entries must be positive, got " + std::to_string(e));
    }
  }
}

Word::Word(std::initializer_list<Entry> entries) : Word(std::vector<Entry>(entries)) {}

Word Word::parse(std::string_view text) {
  std::vector<Entry> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    Entry value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw DomainError("malformed word entry '" + std::string(tok) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return Word(std::move(out));
}

Entry Word::at_cyclic(std::ptrdiff_t i) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(entries_.size());
  return entries_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Entry Word::sum() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), Entry{0}); }

Entry Word::max() const noexcept { return *std::max_element(entries_.begin(), entries_.end()); }

Word Word::rotated(std::ptrdiff_t k) const {
  std::vector<Entry> out(entries_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = at_cyclic(static_cast<std::ptrdiff_t>(j) + k);
  }
  return Word(std::move(out));
}

Word Word::canonical_rotation() const {
  Word best = *this;
  for (std::size_t k = 1; k < size(); ++k) {
    Word r = rotated(static_cast<std::ptrdiff_t>(k));
    if (r < best) best = std::move(r);
  }
  return best;
}

Word Word::canonical_dihedral() const {
  return std::min(canonical_rotation(), reversed().canonical_rotation());
}

Word Word::reversed() const { return Word(std::vector<Entry>(entries_.rbegin(), entries_.rend())); }

Word Word::doubled() const { return concat(*this, *this); }

bool Word::has_period(std::size_t period) const noexcept {
  if (period == 0 || size() % period != 0) return false;
  for (std::size_t i = 0; i + period < size(); ++i) {
    if (entries_[i] != entries_[i + period]) return false;
  }
  return true;
}

std::string Word::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

Word concat(const Word& lhs, const Word& rhs) {
  std::vector<Entry> out(lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return Word(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

}  // namespace quiddity
