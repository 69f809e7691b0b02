#include "quiddity/sturm.hpp"

#include "quiddity/error.hpp"
#include "quiddity/matrix.hpp"
#include "quiddity/surgery.hpp"

#include <algorithm>
#include <numeric>

namespace quiddity {

SLSequence iterate(const Word& w, const BigInt& v0, const BigInt& v1, std::size_t steps) {
  SLSequence seq{w, {v0}};
  if (steps == 0) return seq;
  seq.values.push_back(v1);
  for (std::size_t i = 1; i < steps; ++i) {
    const BigInt& cur = seq.values[i];
    seq.values.push_back(BigInt(w[(i - 1) % w.size()]) * cur - seq.values[i - 1]);
  }
  return seq;
}

BrokenLine broken_line(const Word& w, std::size_t steps) {
  const auto x = iterate(w, 1, 0, steps).values;
  const auto y = iterate(w, 0, 1, steps).values;
  BrokenLine line;
  for (std::size_t i = 0; i < x.size(); ++i) line.points.emplace_back(x[i], y[i]);
  return line;
}

BigInt wronskian(const BrokenLine& line) {
  const auto& p = line.points;
  if (p.size() < 2) throw DomainError("a Wronskian needs at least two points");
  const BigInt w = p[1].first * p[0].second - p[0].first * p[1].second;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i + 1].first * p[i].second - p[i].first * p[i + 1].second != w) {
      throw InternalError("Wronskian is not constant along the broken line");
    }
  }
  return w;
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInteger rotation_index(const Word& w) {
  Word period = w;
  switch (solution_class(w)) {
    case SolutionClass::ProblemI:
    case SolutionClass::ProblemII: break;
    case SolutionClass::ProblemIII: period = w.doubled(); break;
    case SolutionClass::NotASolution:
      throw NotASolutionError("rotation index is defined for solutions only; " + w.to_string() +
                              " is not one", w.vector());
  }
  const std::size_t n = period.size();
  const auto v = iterate(period, 0, 1, n).values;
  // A zero counts once; a strict sign change between neighbours counts once.
  std::int64_t crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) ++crossings;
    else if ((v[i] < 0 && v[i + 1] > 0) || (v[i] > 0 && v[i + 1] < 0)) ++crossings;
  }
  return HalfInteger::from_twice(crossings);
}

bool is_totally_positive(const Word& w) {
  Word word = w;
  switch (solution_class(w)) {
    case SolutionClass::ProblemI:
    case SolutionClass::ProblemII: break;
    case SolutionClass::ProblemIII: word = w.doubled(); break;
    case SolutionClass::NotASolution:
      throw NotASolutionError("total positivity is defined for solutions only; " + w.to_string() +
                              " is not one", w.vector());
  }
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    // K_{j+1}(a_i..a_{i+j}) for j = 0..n-3, built incrementally.
    BigInt prev = 0, cur = 1;
    for (std::size_t j = 0; j + 3 <= n; ++j) {
      BigInt next = BigInt(word[(i + j) % n]) * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
      if (cur <= 0) return false;
    }
  }
  return true;
}

Word farey_quiddity(std::size_t order) {
  if (order < 2) throw DomainError("the Farey polygon needs order >= 2");
  struct Fraction {
    std::int64_t p, q;
  };
  std::vector<Fraction> vertices;
  const auto big_n = static_cast<std::int64_t>(order);
  for (std::int64_t q = 1; q <= big_n; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) vertices.push_back({p, q});
    }
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const Fraction& a, const Fraction& b) { return a.p * b.q < b.p * a.q; });
  std::vector<Entry> q(vertices.size(), -1);
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      if (a == b) continue;
      const std::int64_t cross = vertices[a].p * vertices[b].q - vertices[b].p * vertices[a].q;
      if (cross == 1 || cross == -1) ++q[a];
    }
  }
  return Word(std::move(q));
}

}  // namespace quiddity
