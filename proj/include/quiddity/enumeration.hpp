#pragma once

#include "quiddity/budget.hpp"
#include "quiddity/surgery.hpp"
#include "quiddity/word.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace quiddity {

enum class Problem { I = 1, II = 2, III = 3 };

SolutionClass to_solution_class(Problem p);

/// All solutions of one problem at one length: distinct ordered tuples,
/// rotations counted separately, sorted lexicographically.
struct SolutionSet {
  Problem problem = Problem::II;
  std::size_t n = 0;
  std::vector<Word> words;

  std::size_t size() const noexcept { return words.size(); }
  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

struct BruteForceOptions {
  /// Prune prefixes whose entry sum cannot stay within the maximal
  /// solution sum (3n-6, 3n-12 for Problem I, 3n-3 for Problem III).
  bool sum_pruning = true;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Exhaustive search over 1 <= a_i <= entry_bound(problem, n), checking the
/// word product of each complete tuple.
SolutionSet brute_force_enumerate(Problem problem, std::size_t n, const Budget& budget = {},
                                  const BruteForceOptions& options = {});

/// Closure of the base words under both surgeries, filtered to length n
/// (and by type-2 parity for Problems I/II).
SolutionSet generative_enumerate(Problem problem, std::size_t n, const Budget& budget = {});

/// Every word of length <= n_max reachable from the bases, with its type-2
/// count. Problems I and II share a closure; I words have odd counts.
struct GeneratedWord {
  Word word;
  std::size_t type2_count;
};
std::vector<std::vector<GeneratedWord>> generative_closure(bool problem_iii, std::size_t n_max,
                                                           const Budget& budget = {});

enum class Symmetry { Rotation, Dihedral };

std::size_t orbit_count(const std::vector<Word>& words, Symmetry symmetry);
inline std::size_t orbit_count(const SolutionSet& s, Symmetry symmetry) {
  return orbit_count(s.words, symmetry);
}

/// Canonical orbit representatives, sorted.
std::vector<Word> orbit_representatives(const std::vector<Word>& words, Symmetry symmetry);

struct CountRow {
  std::size_t n;
  std::size_t count;
  bool cross_checked;  // brute force agreed for this n
};

/// Counts from the generative engine, cross-checked against brute force for
/// every n within the brute-force budget. Throws InternalError on mismatch.
std::vector<CountRow> count_table(Problem problem, std::size_t n_min, std::size_t n_max,
                                  const Budget& budget = {});

}  // namespace quiddity
