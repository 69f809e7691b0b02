#include "quiddity/enumeration.hpp"

#include "quiddity/error.hpp"
#include "quiddity/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

namespace quiddity {

SolutionClass to_solution_class(Problem p) {
  switch (p) {
    case Problem::I: return SolutionClass::ProblemI;
    case Problem::II: return SolutionClass::ProblemII;
    case Problem::III: return SolutionClass::ProblemIII;
  }
  return SolutionClass::NotASolution;
}

namespace {

bool hits_target(Problem problem, const FastMatrix& m) {
  switch (problem) {
    case Problem::I: return m == FastMatrix::identity();
    case Problem::II: return m == -FastMatrix::identity();
    case Problem::III: return m.a + m.d == 0;
  }
  return false;
}

bool hits_target(Problem problem, const Matrix& m) {
  switch (problem) {
    case Problem::I: return m == Matrix::identity();
    case Problem::II: return m == -Matrix::identity();
    case Problem::III: return m.trace() == 0;
  }
  return false;
}

std::size_t max_solution_sum(Problem problem, std::size_t n) {
  switch (problem) {
    case Problem::I: return 3 * n >= 12 ? 3 * n - 12 : 0;
    case Problem::II: return 3 * n >= 6 ? 3 * n - 6 : 0;
    case Problem::III: return 3 * n - 3;
  }
  return 0;
}

// Depth-first search below a fixed prefix. Partial products are kept per
// depth in int64; an overflow drops to a BigInt product at the leaf.
class BruteSearch {
 public:
  BruteSearch(Problem problem, std::size_t n, Entry bound, std::size_t max_sum, bool prune)
      : problem_(problem), n_(n), bound_(bound), max_sum_(max_sum), prune_(prune),
        word_(n), products_(n + 1) {}

  std::vector<Word> run(std::span<const Entry> prefix) {
    found_.clear();
    products_[0] = FastMatrix::identity();
    std::size_t sum = 0;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      word_[k] = prefix[k];
      sum += static_cast<std::size_t>(prefix[k]);
      products_[k + 1] = products_[k] ? checked_step(*products_[k], prefix[k]) : std::nullopt;
    }
    if (!prune_ || sum + (n_ - prefix.size()) <= max_sum_) {
      descend(prefix.size(), sum);
    }
    return std::move(found_);
  }

 private:
  void descend(std::size_t depth, std::size_t sum) {
    if (depth == n_) {
      const bool hit = products_[n_] ? hits_target(problem_, *products_[n_])
                                     : hits_target(problem_, word_product(word_));
      if (hit) found_.emplace_back(word_);
      return;
    }
    const std::size_t remaining_after = n_ - depth - 1;
    for (Entry a = 1; a <= bound_; ++a) {
      const std::size_t s = sum + static_cast<std::size_t>(a);
      if (prune_ && s + remaining_after > max_sum_) break;
      word_[depth] = a;
      products_[depth + 1] = products_[depth] ? checked_step(*products_[depth], a) : std::nullopt;
      descend(depth + 1, s);
    }
  }

  Problem problem_;
  std::size_t n_;
  Entry bound_;
  std::size_t max_sum_;
  bool prune_;
  std::vector<Entry> word_;
  std::vector<std::optional<FastMatrix>> products_;
  std::vector<Word> found_;
};

std::string encode(const Word& w) {
  std::string key(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 255) throw BudgetExceeded("entry too large for the generative closure key");
    key[i] = static_cast<char>(w[i]);
  }
  return key;
}

Word decode(const std::string& key) {
  std::vector<Entry> out(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) out[i] = static_cast<unsigned char>(key[i]);
  return Word(std::move(out));
}

}  // namespace

SolutionSet brute_force_enumerate(Problem problem, std::size_t n, const Budget& budget,
                                  const BruteForceOptions& options) {
  if (n < 1) throw DomainError("brute_force_enumerate needs n >= 1");
  if (n > budget.brute_force_max_n) {
    throw BudgetExceeded("brute force at n = " + std::to_string(n) + " exceeds the ceiling n <= " +
                         std::to_string(budget.brute_force_max_n));
  }
  SolutionSet out{problem, n, {}};
  const std::ptrdiff_t bound = entry_bound(to_solution_class(problem), n);
  if (bound < 1) return out;

  // Fixed-length prefixes are the unit of work; results are merged in
  // prefix order, so output does not depend on the thread count.
  const std::size_t prefix_len = std::min<std::size_t>(2, n);
  std::vector<std::vector<Entry>> prefixes;
  std::vector<Entry> cur(prefix_len, 1);
  while (true) {
    prefixes.push_back(cur);
    std::size_t k = prefix_len;
    while (k > 0 && cur[k - 1] == bound) cur[--k] = 1;
    if (k == 0) break;
    ++cur[k - 1];
  }

  std::vector<std::vector<Word>> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  const std::size_t max_sum = max_solution_sum(problem, n);
  auto worker = [&] {
    BruteSearch search(problem, n, bound, max_sum, options.sum_pruning);
    for (std::size_t t = next++; t < prefixes.size(); t = next++) {
      results[t] = search.run(prefixes[t]);
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, prefixes.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (auto& r : results) {
    out.words.insert(out.words.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

std::vector<std::vector<GeneratedWord>> generative_closure(bool problem_iii, std::size_t n_max,
                                                           const Budget& budget) {
  if (n_max > budget.generative_max_n) {
    throw BudgetExceeded("generative enumeration at n = " + std::to_string(n_max) +
                         " exceeds the ceiling n <= " + std::to_string(budget.generative_max_n));
  }
  std::vector<std::unordered_map<std::string, std::size_t>> levels(n_max + 1);
  std::size_t stored = 0;
  // Solution sets are closed under rotation, while surgeries at fixed
  // positions only reach some rotations of each child.
  auto insert_one = [&](const Word& w, std::size_t r) {
    auto [it, fresh] = levels[w.size()].try_emplace(encode(w), r);
    if (fresh) {
      if (++stored > budget.max_stored_words) {
        throw BudgetExceeded("generative closure exceeds " + std::to_string(budget.max_stored_words) +
                             " stored words");
      }
    } else if (it->second != r) {
      throw InternalError("word " + w.to_string() + " reached with two different type-2 counts");
    }
  };
  auto insert = [&](const Word& w, std::size_t r) {
    for (std::size_t k = 0; k < w.size(); ++k) insert_one(w.rotated(static_cast<std::ptrdiff_t>(k)), r);
  };

  if (problem_iii) {
    if (n_max >= 2) {
      insert(Word{1, 2}, 0);
      insert(Word{2, 1}, 0);
    }
  } else if (n_max >= 3) {
    insert(Word{1, 1, 1}, 0);
  }

  for (std::size_t m = 2; m <= n_max; ++m) {
    for (const auto& [key, r] : levels[m]) {
      const Word w = decode(key);
      if (m + 1 <= n_max) {
        for (std::size_t i = 0; i < m; ++i) insert(apply_type1(w, i), r);
      }
      if (m + 3 <= n_max) {
        for (std::size_t i = 0; i < m; ++i) {
          for (Entry first = 1; first <= w[i]; ++first) {
            insert(apply_type2(w, i, {first, w[i] + 1 - first}), r + 1);
          }
        }
      }
    }
  }

  std::vector<std::vector<GeneratedWord>> out(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    out[m].reserve(levels[m].size());
    for (const auto& [key, r] : levels[m]) out[m].push_back({decode(key), r});
    std::sort(out[m].begin(), out[m].end(),
              [](const GeneratedWord& x, const GeneratedWord& y) { return x.word < y.word; });
  }
  return out;
}

namespace {

SolutionSet select_level(Problem problem, std::size_t n, const std::vector<GeneratedWord>& level) {
  SolutionSet out{problem, n, {}};
  for (const auto& g : level) {
    const bool odd = g.type2_count % 2 == 1;
    if (problem == Problem::III || (problem == Problem::I) == odd) out.words.push_back(g.word);
  }
  return out;
}

}  // namespace

SolutionSet generative_enumerate(Problem problem, std::size_t n, const Budget& budget) {
  if (n < 2) throw DomainError("generative_enumerate needs n >= 2");
  auto levels = generative_closure(problem == Problem::III, n, budget);
  return select_level(problem, n, levels[n]);
}

std::vector<Word> orbit_representatives(const std::vector<Word>& words, Symmetry symmetry) {
  std::set<Word> reps;
  for (const Word& w : words) {
    reps.insert(symmetry == Symmetry::Rotation ? w.canonical_rotation() : w.canonical_dihedral());
  }
  return {reps.begin(), reps.end()};
}

std::size_t orbit_count(const std::vector<Word>& words, Symmetry symmetry) {
  return orbit_representatives(words, symmetry).size();
}

std::vector<CountRow> count_table(Problem problem, std::size_t n_min, std::size_t n_max,
                                  const Budget& budget) {
  if (n_min < 2 || n_min > n_max) throw DomainError("count_table needs 2 <= n_min <= n_max");
  auto levels = generative_closure(problem == Problem::III, n_max, budget);
  std::vector<CountRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    SolutionSet gen = select_level(problem, n, levels[n]);
    bool checked = false;
    if (n <= budget.brute_force_max_n) {
      SolutionSet brute = brute_force_enumerate(problem, n, budget);
      if (brute != gen) {
        throw InternalError("brute force and generative enumeration disagree at n = " + std::to_string(n));
      }
      checked = true;
    }
    rows.push_back({n, gen.size(), checked});
  }
  return rows;
}

}  // namespace quiddity
