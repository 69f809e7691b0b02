#pragma once

#include "quiddity/matrix.hpp"
#include "quiddity/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quiddity {

enum class SurgeryKind { Type1, Type2 };

/// One forward surgery. `position` is taken modulo the length of the word
/// the step is applied to. After the operation the result is rotated left
/// by `shift`; reductions that remove entries across the wrap-around point
/// need this to make replay reproduce the exact representative.
struct SurgeryStep {
  SurgeryKind kind = SurgeryKind::Type1;
  std::size_t position = 0;
  std::pair<Entry, Entry> split{0, 0};  // Type2 only
  std::size_t shift = 0;

  friend bool operator==(const SurgeryStep&, const SurgeryStep&) = default;
};

/// A derivation of a solution from one of the base words (1,1,1), (1,2),
/// (2,1). Replaying `steps` forward from `base` gives the word back exactly.
struct ReductionCertificate {
  Word base{1, 1, 1};
  std::vector<SurgeryStep> steps;
  std::size_t type1_count = 0;  // S
  std::size_t type2_count = 0;  // R
};

enum class SolutionClass { ProblemI, ProblemII, ProblemIII, NotASolution };

std::string to_string(SolutionClass c);

/// Insert 1 between a_i and a_{i+1} (cyclically) and increment both.
/// The new 1 lands at index i + 1; for i = n - 1 it is appended.
Word apply_type1(const Word& w, std::size_t i);

/// Replace a_i by (a', 1, 1, a'') with a' + a'' = a_i + 1.
Word apply_type2(const Word& w, std::size_t i, std::pair<Entry, Entry> split);

/// Apply a certificate step, including its trailing rotation.
Word apply_step(const Word& w, const SurgeryStep& step);

bool can_inverse_type1(const Word& w, std::size_t i) noexcept;
bool can_inverse_type2(const Word& w, std::size_t i) noexcept;

/// Remove the 1 at index i whose cyclic neighbours are both >= 2 and
/// decrement the neighbours. Remaining entries keep their relative order.
Word inverse_type1(const Word& w, std::size_t i);

/// Collapse the cyclic fragment (a_{i-1}, 1, 1, a_{i+2}) into the single
/// entry a_{i-1} + a_{i+2} - 1, placed where a_{i-1} was. Needs n >= 5.
Word inverse_type2(const Word& w, std::size_t i);

/// Deterministic reduction to a base word. Throws NotASolutionError.
ReductionCertificate reduce(const Word& w);

/// Replay a certificate from its base.
Word replay(const ReductionCertificate& cert);

struct Classification {
  SolutionClass solution_class = SolutionClass::NotASolution;
  std::optional<ReductionCertificate> certificate;
};

/// Class from the matrix, with a certificate attached for solutions.
Classification classify(const Word& w);

/// Class from the matrix only.
SolutionClass solution_class(const Word& w);
SolutionClass solution_class(const Matrix& m);

/// No linear fragment (a, 1, b) with a, b > 1 and no (a, 1, 1, b).
bool is_reduced(const Word& w) noexcept;

/// Corollary bound on entries of solutions: n-5, n-2, n for I, II, III.
std::ptrdiff_t entry_bound(SolutionClass c, std::size_t n);

}  // namespace quiddity
