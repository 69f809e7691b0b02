#include "quiddity/surgery.hpp"

#include "quiddity/error.hpp"

#include <algorithm>

namespace quiddity {

namespace {

const Word kBaseTriangle{1, 1, 1};
const Word kBaseIIIa{1, 2};
const Word kBaseIIIb{2, 1};

bool is_base(const Word& w) { return w == kBaseTriangle || w == kBaseIIIa || w == kBaseIIIb; }

std::size_t mod(std::ptrdiff_t x, std::size_t n) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((x % sn) + sn) % sn);
}

}  // namespace

std::string to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::ProblemI: return "ProblemI";
    case SolutionClass::ProblemII: return "ProblemII";
    case SolutionClass::ProblemIII: return "ProblemIII";
    case SolutionClass::NotASolution: return "NotASolution";
  }
  return "?";
}

Word apply_type1(const Word& w, std::size_t i) {
  const std::size_t n = w.size();
  i %= n;
  std::vector<Entry> out(w.begin(), w.end());
  const std::size_t next = (i + 1) % n;
  out[i] += 1;
  out[next] += 1;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i + 1), Entry{1});
  return Word(std::move(out));
}

Word apply_type2(const Word& w, std::size_t i, std::pair<Entry, Entry> split) {
  i %= w.size();
  const auto [first, second] = split;
  if (first < 1 || second < 1 || first + second != w[i] + 1) {
    throw DomainError("type-2 split (" + std::to_string(first) + "," + std::to_string(second) +
                      ") does not satisfy a' + a'' = a_i + 1 with a', a'' >= 1");
  }
  std::vector<Entry> out;
  out.reserve(w.size() + 3);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), {first, 1, 1, second});
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
  return Word(std::move(out));
}

Word apply_step(const Word& w, const SurgeryStep& step) {
  Word r = step.kind == SurgeryKind::Type1 ? apply_type1(w, step.position)
                                           : apply_type2(w, step.position, step.split);
  return step.shift == 0 ? r : r.rotated(static_cast<std::ptrdiff_t>(step.shift));
}

bool can_inverse_type1(const Word& w, std::size_t i) noexcept {
  const std::size_t n = w.size();
  if (n < 3 || i >= n || w[i] != 1) return false;
  return w[mod(static_cast<std::ptrdiff_t>(i) - 1, n)] >= 2 && w[(i + 1) % n] >= 2;
}

bool can_inverse_type2(const Word& w, std::size_t i) noexcept {
  const std::size_t n = w.size();
  return n >= 5 && i < n && w[i] == 1 && w[(i + 1) % n] == 1;
}

Word inverse_type1(const Word& w, std::size_t i) {
  if (!can_inverse_type1(w, i)) {
    throw DomainError("inverse type-1 needs an entry 1 at index " + std::to_string(i) +
                      " with both cyclic neighbours >= 2 in a word of length >= 3");
  }
  const std::size_t n = w.size();
  const std::size_t left = mod(static_cast<std::ptrdiff_t>(i) - 1, n);
  const std::size_t right = (i + 1) % n;
  std::vector<Entry> out;
  out.reserve(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i) continue;
    out.push_back(w[k] - ((k == left || k == right) ? 1 : 0));
  }
  return Word(std::move(out));
}

Word inverse_type2(const Word& w, std::size_t i) {
  if (!can_inverse_type2(w, i)) {
    throw DomainError("inverse type-2 needs consecutive 1s at index " + std::to_string(i) +
                      " in a word of length >= 5");
  }
  const std::size_t n = w.size();
  const std::size_t p = mod(static_cast<std::ptrdiff_t>(i) - 1, n);
  const std::size_t i2 = (i + 1) % n;
  const std::size_t q = (i + 2) % n;
  std::vector<Entry> out;
  out.reserve(n - 3);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == i2 || k == q) continue;
    out.push_back(k == p ? w[p] + w[q] - 1 : w[k]);
  }
  return Word(std::move(out));
}

namespace {

// Index that original index `k` takes after removing the sorted `removed`.
std::size_t surviving_index(std::size_t k, std::initializer_list<std::size_t> removed) {
  std::size_t shift = 0;
  for (std::size_t r : removed) shift += r < k ? 1 : 0;
  return k - shift;
}

}  // namespace

ReductionCertificate reduce(const Word& w) {
  ReductionCertificate cert;
  std::vector<SurgeryStep> backwards;
  Word cur = w;

  while (!is_base(cur)) {
    const std::size_t n = cur.size();
    std::optional<std::size_t> pick2;
    for (std::size_t j = 0; j < n && !pick2; ++j) {
      if (can_inverse_type2(cur, j)) pick2 = j;
    }
    if (pick2) {
      const std::size_t j = *pick2;
      const std::size_t p = mod(static_cast<std::ptrdiff_t>(j) - 1, n);
      const std::size_t q = (j + 2) % n;
      Word prev = inverse_type2(cur, j);
      SurgeryStep step{SurgeryKind::Type2, surviving_index(p, {j, (j + 1) % n, q}),
                       {cur[p], cur[q]}, 0};
      step.shift = mod(static_cast<std::ptrdiff_t>(step.position) - static_cast<std::ptrdiff_t>(p), n);
      if (apply_step(prev, step) != cur) {
        throw InternalError("type-2 reduction step does not replay to " + cur.to_string());
      }
      backwards.push_back(step);
      ++cert.type2_count;
      cur = std::move(prev);
      continue;
    }

    std::optional<std::size_t> pick1;
    for (std::size_t j = 0; j < n && !pick1; ++j) {
      if (can_inverse_type1(cur, j)) pick1 = j;
    }
    if (!pick1) {
      throw NotASolutionError("reduction is stuck at " + cur.to_string() + "; " + w.to_string() +
                                  " is not a solution",
                              cur.vector());
    }
    const std::size_t j = *pick1;
    Word prev = inverse_type1(cur, j);
    // The gap between the decremented neighbours is interior unless j sits
    // at either end, in which case it is the wrap-around gap.
    const std::size_t gap = (j == 0 || j == n - 1) ? prev.size() - 1 : j - 1;
    SurgeryStep step{SurgeryKind::Type1, gap, {0, 0}, 0};
    step.shift = mod(static_cast<std::ptrdiff_t>(gap + 1) - static_cast<std::ptrdiff_t>(j), n);
    if (apply_step(prev, step) != cur) {
      throw InternalError("type-1 reduction step does not replay to " + cur.to_string());
    }
    backwards.push_back(step);
    ++cert.type1_count;
    cur = std::move(prev);
  }

  // Inverse surgeries preserve the product up to sign and conjugation, so
  // the base must agree with the class of the input.
  const SolutionClass cls = solution_class(w);
  const bool triangle = cur == kBaseTriangle;
  if (cls == SolutionClass::NotASolution ||
      (cls == SolutionClass::ProblemIII) == triangle) {
    throw NotASolutionError("reduction of " + w.to_string() + " reached base " + cur.to_string() +
                                " whose product class does not match",
                            cur.vector());
  }

  cert.base = cur;
  cert.steps.assign(backwards.rbegin(), backwards.rend());
  return cert;
}

Word replay(const ReductionCertificate& cert) {
  if (!is_base(cert.base)) {
    throw DomainError("certificate base " + cert.base.to_string() + " is not (1,1,1), (1,2) or (2,1)");
  }
  Word w = cert.base;
  for (const SurgeryStep& s : cert.steps) {
    w = apply_step(w, s);
  }
  return w;
}

SolutionClass solution_class(const Matrix& m) {
  switch (classify_matrix(m)) {
    case MatrixClass::Identity: return SolutionClass::ProblemI;
    case MatrixClass::NegIdentity: return SolutionClass::ProblemII;
    case MatrixClass::TraceZero: return SolutionClass::ProblemIII;
    case MatrixClass::Other: return SolutionClass::NotASolution;
  }
  return SolutionClass::NotASolution;
}

SolutionClass solution_class(const Word& w) { return solution_class(word_product(w)); }

Classification classify(const Word& w) {
  Classification out;
  out.solution_class = solution_class(w);
  if (out.solution_class == SolutionClass::NotASolution) return out;

  ReductionCertificate cert = reduce(w);
  const bool triangle = cert.base == kBaseTriangle;
  const bool odd = cert.type2_count % 2 == 1;
  const bool consistent =
      (out.solution_class == SolutionClass::ProblemI && triangle && odd) ||
      (out.solution_class == SolutionClass::ProblemII && triangle && !odd) ||
      (out.solution_class == SolutionClass::ProblemIII && !triangle);
  if (!consistent) {
    throw InternalError("certificate of " + w.to_string() + " disagrees with its matrix class");
  }
  out.certificate = std::move(cert);
  return out;
}

bool is_reduced(const Word& w) noexcept {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (w[i] > 1 && w[i + 1] == 1 && w[i + 2] > 1) return false;
  }
  for (std::size_t i = 0; i + 3 < n; ++i) {
    if (w[i + 1] == 1 && w[i + 2] == 1) return false;
  }
  return true;
}

std::ptrdiff_t entry_bound(SolutionClass c, std::size_t n) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  switch (c) {
    case SolutionClass::ProblemI: return sn - 5;
    case SolutionClass::ProblemII: return sn - 2;
    case SolutionClass::ProblemIII: return sn;
    case SolutionClass::NotASolution: break;
  }
  throw DomainError("entry_bound is only defined for Problems I-III");
}

}  // namespace quiddity
