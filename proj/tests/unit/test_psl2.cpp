#include "quiddity/psl2.hpp"
#include "quiddity/surgery.hpp"

#include "../support/oracles.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <random>

using namespace quiddity;

namespace {

Matrix M(long a, long b, long c, long d) { return Matrix{a, b, c, d}; }

const GroupElement kS(generator_s());
const GroupElement kT(generator_t());
const GroupElement kA(M(2, 1, 1, 1));
const GroupElement kB(M(5, 2, 2, 1));

GroupElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 24), pick(0, 2);
  Matrix m = Matrix::identity();
  const Matrix t_inverse = generator_t().unimodular_inverse();
  for (int k = len(rng); k > 0; --k) {
    switch (pick(rng)) {
      case 0: m = m * generator_s(); break;
      case 1: m = m * generator_t(); break;
      default: m = m * t_inverse; break;
    }
  }
  return GroupElement(m);
}

}  // namespace

TEST(GroupElements, SignQuotient) {
  EXPECT_THROW(GroupElement(M(2, 0, 0, 1)), DomainError);
  EXPECT_EQ(GroupElement(M(-2, -1, -1, -1)), kA);
  EXPECT_NE(kA, kB);
  EXPECT_EQ(GroupElement(M(-2, -1, -1, -1)).canonical(), M(2, 1, 1, 1));
  EXPECT_EQ(GroupElement(M(-1, -1, 0, -1)).canonical(), M(1, 1, 0, 1));
  EXPECT_EQ(kS * kS, GroupElement(Matrix::identity()));
  EXPECT_EQ(kA * kA.inverse(), GroupElement(Matrix::identity()));
}

TEST(Decomposition, Examples) {
  EXPECT_EQ(reduced_decomposition(kS), (Word{1, 1, 2, 1, 1}));
  EXPECT_EQ(reduced_decomposition(kT), (Word{2, 1, 1}));
  EXPECT_EQ(reduced_decomposition(kT.inverse()), (Word{1, 1, 2, 1}));
  EXPECT_EQ(reduced_decomposition(kA), (Word{2, 2, 1, 1}));
  EXPECT_EQ(reduced_decomposition(kA.inverse()), (Word{1, 1, 3, 1}));
  EXPECT_EQ(reduced_decomposition(kB), (Word{3, 2, 2, 1, 1}));
  EXPECT_EQ(reduced_decomposition(kB.inverse()), (Word{1, 1, 4, 2, 1}));
  EXPECT_EQ(reduced_decomposition(GroupElement(Matrix::identity())), (Word{1, 1, 1}));
}

TEST(Decomposition, RandomElements) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupElement a = random_element(rng);
    const Word w = reduced_decomposition(a);
    ASSERT_EQ(GroupElement(word_product_left_to_right(w)), a) << a.representative();
    EXPECT_TRUE(is_reduced(w)) << w;
    const auto q = element_quiddity(a);
    const SolutionClass c = solution_class(q.combined);
    EXPECT_TRUE(c == SolutionClass::ProblemI || c == SolutionClass::ProblemII) << q.combined;
    EXPECT_EQ(element_index(a).twice_value(), static_cast<std::int64_t>(reduce(q.combined).type2_count) + 1);
  }
}

TEST(Decomposition, HugeTranslationIsRefused) {
  EXPECT_THROW(reduced_decomposition(GroupElement(M(1, 2'000'000, 0, 1))), BudgetExceeded);
  EXPECT_EQ(reduced_decomposition(GroupElement(M(1, 5, 0, 1))), (Word{6, 1, 1}));
}

TEST(Normalize, MatchesLeftmostRewriting) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto w = oracle::random_word(rng, 1, 14, 4);
    const Word got = normalize(Word(w));
    EXPECT_EQ(got.vector(), oracle::naive_normalize(w)) << Word(w);
    EXPECT_TRUE(is_reduced(got));
    EXPECT_EQ(GroupElement(word_product_left_to_right(got)), GroupElement(word_product_left_to_right(Word(w))));
  }
}

TEST(Decomposition, RoundTripOnReducedWords) {
  for (const Word& w : reduced_words(7, 5)) {
    ASSERT_EQ(reduced_decomposition(GroupElement(word_product_left_to_right(w))), w);
  }
}

TEST(Uniqueness, SmallLengths) {
  EXPECT_TRUE(uniqueness_spot_check(5));
  EXPECT_TRUE(uniqueness_spot_check(7));
  EXPECT_THROW(uniqueness_spot_check(11), BudgetExceeded);
  Budget b;
  b.max_stored_words = 1000;
  EXPECT_THROW(uniqueness_spot_check(6, 6, b), BudgetExceeded);
}

TEST(Uniqueness, ReducedWordListing) {
  const auto words = reduced_words(3, 2);
  // 2 + 4 + (8 minus the single (2,1,2)).
  EXPECT_EQ(words.size(), 13u);
  for (const Word& w : words) EXPECT_TRUE(is_reduced(w)) << w;
}

TEST(Uniqueness, FabricatedCollisionIsReported) {
  const auto hits = find_product_collisions({Word{1, 1, 1}, Word{2, 1, 1}, Word{1, 1, 1, 1, 1, 1}});
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].element, Matrix::identity());
  EXPECT_EQ(hits[0].first, (Word{1, 1, 1}));
  EXPECT_EQ(hits[0].second, (Word{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(describe(hits[0]), "(1,1,1) and (1,1,1,1,1,1) both give [[1,0],[0,1]] up to sign");
}

TEST(ElementQuiddities, Examples) {
  const auto s = element_quiddity(kS);
  EXPECT_EQ(s.combined, (Word{1, 1, 2, 1, 1, 1, 1, 2, 1, 1}));
  EXPECT_TRUE(s.sign_defect);
  EXPECT_EQ(s.combined.canonical_rotation(), (Word{2, 1, 1, 1, 1, 2, 1, 1, 1, 1}.canonical_rotation()));

  const auto t = element_quiddity(kT);
  EXPECT_EQ(t.left, (Word{2, 1, 1}));
  EXPECT_EQ(t.right, (Word{1, 1, 2, 1}));
  EXPECT_EQ(t.combined, (Word{2, 1, 1, 1, 1, 2, 1}));

  EXPECT_EQ(element_quiddity(kA).combined, (Word{2, 2, 1, 1, 1, 1, 3, 1}));
  EXPECT_EQ(element_quiddity(kB).combined, (Word{3, 2, 2, 1, 1, 1, 1, 4, 2, 1}));
}

TEST(ElementQuiddities, DissectionsAndIndices) {
  const Dissection s = element_dissection(kS);
  EXPECT_EQ(profile(s).face_sizes, (std::vector<std::size_t>{6, 6}));
  EXPECT_EQ(s, Dissection(10, {{2, 7}}));
  const Dissection t = element_dissection(kT);
  EXPECT_EQ(profile(t).face_sizes, (std::vector<std::size_t>{3, 6}));
  const Dissection a = element_dissection(kA);
  EXPECT_EQ(profile(a).face_sizes, (std::vector<std::size_t>{3, 3, 6}));

  EXPECT_EQ(element_index(kS), HalfInteger::from_twice(3));
  EXPECT_EQ(element_index(kT), HalfInteger::from_twice(2));
  EXPECT_EQ(element_index(kA), HalfInteger::from_twice(2));
  EXPECT_EQ(element_index(kB), HalfInteger::from_twice(2));
}

TEST(Probe, CoversTheNamedElements) {
  auto find = [](const std::vector<ProbeRecord>& records, const GroupElement& g) {
    for (const auto& r : records) {
      if (GroupElement(r.element) == g) return &r;
    }
    return static_cast<const ProbeRecord*>(nullptr);
  };

  const auto seven = conjecture_probe(7);
  EXPECT_EQ(seven.size(), 67u);
  const ProbeRecord* t = find(seven, kT);
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->reduced, (Word{2, 1, 1}));
  EXPECT_EQ(t->dissections_found, 1u);
  EXPECT_EQ(find(seven, kA), nullptr);

  const auto eight = conjecture_probe(8);
  ASSERT_NE(find(eight, kA), nullptr);
  EXPECT_EQ(find(eight, kA)->dissections_found, 1u);

  const auto ten = conjecture_probe(10);
  const ProbeRecord* s = find(ten, kS);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->quiddity, (Word{1, 1, 2, 1, 1, 1, 1, 2, 1, 1}));
  EXPECT_EQ(s->index_twice, 3);
  EXPECT_EQ(s->dissections_found, 1u);
  for (const auto& r : ten) EXPECT_EQ(r.dissections_found, 1u) << r.quiddity;
  for (std::size_t k = 1; k < ten.size(); ++k) {
    const auto& p = ten[k - 1].quiddity;
    const auto& q = ten[k].quiddity;
    EXPECT_TRUE(p.size() < q.size() || (p.size() == q.size() && p <= q));
  }
}

TEST(Probe, BudgetAndJson) {
  Budget b;
  b.dissection_max_n = 8;
  EXPECT_THROW(conjecture_probe(9, b), BudgetExceeded);
  EXPECT_TRUE(conjecture_probe(2).empty());

  const auto seven = conjecture_probe(7);
  for (const auto& r : seven) {
    if (GroupElement(r.element) != kT) continue;
    const auto j = nlohmann::json::parse(to_json(r));
    EXPECT_EQ(j["element"], nlohmann::json::parse("[[1,1],[0,1]]"));
    EXPECT_EQ(j["reduced"], nlohmann::json::parse("[2,1,1]"));
    EXPECT_EQ(j["quiddity"], nlohmann::json::parse("[2,1,1,1,1,2,1]"));
    EXPECT_EQ(j["index_twice"], 2);
    EXPECT_EQ(j["dissections_found"], 1);
  }
}
