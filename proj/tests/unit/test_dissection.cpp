#include "quiddity/dissection.hpp"
#include "quiddity/enumeration.hpp"

#include "../support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace quiddity;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++k;
  return k;
}

Entry face_sum(const Dissection& d) {
  Entry s = 0;
  for (const auto& f : faces(d)) s += static_cast<Entry>(f.size());
  return s;
}

// The centrally symmetric tetradecagon whose half quiddity is (3,2,1,2,1,2,1).
const Dissection kSymmetric14(14, {{0, 7}, {0, 8}, {1, 7}, {3, 5}, {10, 12}});

}  // namespace

TEST(DissectionType, ValidatesDiagonals) {
  EXPECT_THROW(Dissection(2), DomainError);
  EXPECT_THROW(Dissection(6, {{0, 1}}), DomainError);
  EXPECT_THROW(Dissection(6, {{0, 5}}), DomainError);
  EXPECT_THROW(Dissection(6, {{0, 6}}), DomainError);
  EXPECT_THROW(Dissection(6, {{0, 3}, {3, 0}}), DomainError);
  EXPECT_THROW(Dissection(6, {{0, 3}, {1, 4}}), DomainError);
  const Dissection d(6, {{4, 2}, {0, 2}});
  EXPECT_EQ(d.diagonals(), (std::vector<Diagonal>{{0, 2}, {2, 4}}));
  EXPECT_TRUE(diagonals_cross({0, 3}, {1, 4}));
  EXPECT_FALSE(diagonals_cross({0, 3}, {3, 5}));
  EXPECT_FALSE(diagonals_cross({0, 5}, {1, 3}));
}

TEST(Faces, SmallExamples) {
  EXPECT_EQ(faces(Dissection(6)), (std::vector<Face>{{0, 1, 2, 3, 4, 5}}));
  EXPECT_EQ(faces(Dissection(7, {{1, 6}})), (std::vector<Face>{{0, 1, 6}, {1, 2, 3, 4, 5, 6}}));
  const auto halves = faces(Dissection(10, {{0, 5}}));
  ASSERT_EQ(halves.size(), 2u);
  EXPECT_EQ(halves[0].size(), 6u);
  EXPECT_EQ(halves[1].size(), 6u);
}

TEST(Faces, MatchAngularTracing) {
  for (std::size_t n = 3; n <= 9; ++n) {
    for (const Dissection& d : enumerate_dissections(n)) {
      const auto f = faces(d);
      EXPECT_EQ(f, oracle::traced_faces(n, d.diagonals()));
      EXPECT_EQ(f.size(), d.diagonals().size() + 1);
      Entry excess = 0;
      for (const auto& face : f) excess += static_cast<Entry>(face.size()) - 2;
      EXPECT_EQ(excess, static_cast<Entry>(n) - 2);
    }
  }
}

TEST(Validity, ThreeDivisibleFaces) {
  EXPECT_TRUE(is_3d_dissection(Dissection(6)));
  EXPECT_FALSE(is_3d_dissection(Dissection(8)));
  EXPECT_FALSE(is_3d_dissection(Dissection(4)));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 2; j < 8; ++j) {
      if (i == 0 && j == 7) continue;
      EXPECT_FALSE(is_3d_dissection(Dissection(8, {{i, j}}))) << i << "," << j;
    }
  }
}

TEST(Quiddity, CountsFacesAtEachVertex) {
  EXPECT_EQ(quiddity_of(Dissection(6)), (Word{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(quiddity_of(Dissection(9)), (Word{1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(quiddity_of(Dissection(7, {{1, 6}})), (Word{1, 2, 1, 1, 1, 1, 2}));
  EXPECT_EQ(quiddity_of(Dissection(5, {{1, 3}, {1, 4}})), (Word{1, 3, 1, 2, 2}));
  EXPECT_THROW(quiddity_of(Dissection(8)), DomainError);
  for (std::size_t n = 3; n <= 9; ++n) {
    for (const Dissection& d : enumerate_dissections(n)) {
      EXPECT_EQ(quiddity_of(d).vector(), oracle::face_count_quiddity(n, d.diagonals()));
    }
  }
}

TEST(Profile, SizesAndHouses) {
  const auto p = profile(Dissection(7, {{1, 6}}));
  EXPECT_EQ(p.face_sizes, (std::vector<std::size_t>{3, 6}));
  EXPECT_EQ(p.by_d, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}}));
  EXPECT_EQ(p.even_face_count, 1u);
}

TEST(Enumeration, MatchesSubsetSearch) {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::set<std::vector<Diagonal>> got;
    for (const Dissection& d : enumerate_dissections(n)) got.insert(d.diagonals());
    EXPECT_EQ(got, oracle::subset_dissections(n)) << "n " << n;
  }
}

TEST(Enumeration, FrozenCounts) {
  std::vector<std::size_t> counts;
  for (std::size_t n = 3; n <= 12; ++n) counts.push_back(enumerate_dissections(n).size());
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 2, 5, 15, 49, 168, 595, 2160, 7997, 30083}));
}

TEST(Enumeration, OctagonHexagonPlusTwoTriangles) {
  std::set<Dissection> classes;
  for (const Dissection& d : enumerate_dissections(8)) {
    if (profile(d).face_sizes == std::vector<std::size_t>{3, 3, 6}) classes.insert(canonical_dihedral(d));
  }
  EXPECT_EQ(classes.size(), 4u);
}

TEST(Enumeration, Budget) {
  Budget b;
  b.dissection_max_n = 9;
  EXPECT_THROW(enumerate_dissections(10, b), BudgetExceeded);
  EXPECT_THROW(dissections_with_quiddity(Word{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, b), BudgetExceeded);
}

TEST(SameQuiddity, DistinctDissections) {
  EXPECT_GE(dissections_with_quiddity(Word{1, 2, 1, 2, 1, 2, 1, 2}).size(), 2u);
  EXPECT_EQ(dissections_with_quiddity(Word{1, 1, 1, 1, 1, 1}), (std::vector<Dissection>{Dissection(6)}));
  EXPECT_EQ(dissections_with_quiddity(Word{1, 1, 1}), (std::vector<Dissection>{Dissection(3)}));
  EXPECT_TRUE(dissections_with_quiddity(Word{2, 2, 2}).empty());
}

TEST(Certificate, BuildsTheExpectedDissections) {
  EXPECT_EQ(from_certificate(reduce(Word{1, 1, 1, 1, 1, 1})), Dissection(6));
  EXPECT_EQ(from_certificate(reduce(Word{2, 1, 2, 1, 1, 1, 1})), Dissection(7, {{0, 2}}));
  EXPECT_EQ(from_certificate(reduce(Word{1, 3, 1, 2, 2})), Dissection(5, {{1, 3}, {1, 4}}));
  EXPECT_THROW(from_certificate(reduce(Word{1, 2})), DomainError);
}

TEST(Certificate, RoundTripAndFaceCounts) {
  for (Problem p : {Problem::I, Problem::II}) {
    for (std::size_t n = 3; n <= 10; ++n) {
      for (const Word& w : generative_enumerate(p, n).words) {
        const auto cert = reduce(w);
        const Dissection d = from_certificate(cert);
        ASSERT_EQ(quiddity_of(d), w);
        const auto prof = profile(d);
        std::size_t weighted = 0;
        for (auto [k, count] : prof.by_d) weighted += (k - 1) * count;
        EXPECT_EQ(prof.face_sizes.size() - 1, cert.type1_count) << w;
        EXPECT_EQ(weighted, cert.type2_count) << w;
        EXPECT_EQ(face_sum(d), static_cast<Entry>(3 * (cert.type1_count + cert.type2_count + 1)));
        EXPECT_EQ(w.sum(), face_sum(d));
        EXPECT_EQ(even_face_parity(d), p == Problem::I ? Parity::Odd : Parity::Even);
      }
    }
  }
}

TEST(Parity, DecidesTheProblem) {
  EXPECT_EQ(even_face_parity(Dissection(6)), Parity::Odd);
  EXPECT_EQ(even_face_parity(Dissection(9)), Parity::Even);
  EXPECT_EQ(even_face_parity(Dissection(10, {{0, 5}})), Parity::Even);
  EXPECT_EQ(to_string(Parity::Odd), "odd");
  for (std::size_t n = 3; n <= 12; ++n) {
    for_each_dissection(n, [](const Dissection& d) {
      const auto expected =
          even_face_parity(d) == Parity::Odd ? SolutionClass::ProblemI : SolutionClass::ProblemII;
      ASSERT_EQ(solution_class(quiddity_of(d)), expected) << to_json(d);
    });
  }
}

TEST(Triangulations, SumAndClass) {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (const Dissection& d : enumerate_dissections(n)) {
      if (d.diagonals().size() != n - 3) continue;
      const Word q = quiddity_of(d);
      EXPECT_EQ(q.sum(), 3 * static_cast<Entry>(n) - 6);
      EXPECT_EQ(solution_class(q), SolutionClass::ProblemII);
      EXPECT_EQ(reduce(q).type2_count, 0u);
    }
  }
}

TEST(Symmetry, CentralSymmetryAndHalves) {
  EXPECT_TRUE(is_centrally_symmetric(kSymmetric14));
  EXPECT_EQ(half_quiddity(kSymmetric14), (Word{3, 2, 1, 2, 1, 2, 1}));
  EXPECT_EQ(solution_class(half_quiddity(kSymmetric14)), SolutionClass::ProblemIII);
  EXPECT_THROW(is_centrally_symmetric(Dissection(9)), DomainError);

  const Dissection hexagons(10, {{0, 5}});
  EXPECT_EQ(half_quiddity(hexagons), (Word{2, 1, 1, 1, 1}));
  EXPECT_EQ(half_quiddity(hexagons).canonical_rotation(), (Word{1, 1, 1, 1, 2}));
  EXPECT_EQ(half_quiddity(hexagons, 3), (Word{1, 1, 2, 1, 1}));

  const Dissection fan(10, {{0, 5}, {0, 6}, {0, 7}, {0, 8}, {1, 5}, {2, 5}, {3, 5}});
  EXPECT_TRUE(is_centrally_symmetric(fan));
  EXPECT_EQ(half_quiddity(fan), (Word{5, 2, 2, 2, 1}));

  EXPECT_THROW(half_quiddity(Dissection(6, {{0, 2}, {0, 3}, {0, 4}})), DomainError);
}

TEST(Symmetry, PeriodicQuiddityWithoutSymmetricDissection) {
  const Word doubled = Word{3, 2, 1, 2, 1, 2, 1}.doubled();
  const auto all = dissections_with_quiddity(doubled);
  ASSERT_EQ(all.size(), 4u);
  std::size_t asymmetric = 0;
  for (const Dissection& d : all) {
    if (is_centrally_symmetric(d)) continue;
    ++asymmetric;
    EXPECT_EQ(half_quiddity(d), (Word{3, 2, 1, 2, 1, 2, 1}));
  }
  EXPECT_EQ(asymmetric, 2u);
  EXPECT_NE(std::find(all.begin(), all.end(), kSymmetric14), all.end());
}

TEST(Symmetry, BuildSymmetricForEveryProblemIIISolution) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Word& w : generative_enumerate(Problem::III, n).words) {
      const Dissection d = build_symmetric(w);
      ASSERT_TRUE(is_centrally_symmetric(d)) << w;
      EXPECT_EQ(quiddity_of(d), w.doubled());
      EXPECT_EQ(half_quiddity(d), w);
    }
  }
  EXPECT_EQ(build_symmetric(Word{3, 2, 1, 2, 1, 2, 1}), kSymmetric14);
  EXPECT_THROW(build_symmetric(Word{1, 1, 1}), NotASolutionError);
  EXPECT_EQ(dissection_for(Word{1, 3, 1, 2, 2}), Dissection(5, {{1, 3}, {1, 4}}));
  EXPECT_EQ(dissection_for(Word{1, 2}), Dissection(4, {{1, 3}}));
}

TEST(Dihedral, ImagesKeepValidity) {
  const Dissection d(7, {{1, 6}});
  EXPECT_EQ(rotate(d, 1), Dissection(7, {{0, 2}}));
  EXPECT_EQ(reflect(d), Dissection(7, {{1, 6}}));
  EXPECT_EQ(reflect(Dissection(7, {{0, 2}})), Dissection(7, {{0, 5}}));
  EXPECT_EQ(canonical_dihedral(Dissection(7, {{3, 5}})), Dissection(7, {{0, 2}}));
}

TEST(Output, JsonDotSvg) {
  const Dissection d(10, {{0, 5}});
  EXPECT_EQ(to_json(d), R"({"diagonals":[[0,5]],"n":10})");
  EXPECT_EQ(dissection_from_json(to_json(kSymmetric14)), kSymmetric14);
  EXPECT_THROW(dissection_from_json("{\"n\":6}"), DomainError);
  EXPECT_THROW(dissection_from_json("not json"), DomainError);
  EXPECT_THROW(dissection_from_json(R"({"n":6,"diagonals":[[0,3],[1,4]]})"), DomainError);

  const std::string dot = to_dot(d);
  EXPECT_EQ(dot.rfind("graph dissection {", 0), 0u);
  EXPECT_EQ(count_of(dot, " -- "), 11u);
  EXPECT_EQ(count_of(dot, "style=dashed"), 1u);

  const std::string svg = to_svg(d);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count_of(svg, "<circle"), 10u);
  EXPECT_EQ(count_of(svg, "<line"), 1u);
  EXPECT_NE(svg.find("cx=\"200.00\" cy=\"40.00\""), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
