#include "sepaut/autassembly.hpp"
#include "sepaut/errors.hpp"
#include "sepaut/quasitorus.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <random>

namespace sepaut {
namespace {

IntVector ints(std::initializer_list<long long> values) {
  IntVector out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

CanonicalForm reference_form() { return parse_canonical("X1^10*X2^11 + Y1^10 + Y2^10 + Y3^10"); }

TEST(CharacterMatrix, ReferenceExample) {
  CharacterData const cd = character_matrix(reference_form());
  // Canonical order is (X2, X1, Y1, Y2, Y3): the mixed exponents sort descending.
  ASSERT_EQ(cd.characters.size(), 4u);
  EXPECT_EQ(cd.characters[0], ints({11, 10, 0, 0, 0}));
  EXPECT_EQ(cd.characters[1], ints({0, 0, 10, 0, 0}));
  EXPECT_EQ(cd.characters[3], ints({0, 0, 0, 0, 10}));
  EXPECT_EQ(cd.difference_matrix,
            (IntMatrix{{-11, -10, 10, 0, 0}, {-11, -10, 0, 10, 0}, {-11, -10, 0, 0, 10}}));
}

TEST(CharacterMatrix, SmallForms) {
  EXPECT_EQ(character_matrix(parse_canonical("y1^3+y2^3+y3^3")).difference_matrix,
            (IntMatrix{{-3, 3, 0}, {-3, 0, 3}}));
  // Pure blocks descend by exponent, so y^3 comes first.
  EXPECT_EQ(character_matrix(parse_canonical("x^2+y^3")).difference_matrix,
            (IntMatrix{{-3, 2}}));
}

TEST(CharacterMatrix, SingleMonomial) {
  EXPECT_THROW(character_matrix(parse_canonical("x^2*y^3")), SingleMonomialError);
  EXPECT_THROW(character_matrix(parse_canonical("x^5")), SingleMonomialError);
}

TEST(QuasitorusStructure, ReferenceExample) {
  QuasitorusDescription const q = quasitorus_structure(character_matrix(reference_form()));
  EXPECT_EQ(q.torus_rank, 2u);
  EXPECT_EQ(q.torsion, ints({10, 10}));
  EXPECT_EQ(q.cocharacter_basis.size(), 2u);
  ASSERT_EQ(q.torsion_generators.size(), 2u);
}

TEST(QuasitorusStructure, Fermat) {
  QuasitorusDescription const q =
      quasitorus_structure(character_matrix(parse_canonical("y1^3+y2^3+y3^3")));
  EXPECT_EQ(q.torus_rank, 1u);
  EXPECT_EQ(q.torsion, ints({3, 3}));
  ASSERT_EQ(q.cocharacter_basis.size(), 1u);
  EXPECT_EQ(q.cocharacter_basis[0], ints({1, 1, 1}));
}

TEST(QuasitorusStructure, Connected) {
  QuasitorusDescription const q = quasitorus_structure(character_matrix(parse_canonical("x^2+y^3")));
  EXPECT_EQ(q.torus_rank, 1u);
  EXPECT_TRUE(q.torsion.empty());
  EXPECT_TRUE(q.torsion_generators.empty());
}

TEST(CountTorsionPoints, Examples) {
  CharacterData const fermat = character_matrix(parse_canonical("y1^3+y2^3+y3^3"));
  EXPECT_EQ(count_torsion_points_mod(fermat, 1), 1u);
  EXPECT_EQ(count_torsion_points_mod(fermat, 3), 27u);
  CharacterData const reference = character_matrix(reference_form());
  EXPECT_EQ(count_torsion_points_mod(reference, 1), 1u);
  EXPECT_EQ(count_torsion_points_mod(reference, 10), 10000u);
  EXPECT_EQ(torsion_count_formula(reference, 10), 10000);
}

TEST(CountTorsionPoints, Guard) {
  CharacterData const reference = character_matrix(reference_form());
  EXPECT_NO_THROW(count_torsion_points_mod(reference, 25));  // 25^5 < 10^7
  EXPECT_THROW(count_torsion_points_mod(reference, 26), EnumerationTooLargeError);
  EXPECT_THROW(count_torsion_points_mod(reference, 0), std::invalid_argument);
}

// Properties.

TEST(QuasitorusProperties, RankAndTorusRank) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    CanonicalForm const cf = testing::random_form(rng, 8, 9);
    CharacterData const cd = character_matrix(cf);
    EXPECT_EQ(rank(cd.difference_matrix), cf.monomial_count() - 1);
    QuasitorusDescription const q = quasitorus_structure(cd);
    std::size_t expected = 1;
    for (auto const& b : cf.mixed_blocks) expected += b.variables.size() - 1;
    EXPECT_EQ(q.torus_rank, expected);
    EXPECT_EQ(q.torus_rank, cf.variable_count() - cf.monomial_count() + 1);
  }
}

TEST(QuasitorusProperties, GeneratorsSatisfyCongruencesWithExactOrder) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    CanonicalForm const cf = testing::random_form(rng, 7, 8, 2);
    CharacterData const cd = character_matrix(cf);
    QuasitorusDescription const q = quasitorus_structure(cd);
    for (auto const& a : q.cocharacter_basis) {
      for (std::size_t k = 0; k < cd.characters.size(); ++k)
        EXPECT_EQ(dot(cd.characters[k], a), dot(cd.characters[0], a));
    }
    for (auto const& t : q.torsion_generators) {
      EXPECT_TRUE(preserves_zero_set(cd, t.order, t.exponents));
      // No proper divisor of the order annihilates the element.
      for (BigInt m = 1; m < t.order; ++m) {
        if (t.order % m != 0) continue;
        bool trivial = true;
        for (auto const& e : t.exponents)
          if ((e * m) % t.order != 0) trivial = false;
        EXPECT_FALSE(trivial) << "order " << t.order << " collapses to " << m;
      }
    }
  }
}

TEST(QuasitorusProperties, CountMatchesFormula) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 25; ++i) {
    CanonicalForm const cf = testing::random_form(rng, 5, 6);
    CharacterData const cd = character_matrix(cf);
    for (std::uint64_t N = 2; N <= 12; ++N) {
      std::uint64_t total = 1;
      for (std::size_t v = 0; v < cf.variable_count(); ++v) total *= N;
      if (total > 2'000'000) break;
      EXPECT_EQ(BigInt(count_torsion_points_mod(cd, N)), torsion_count_formula(cd, N))
          << render(cf) << " mod " << N;
    }
  }
}

TEST(QuasitorusProperties, FermatFamily) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (Exponent alpha = 2; alpha <= 7; ++alpha) {
      QuasitorusDescription const q = quasitorus_structure(character_matrix(fermat_form(n, alpha)));
      EXPECT_EQ(q.torus_rank, 1u);
      EXPECT_EQ(q.torsion, IntVector(n - 1, BigInt(alpha)));
    }
  }
}

TEST(QuasitorusProperties, BaseMonomialIrrelevant) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    CanonicalForm const cf = testing::random_form(rng, 7, 9);
    QuasitorusDescription const reference = quasitorus_structure(character_matrix(cf));
    for (std::size_t base = 1; base < cf.monomial_count(); ++base) {
      QuasitorusDescription const q = quasitorus_structure(character_matrix(cf, base));
      EXPECT_EQ(q.torus_rank, reference.torus_rank);
      EXPECT_EQ(q.torsion, reference.torsion);
    }
  }
}

}  // namespace
}  // namespace sepaut
