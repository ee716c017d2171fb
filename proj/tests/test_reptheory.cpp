#include <gtest/gtest.h>

#include <random>

#include "skein/error.hpp"
#include "skein/reptheory.hpp"

using namespace skein;

namespace {

IntPartition L(std::vector<int> parts) { return IntPartition(std::move(parts)); }

// Column orthogonality: sum over lambda of chi(a) chi(b) = z_a [a == b].
Rational column_product(int n, const IntPartition& a, const IntPartition& b) {
  Rational s = 0;
  for (const auto& lambda : partitions_of(n)) s += mn_character(lambda, a) * mn_character(lambda, b);
  return s;
}

} // namespace

TEST(IntPartition, Basics) {
  EXPECT_EQ(L({3, 1}).conjugate(), L({2, 1, 1}));
  EXPECT_EQ(IntPartition::two_column_hook(2, 6), L({2, 2, 1, 1}));
  EXPECT_EQ(IntPartition::two_column_hook(0, 2), L({1, 1}));
  EXPECT_EQ(L({2, 2, 1}).str(), "(2,2,1)");
  EXPECT_THROW(L({1, 2}), DomainError);
  EXPECT_THROW(IntPartition::two_column_hook(3, 5), DomainError);
}

TEST(IntPartition, PartitionCounts) {
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
}

TEST(Characters, DimensionsMatchHookFormula) {
  for (int n = 1; n <= 8; ++n) {
    IntPartition id(std::vector<int>(n, 1));
    std::uint64_t sum_sq = 0;
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(mn_character(lambda, id), Rational(static_cast<unsigned long>(hook_dim(lambda))));
      sum_sq += hook_dim(lambda) * hook_dim(lambda);
    }
    EXPECT_EQ(sum_sq, factorial(n));
  }
}

TEST(Characters, KnownValues) {
  EXPECT_EQ(mn_character(L({2, 1}), L({3})), -1);
  EXPECT_EQ(mn_character(L({2, 2}), L({2, 2})), 2);
  EXPECT_EQ(mn_character(L({3, 1, 1}), L({3, 1, 1})), 0);
  EXPECT_EQ(mn_character(L({3, 1, 1}), L({2, 2, 1})), -2);
  EXPECT_EQ(mn_character(L({1, 1, 1, 1}), L({2, 1, 1})), -1);
  EXPECT_THROW(mn_character(L({2}), L({1})), DomainError);
}

TEST(Characters, Orthogonality) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        Rational want = a == b ? Rational(static_cast<unsigned long>(centralizer_size(a))) : Rational(0);
        EXPECT_EQ(column_product(n, a, b), want);
      }
    for (const auto& lambda : partitions_of(n)) {
      auto chi = ClassFunction::irreducible(lambda);
      EXPECT_EQ(inner_product(chi, chi), 1);
    }
  }
}

TEST(Characters, ClassSizesSumToFactorial) {
  for (int n = 0; n <= 9; ++n) {
    std::uint64_t total = 0;
    for (const auto& ct : partitions_of(n)) total += class_size(ct);
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Decompose, RegularCharacter) {
  const int n = 5;
  ClassFunction reg(n);
  for (const auto& ct : partitions_of(n)) reg.set(ct, ct == IntPartition(std::vector<int>(n, 1)) ? 120 : 0);
  for (const auto& [lambda, mult] : decompose(reg)) EXPECT_EQ(static_cast<std::uint64_t>(mult), hook_dim(lambda));
}

TEST(Decompose, RejectsNonCharacters) {
  ClassFunction half(3);
  for (const auto& ct : partitions_of(3)) half.set(ct, Rational(1, 2));
  EXPECT_THROW(decompose(half), DomainError);
}

TEST(Pieri, SmallCases) {
  auto h = pieri(L({1}), 1, false);
  EXPECT_EQ(h, (std::vector<IntPartition>{L({1, 1}), L({2})}));
  auto v = pieri(L({2, 1}), 2, true);
  EXPECT_EQ(v, (std::vector<IntPartition>{L({2, 1, 1, 1}), L({2, 2, 1}), L({3, 1, 1}), L({3, 2})}));
  EXPECT_EQ(pieri(IntPartition(), 3, true), std::vector<IntPartition>{L({1, 1, 1})});
}

TEST(Pieri, DimensionIdentity) {
  for (int m1 = 0; m1 <= 5; ++m1)
    for (const auto& mu : partitions_of(m1))
      for (int m2 = 0; m2 <= 4; ++m2)
        for (bool dual : {false, true}) {
          std::uint64_t sum = 0;
          for (const auto& l : pieri(mu, m2, dual)) sum += hook_dim(l);
          std::uint64_t binom = factorial(m1 + m2) / (factorial(m1) * factorial(m2));
          EXPECT_EQ(sum, binom * hook_dim(mu)) << mu.str() << " + " << m2;
        }
}

TEST(ModuleCharacter, SingletonFreePiecesAreIrreducible) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      auto got = decompose(module_character(SkeinModule::SingletonFreePartitions, n, k));
      std::map<IntPartition, int> want{{IntPartition::two_column_hook(k, n), 1}};
      EXPECT_EQ(got, want) << "n=" << n << " k=" << k;
    }
}

TEST(ModuleCharacter, TraceDependsOnlyOnCycleType) {
  std::mt19937_64 rng(5);
  const int n = 6;
  auto chi = module_character(SkeinModule::Partitions, n, std::nullopt);
  for (int trial = 0; trial < 20; ++trial) {
    auto sigma = Permutation::random(n, rng);
    IntPartition ct(sigma.cycle_type());
    EXPECT_EQ(module_trace(SkeinModule::Partitions, n, std::nullopt, sigma), chi(ct)) << sigma.str();
  }
}

TEST(ModuleCharacter, DimensionIsTraceOfIdentity) {
  const int n = 7;
  auto chi = module_character(SkeinModule::Matchings, n, std::nullopt);
  EXPECT_EQ(chi(IntPartition(std::vector<int>(n, 1))), 127);
}

TEST(CharacterTable, Csv) {
  auto csv = character_table_csv(3);
  EXPECT_EQ(csv, "lambda,\"(3)\",\"(2,1)\",\"(1,1,1)\"\n"
                 "\"(3)\",1,1,1\n"
                 "\"(2,1)\",-1,0,2\n"
                 "\"(1,1,1)\",1,-1,1\n");
}
