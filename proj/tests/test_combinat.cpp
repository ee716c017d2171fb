#include <gtest/gtest.h>

#include <random>
#include <set>

#include "skein/combinat.hpp"
#include "skein/error.hpp"

using namespace skein;

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::uint64_t catalan(int k) { return binom(2 * k, k) / (k + 1); }

// Noncrossing by the definition: no a<b<c<d with a,c in one block and b,d in another.
bool crosses_by_definition(const std::vector<std::vector<int>>& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      for (int a : blocks[x])
        for (int c : blocks[x])
          for (int b : blocks[y])
            for (int d : blocks[y])
              if (a < b && b < c && c < d) return true;
    }
  return false;
}

} // namespace

TEST(Matching, ParseAndPrint) {
  auto m = Matching::parse("{{3,1},{2,4}}");
  EXPECT_EQ(m.n(), 4);
  EXPECT_EQ(m.str(), "[[1,3],[2,4]]");
  EXPECT_EQ(m.partner(1), 3);
  EXPECT_EQ(m.partner(4), 2);
  EXPECT_EQ(Matching::parse("[]", 3).str(), "[]");
  EXPECT_EQ(Matching::parse("[[1,2]]", 5).n(), 5);
}

TEST(Matching, RejectsOverlappingPairs) {
  EXPECT_THROW(Matching::parse("[[1,2],[2,3]]"), ParseError);
  EXPECT_THROW(Matching::parse("[[1,1]]"), ParseError);
  EXPECT_THROW(Matching::parse("[[1,2]", 4), ParseError);
  EXPECT_THROW(Matching::parse("[[1,7]]", 4), ParseError);
}

TEST(SetPartition, CanonicalBlocks) {
  auto p = SetPartition::parse("{{4,2},{3,1}}");
  EXPECT_EQ(p.str(), "[[1,3],[2,4]]");
  EXPECT_EQ(p.num_blocks(), 2);
  EXPECT_EQ(p.block_index(4), 1);
  EXPECT_FALSE(is_noncrossing(p));
  EXPECT_THROW(SetPartition::parse("[[1,2],[2,3]]"), ParseError);
}

TEST(SetPartition, FromLabels) {
  std::vector<int> labels{7, 3, 7, 5};
  auto p = SetPartition::from_labels(labels);
  EXPECT_EQ(p.str(), "[[1,3],[2],[4]]");
  EXPECT_EQ(p.num_singletons(), 2);
  EXPECT_FALSE(p.singleton_free());
}

TEST(Enumeration, InvolutionCounts) {
  const std::uint64_t expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(enumerate_matchings(n).size(), expected[n]) << "n=" << n;
}

TEST(Enumeration, MotzkinAsGradedCatalanSum) {
  for (int n = 0; n <= 10; ++n) {
    std::uint64_t total = 0;
    for (int k = 0; 2 * k <= n; ++k) {
      const auto graded = enumerate_ncm_pairs(n, k);
      EXPECT_EQ(graded.size(), binom(n, 2 * k) * catalan(k)) << "n=" << n << " k=" << k;
      total += graded.size();
    }
    EXPECT_EQ(enumerate_ncm(n).size(), total);
  }
}

TEST(Enumeration, NoncrossingPartitionsAreCatalan) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(enumerate_ncp(n).size(), catalan(n)) << "n=" << n;
}

TEST(Enumeration, NarayanaByBlocks) {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k)
      EXPECT_EQ(enumerate_ncp(n, false, k).size(), binom(n, k) * binom(n, k - 1) / n) << "n=" << n << " k=" << k;
}

TEST(Enumeration, SingletonFreeAgreesWithFilter) {
  for (int n = 0; n <= 8; ++n) {
    std::set<SetPartition> filtered;
    for (const auto& p : enumerate_set_partitions(n))
      if (p.singleton_free() && !crosses_by_definition(p.blocks())) filtered.insert(p);
    const auto direct = enumerate_ncp(n, true);
    EXPECT_EQ(std::set<SetPartition>(direct.begin(), direct.end()), filtered) << "n=" << n;
  }
}

TEST(Enumeration, CrossingPredicateMatchesDefinition) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : enumerate_set_partitions(n))
      EXPECT_EQ(is_noncrossing(p), !crosses_by_definition(p.blocks())) << p.str();
}

TEST(Enumeration, SortedAndUnique) {
  auto ms = enumerate_matchings(6);
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
  EXPECT_EQ(std::set<Matching>(ms.begin(), ms.end()).size(), ms.size());
  auto ps = enumerate_set_partitions(6);
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
}

TEST(Enumeration, EmptyGroundSet) {
  ASSERT_EQ(enumerate_matchings(0).size(), 1u);
  EXPECT_EQ(enumerate_matchings(0)[0].str(), "[]");
  EXPECT_EQ(enumerate_set_partitions(0).size(), 1u);
}

TEST(Enumeration, SizeLimit) {
  EXPECT_THROW(enumerate_set_partitions(12), SizeLimitError);
  EXPECT_THROW(enumerate_matchings(11), SizeLimitError);
  EXPECT_NO_THROW(enumerate_matchings(11, EnumLimits::uniform(11)));
  EXPECT_THROW(enumerate_ncm(-1), DomainError);
}

TEST(Permutation, WordRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    auto sigma = Permutation::random(n, rng);
    auto w = sigma.word();
    EXPECT_EQ(static_cast<int>(w.size()), sigma.inversions());
    EXPECT_EQ(Permutation::from_word(n, w), sigma);
    EXPECT_TRUE((sigma * sigma.inverse()).is_identity());
  }
}

TEST(Permutation, CompositionIsFunctionComposition) {
  auto a = Permutation::adjacent(3, 1), b = Permutation::adjacent(3, 2);
  auto ab = a * b;
  for (int x = 1; x <= 3; ++x) EXPECT_EQ(ab(x), a(b(x)));
  EXPECT_EQ(ab.sign(), 1);
}

TEST(Permutation, CycleType) {
  std::vector<int> parts{3, 2, 2, 1};
  auto sigma = Permutation::from_cycle_type(parts);
  EXPECT_EQ(sigma.cycle_type(), parts);
  EXPECT_EQ(sigma.n(), 8);
  EXPECT_EQ(sigma.sign(), 1);
}

TEST(Relabelling, Adjacent) {
  auto m = Matching::parse("[[1,2],[3,4]]");
  EXPECT_EQ(swap_adjacent(2, m).str(), "[[1,3],[2,4]]");
  auto p = SetPartition::parse("[[1,2,3],[4]]");
  EXPECT_EQ(swap_adjacent(3, p).str(), "[[1,2,4],[3]]");
}

TEST(Uncrossing, SmallestExample) {
  EXPECT_EQ(uncrossing_word(Matching::parse("[[1,3],[2,4]]")), std::vector<int>{2});
  EXPECT_EQ(uncrossing_word(SetPartition::parse("[[1,3],[2,4]]")), std::vector<int>{2});
  EXPECT_TRUE(uncrossing_word(Matching::parse("[[1,4],[2,3]]")).empty());
}

TEST(Uncrossing, BothStrategiesUncross) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : enumerate_set_partitions(n))
      for (auto strategy : {UncrossStrategy::Greedy, UncrossStrategy::BlockSort}) {
        auto q = p;
        const auto letters = uncrossing_word(p, strategy);
        for (int i : letters) q = swap_adjacent(i, q);
        EXPECT_TRUE(is_noncrossing(q)) << p.str();
        EXPECT_EQ(apply_perm(word_permutation(n, letters), p), q);
      }
}

TEST(Parsing, NestedLists) {
  EXPECT_EQ(parse_nested_list("∅").size(), 0u);
  EXPECT_EQ(parse_nested_list("{}").size(), 0u);
  auto l = parse_nested_list(" [ [1, 2] , [3 4 5] ] ");
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[1], (std::vector<int>{3, 4, 5}));
  EXPECT_THROW(parse_nested_list("[[1,2]"), ParseError);
  EXPECT_THROW(parse_nested_list("[[1,x]]"), ParseError);
}
