#include <gtest/gtest.h>

#include <random>

#include "skein/diagram_ring.hpp"
#include "skein/error.hpp"

using namespace skein;

namespace {

Matching M(const char* s, int n = -1) { return Matching::parse(s, n); }

RingElement mono(int n, std::vector<Pair> edges) { return RingElement(EdgeMonomial(n, std::move(edges))); }

} // namespace

TEST(EdgeMonomial, Parse) {
  EXPECT_EQ(EdgeMonomial::parse("{1,2}{3,4}").str(), "{1,2}{3,4}");
  EXPECT_EQ(EdgeMonomial::parse("{3,4} * [2,1]").str(), "{1,2}{3,4}");
  EXPECT_EQ(EdgeMonomial::parse("{1,2}·{1,3}").degree(), 2);
  EXPECT_EQ(EdgeMonomial::parse("1", 4).str(), "1");
  EXPECT_THROW(EdgeMonomial::parse("{1,2"), ParseError);
  EXPECT_THROW(EdgeMonomial::parse("{1,1}"), ParseError);
}

TEST(NormalForm, DegenerateProductsVanish) {
  DiagramRing ring(4);
  EXPECT_TRUE(ring.normal_form(EdgeMonomial::parse("{1,2}{1,3}", 4)).is_zero());
  EXPECT_TRUE(ring.normal_form(EdgeMonomial::parse("{1,2}{1,2}", 4)).is_zero());
}

TEST(NormalForm, PtolemyRewrite) {
  DiagramRing ring(4);
  auto nf = ring.normal_form(EdgeMonomial::parse("{1,3}{2,4}"));
  EXPECT_EQ(nf.pretty(), "-{1,2}{3,4} - {1,4}{2,3}");
  // The three pairings sum to zero in the quotient.
  auto sum = ring.normalize(mono(4, {{1, 2}, {3, 4}}) + mono(4, {{1, 3}, {2, 4}}) + mono(4, {{1, 4}, {2, 3}}));
  EXPECT_TRUE(sum.is_zero());
}

TEST(NormalForm, AgreesWithMatchingProjection) {
  for (int n = 0; n <= 8; ++n) {
    DiagramRing ring(n);
    for (const auto& m : enumerate_matchings(n))
      EXPECT_EQ(to_matching_vector(ring.normal_form(EdgeMonomial::from_matching(m))), project_matching(m)) << m.str();
  }
}

TEST(NormalForm, SkeinActionIsNormalFormOfRelabelling) {
  for (int n = 2; n <= 7; ++n) {
    DiagramRing ring(n);
    for (const auto& m : enumerate_ncm(n))
      for (int i = 1; i < n; ++i) {
        auto relabelled = EdgeMonomial::from_matching(swap_adjacent(i, m));
        EXPECT_EQ(to_ring_element(skein_act_ncm(i, m)), -ring.normal_form(relabelled)) << m.str() << " i=" << i;
      }
  }
}

TEST(NormalForm, RandomRewriteOrderIsConfluent) {
  std::mt19937_64 rng(3);
  DiagramRing ring(8);
  for (const auto& m : enumerate_matchings(8)) {
    if (m.num_pairs() != 4 || is_noncrossing(m)) continue;
    auto e = EdgeMonomial::from_matching(m);
    EXPECT_EQ(ring.normal_form(e, rng), ring.normal_form(e)) << m.str();
  }
}

TEST(Multiply, CommutativeAndAssociative) {
  DiagramRing ring(6);
  auto a = ring.edge(1, 4) + ring.edge(2, 5);
  auto b = ring.edge(3, 6) - 2 * ring.edge(1, 2);
  auto c = ring.edge(2, 3) + ring.edge(5, 6);
  EXPECT_EQ(ring.multiply(a, b), ring.multiply(b, a));
  EXPECT_EQ(ring.multiply(ring.multiply(a, b), c), ring.multiply(a, ring.multiply(b, c)));
  EXPECT_EQ(ring.multiply(ring.one(), a), ring.normalize(a));
}

TEST(H, Examples) {
  DiagramRing ring(4);
  EXPECT_TRUE(ring.h(std::vector<int>{3}).is_zero());
  EXPECT_EQ(ring.h(std::vector<int>{1, 2, 3}).size(), 3u);
  EXPECT_TRUE(ring.multiply(ring.h_full(), ring.h_full()).is_zero());
  EXPECT_THROW(BlockSubset(4, {1, 1}), DomainError);
  EXPECT_THROW(BlockSubset(4, {5}), DomainError);
}

TEST(Kappa, ImageVanishes) {
  DiagramRing ring(6);
  auto k = ring.kappa(BlockSubset(6, {1, 2, 5}), BlockSubset(6, {3, 4, 6}), 2, 3);
  EXPECT_EQ(k.terms.size(), 5u);
  EXPECT_TRUE(k.image.is_zero());
  EXPECT_THROW(ring.kappa(BlockSubset(6, {1, 2}), BlockSubset(6, {2, 3}), 1, 3), DomainError);
}

TEST(Embed, WorkedExample) {
  auto v = embed_f(SetPartition::parse("[[1,2,3],[4,5]]"));
  const MatchingVector want{{M("[[1,2],[4,5]]"), 1}, {M("[[1,3],[4,5]]"), 1}, {M("[[2,3],[4,5]]"), 1}};
  EXPECT_EQ(v, want);
  EXPECT_THROW(embed_f(SetPartition::parse("[[1,2],[3]]")), DomainError);
  EXPECT_THROW(embed_f(SetPartition::parse("[[1,3],[2,4]]")), DomainError);
}

TEST(Embed, EquivariantOnSmallCases) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_ncp(n, true))
      for (int i = 1; i < n; ++i) {
        auto lhs = skein_act_ncp(i, p).map_linear([](const SetPartition& q) { return embed_f(q); });
        EXPECT_EQ(lhs, skein_act_ncm(i, embed_f(p))) << p.str() << " i=" << i;
      }
}

TEST(Embed, ProductOfBlocksIsEmbedding) {
  for (int n = 2; n <= 7; ++n) {
    DiagramRing ring(n);
    for (const auto& p : enumerate_ncp(n, true))
      EXPECT_EQ(to_matching_vector(ring.h_partition(p)), embed_f(p)) << p.str();
  }
}

TEST(Ideal, DimensionsAreRiordan) {
  const std::size_t riordan[] = {1, 0, 1, 1, 3, 6, 15, 36};
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(DiagramRing(n).ideal_H_basis().dimension, riordan[n]) << "n=" << n;
}

TEST(Ideal, FTildeRejectsBadBlocks) {
  DiagramRing ring(5);
  EXPECT_NO_THROW(ring.f_tilde({{2, 3}, {4, 5}}));
  EXPECT_THROW(ring.f_tilde({{1, 2}, {3, 4, 5}}), DomainError);
  EXPECT_THROW(ring.f_tilde({{2, 4}, {3, 5}}), DomainError);
}

TEST(Json, CarriesDegree) {
  DiagramRing ring(4);
  auto j = ring_element_to_json(ring.normal_form(EdgeMonomial::parse("{1,3}{2,4}")), 4);
  EXPECT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["degree"]["2"], 2);
}
