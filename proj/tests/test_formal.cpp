#include <gtest/gtest.h>

#include "skein/combinat.hpp"
#include "skein/error.hpp"
#include "skein/formal.hpp"

using namespace skein;

using MV = LinComb<Matching>;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(LinComb, CancellationDropsTerms) {
  auto a = Matching::parse("[[1,2]]", 2);
  MV v(a, 3);
  v.add_term(a, -3);
  EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(v.pretty(), "0");
}

TEST(LinComb, Arithmetic) {
  auto a = Matching::parse("[[1,2],[3,4]]"), b = Matching::parse("[[1,4],[2,3]]");
  MV v{{a, 1}, {b, Rational(1, 2)}};
  MV w{{b, -1}};
  auto u = v + 2 * w;
  EXPECT_EQ(u.coeff(b), Rational(-3, 2));
  EXPECT_EQ(u.pretty(), "{{1,2},{3,4}} - 3/2{{1,4},{2,3}}");
  EXPECT_EQ(-u + u, MV());
  EXPECT_EQ(combine(v, w, 1).coeff(b), Rational(-1, 2));
}

TEST(LinComb, BasisMismatch) {
  MV v(Matching::parse("[[1,2]]", 2));
  EXPECT_THROW(v.add_term(Matching::parse("[[1,2]]", 3), 1), DomainError);
}

TEST(LinComb, EmptyMatchingPrintsAsEmptySet) {
  MV v(Matching(0), -1);
  EXPECT_EQ(v.pretty(), "-∅");
}

TEST(SplitTerms, FormalSums) {
  auto t = split_terms("{{1,2},{3,4}} − 3/2{{1,4},{2,3}} + -{{1,3}}");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].coeff, 1);
  EXPECT_EQ(t[1].coeff, Rational(-3, 2));
  EXPECT_EQ(t[1].object, "{{1,4},{2,3}}");
  EXPECT_EQ(t[2].coeff, -1);
  EXPECT_TRUE(split_terms(" 0 ").empty());
  EXPECT_THROW(split_terms("{{1,2} + "), ParseError);
  EXPECT_THROW(split_terms("{{1,2}} +"), ParseError);
}

TEST(SplitTerms, RoundTripsPretty) {
  auto a = Matching::parse("[[1,2],[3,4]]"), b = Matching::parse("[[1,3],[2,4]]");
  MV v{{a, Rational(-5, 3)}, {b, 2}};
  auto back = parse_lincomb<Matching>(v.pretty(), [](const std::string& s) { return Matching::parse(s, 4); });
  EXPECT_EQ(back, v);
}

TEST(Rank, SmallMatrices) {
  auto a = Matching::parse("[[1,2]]", 3), b = Matching::parse("[[1,3]]", 3), c = Matching::parse("[[2,3]]", 3);
  std::vector<MV> vs{MV{{a, 1}, {b, 1}}, MV{{b, 1}, {c, 1}}, MV{{a, 1}, {c, -1}}};
  EXPECT_EQ(span_dimension(vs), 2u);
  vs.push_back(MV{{a, Rational(1, 3)}});
  EXPECT_EQ(span_dimension(vs), 3u);
  EXPECT_TRUE(in_span(MV{{b, 7}}, vs));
  EXPECT_EQ(span_dimension(std::vector<MV>{}), 0u);
}

TEST(Rank, HilbertMatrixIsFullRank) {
  // Exact elimination on an ill-conditioned rational matrix.
  const int n = 8;
  std::vector<std::string> labels;
  for (int c = 0; c < n; ++c) labels.push_back(std::to_string(c));
  std::vector<SparseMatrix::Row> rows(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rows[r][c] = Rational(1, r + c + 1);
  EXPECT_EQ(rank(SparseMatrix(labels, rows)), static_cast<std::size_t>(n));
  rows[n - 1] = rows[0];
  EXPECT_EQ(rank(SparseMatrix(labels, rows)), static_cast<std::size_t>(n - 1));
}

TEST(SpanBuilder, AgreesWithRank) {
  const auto basis = enumerate_matchings(5);
  std::vector<MV> vs;
  SpanBuilder<Matching> span;
  for (std::size_t k = 0; k + 2 < basis.size(); k += 3) {
    MV v{{basis[k], 1}, {basis[k + 1], -2}, {basis[(k * 7) % basis.size()], 3}};
    vs.push_back(v);
    span.add(v);
    EXPECT_EQ(span.dimension(), span_dimension(vs));
  }
  for (const auto& v : vs) EXPECT_TRUE(span.contains(v));
}

TEST(Json, VectorRoundTrip) {
  auto a = Matching::parse("[[1,2],[3,4]]"), b = Matching::parse("[[1,4],[2,3]]");
  MV v{{a, Rational(2, 3)}, {b, -1}};
  auto j = vector_to_json(v, "matching", 4);
  EXPECT_EQ(j["terms"][0]["coeff"], "2/3");
  auto back = vector_from_json<Matching>(j, "matching", [](const std::string& s, int n) { return Matching::parse(s, n); });
  EXPECT_EQ(back, v);
  EXPECT_THROW(vector_from_json<Matching>(j, "set_partition", [](const std::string& s, int n) { return Matching::parse(s, n); }),
               ParseError);
}

TEST(Json, MatrixRoundTrip) {
  std::vector<SparseMatrix::Row> rows{{{0, Rational(1, 2)}}, {{1, 3}}};
  SparseMatrix m({"x", "y"}, rows);
  auto back = SparseMatrix::from_json(m.to_json());
  EXPECT_EQ(back.rows(), m.rows());
  EXPECT_EQ(back.column_labels(), m.column_labels());
}
