#include <gtest/gtest.h>

#include "skein/error.hpp"
#include "skein/verify.hpp"

using namespace skein;

TEST(Oracles, KnownSequences) {
  EXPECT_EQ(verify::involution_numbers(6), (std::vector<std::uint64_t>{1, 1, 2, 4, 10, 26, 76}));
  EXPECT_EQ(verify::motzkin_numbers(9).back(), 835u);
  EXPECT_EQ(verify::bell_numbers(6), (std::vector<std::uint64_t>{1, 1, 2, 5, 15, 52, 203}));
  EXPECT_EQ(verify::catalan_numbers(5), (std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(verify::riordan_numbers(10),
            (std::vector<std::uint64_t>{1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603}));
  EXPECT_EQ(verify::bell_numbers(0), std::vector<std::uint64_t>{1});
}

TEST(Suites, SortedAndFindable) {
  const auto& all = verify::suites();
  ASSERT_EQ(all.size(), 17u);
  for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1].name, all[k].name);
  EXPECT_NE(verify::find_suite("thm3.9-rank"), nullptr);
  EXPECT_EQ(verify::find_suite("nope"), nullptr);
  EXPECT_THROW(verify::run("nope", 3, 1), DomainError);
}

TEST(Suites, RankExample) {
  auto reports = verify::run("thm3.9-rank", 6, 1);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].passed);
  EXPECT_EQ(reports[0].actual["rank"], nlohmann::json({1, 1, 3, 6, 15}));
}

TEST(Suites, AllPassOnTinyInstances) {
  for (const auto& r : verify::run("all", 3, 1)) EXPECT_TRUE(r.passed) << r.check;
}

TEST(Reports, DeterministicGivenSeed) {
  for (const char* name : {"well-defined", "prop3.4"}) {
    auto a = verify::run(name, 5, 42), b = verify::run(name, 5, 42);
    EXPECT_EQ(a[0].to_json(false).dump(), b[0].to_json(false).dump());
  }
}

TEST(Reports, Schema) {
  auto j = verify::run("lemma4.1", 4, 9)[0].to_json();
  for (const char* key : {"check", "params", "status", "expected", "actual", "seed", "ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["seed"], 9);
  EXPECT_FALSE(j.contains("counterexample"));
}
