#pragma once

// Named verification checks. Each check exhaustively tests one algebraic
// statement for every n up to a bound and records the evidence.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace skein::verify {

struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool passed = true;
  nlohmann::json expected = nlohmann::json::object();
  nlohmann::json actual = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::int64_t ms = 0;
  std::optional<std::string> counterexample;

  /// Schema: {"check", "params", "status", "expected", "actual", "seed",
  /// "ms"} plus "counterexample" on failure.
  nlohmann::json to_json(bool with_timing = true) const;
};

struct Suite {
  std::string name;
  std::string description;
  int default_n_max;
  std::function<Report(int n_max, std::uint64_t seed)> run;
};

/// Every suite, sorted by name.
const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view name);

/// Runs one suite, or every suite for "all". Reports are ordered by check
/// name. Throws DomainError for an unknown name.
std::vector<Report> run(std::string_view name, std::optional<int> n_max, std::uint64_t seed);

// Sequence oracles computed from their recurrences.
std::vector<std::uint64_t> involution_numbers(int n_max);
std::vector<std::uint64_t> motzkin_numbers(int n_max);
std::vector<std::uint64_t> bell_numbers(int n_max);
std::vector<std::uint64_t> catalan_numbers(int n_max);
std::vector<std::uint64_t> riordan_numbers(int n_max);

} // namespace skein::verify
