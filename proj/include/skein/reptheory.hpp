#pragma once

// Integer partitions, irreducible characters of the symmetric group and
// characters of the skein modules.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/combinat.hpp"
#include "skein/formal.hpp"

namespace skein {

/// Weakly decreasing positive parts.
class IntPartition {
public:
  IntPartition() = default;
  explicit IntPartition(std::vector<int> parts);

  /// (k, k, 1^(n-2k)); requires n >= 2k.
  static IntPartition two_column_hook(int k, int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t row) const { return row < parts_.size() ? parts_[row] : 0; }

  IntPartition conjugate() const;
  std::string str() const;  // "(2,2,1)"; "()" for the empty partition

  friend bool operator==(const IntPartition&, const IntPartition&) = default;
  friend auto operator<=>(const IntPartition& a, const IntPartition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<IntPartition> partitions_of(int n);

std::uint64_t factorial(int n);

/// n! / product of hook lengths.
std::uint64_t hook_dim(const IntPartition& lambda);

/// Size of the centralizer of a permutation with cycle type ct.
std::uint64_t centralizer_size(const IntPartition& ct);
/// n! / centralizer_size.
std::uint64_t class_size(const IntPartition& ct);

/// Irreducible character value by the Murnaghan-Nakayama rule.
Rational mn_character(const IntPartition& lambda, const IntPartition& ct);

/// Adds m2 boxes to mu, no two in the same column (dual = false) or no two
/// in the same row (dual = true). Sorted result.
std::vector<IntPartition> pieri(const IntPartition& mu, int m2, bool dual);

/// A function on the cycle types of S_n.
class ClassFunction {
public:
  explicit ClassFunction(int n = 0) : n_(n) {}
  static ClassFunction irreducible(const IntPartition& lambda);

  int n() const noexcept { return n_; }
  const std::map<IntPartition, Rational>& values() const noexcept { return values_; }
  Rational operator()(const IntPartition& ct) const;
  void set(const IntPartition& ct, Rational value);

  ClassFunction& operator+=(const ClassFunction& other);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

  std::string str() const;

private:
  int n_;
  std::map<IntPartition, Rational> values_;
};

/// <chi, psi> = sum over cycle types of chi(ct) psi(ct) / z_ct.
Rational inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// Multiplicity of every irreducible in chi (zero multiplicities omitted).
/// Throws DomainError ("not a character") on a negative or non-integral
/// multiplicity.
std::map<IntPartition, int> decompose(const ClassFunction& chi);

enum class SkeinModule {
  /// Singleton-free noncrossing partitions, graded by block count.
  SingletonFreePartitions,
  /// All noncrossing partitions, graded by block count.
  Partitions,
  /// Noncrossing matchings, graded by number of pairs.
  Matchings,
};

/// Traces of the skein action on the chosen graded piece (every piece when
/// `grading` is empty), one representative permutation per cycle type.
ClassFunction module_character(SkeinModule module, int n, std::optional<int> grading,
                               const EnumLimits& limits = {});

/// Trace of one permutation on the graded piece; used to spot-check that
/// the trace only depends on the cycle type.
Rational module_trace(SkeinModule module, int n, std::optional<int> grading,
                      const Permutation& sigma, const EnumLimits& limits = {});

/// Character table as CSV: header "lambda,<ct>,..." then one row per lambda.
std::string character_table_csv(int n);

} // namespace skein
