#pragma once

// Matchings, set partitions and permutations on the ground set [n] = {1..n},
// together with crossing predicates and canonical-order enumeration.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

using Pair = std::pair<int, int>;

/// Upper bounds on n for the enumeration routines.
struct EnumLimits {
  int matchings = 10;
  int set_partitions = 9;
  int noncrossing_partitions = 10;

  /// Every limit raised (or lowered) to `n`.
  static EnumLimits uniform(int n) { return {n, n, n}; }
};

/// A set of pairwise disjoint 2-subsets of [n]. Pairs are stored as
/// (min, max) and sorted, so equal matchings have identical encodings.
class Matching {
public:
  Matching() = default;
  explicit Matching(int n);
  Matching(int n, std::vector<Pair> pairs);

  int n() const noexcept { return n_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  int num_pairs() const noexcept { return static_cast<int>(pairs_.size()); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Partner of `v`, or 0 when `v` is unmatched.
  int partner(int v) const;

  /// One label per element of [n]; matched elements share their pair's
  /// label, unmatched elements get a label of their own.
  std::vector<int> labels() const;

  /// Canonical text form, e.g. "[[1,2],[3,4]]"; the empty matching is "[]".
  std::string str() const;

  /// Parses "[[1,2],[3,4]]" (braces are accepted as well). When `n` is
  /// negative the ground set is the largest element that occurs.
  static Matching parse(std::string_view text, int n = -1);

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.pairs_ <=> b.pairs_;
  }

private:
  int n_ = 0;
  std::vector<Pair> pairs_;
  std::vector<int> mate_;  // mate_[v-1], 0 when unmatched
};

/// A set partition of [n]. Each block is sorted ascending and blocks are
/// sorted by their minimum element.
class SetPartition {
public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  /// Builds the partition whose blocks are the classes of `labels`
  /// (labels[v-1] is the class of v).
  static SetPartition from_labels(std::span<const int> labels);

  int n() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }

  /// Index into blocks() of the block containing v.
  int block_index(int v) const;
  const std::vector<int>& block_of(int v) const { return blocks_[block_index(v)]; }

  bool singleton_free() const;
  int num_singletons() const;

  /// labels()[v-1] = block_index(v).
  std::vector<int> labels() const;

  std::string str() const;
  static SetPartition parse(std::string_view text, int n = -1);

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> index_;  // index_[v-1]
};

/// A bijection of [n] in one-line notation. Composition follows function
/// composition: (a * b)(x) = a(b(x)).
class Permutation {
public:
  explicit Permutation(int n = 0);
  explicit Permutation(std::vector<int> images);

  /// The adjacent transposition s_i = (i, i+1) on [n].
  static Permutation adjacent(int n, int i);

  /// The product s_{letters[0]} s_{letters[1]} ... s_{letters[t-1]}.
  static Permutation from_word(int n, std::span<const int> letters);

  /// Product of disjoint cycles on consecutive integers, one per part:
  /// (1 2 .. c1)(c1+1 .. c1+c2)...
  static Permutation from_cycle_type(std::span<const int> parts);

  static Permutation random(int n, std::mt19937_64& rng);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  /// A reduced word: *this == from_word(n(), word()).
  std::vector<int> word() const;

  /// Cycle lengths, weakly decreasing.
  std::vector<int> cycle_type() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// --- crossing predicates ----------------------------------------------------

/// Number of 4-tuples a<b<c<d with a,c in one class and b,d in another,
/// where labels[v-1] is the class of v.
int crossing_count(std::span<const int> labels);

bool is_noncrossing(const Matching& m);
bool is_noncrossing(const SetPartition& p);
int crossing_count(const Matching& m);
int crossing_count(const SetPartition& p);

// --- enumeration (canonical order) -------------------------------------------

std::vector<Matching> enumerate_matchings(int n, const EnumLimits& limits = {});
std::vector<Matching> enumerate_ncm(int n, const EnumLimits& limits = {});
std::vector<SetPartition> enumerate_set_partitions(int n, const EnumLimits& limits = {});
std::vector<SetPartition> enumerate_ncp(int n, bool singleton_free = false,
                                        std::optional<int> block_count = std::nullopt,
                                        const EnumLimits& limits = {});

/// Noncrossing matchings with exactly k pairs.
std::vector<Matching> enumerate_ncm_pairs(int n, int k, const EnumLimits& limits = {});

// --- unsigned action ----------------------------------------------------------

Matching apply_perm(const Permutation& sigma, const Matching& m);
SetPartition apply_perm(const Permutation& sigma, const SetPartition& p);

/// s_i applied to x (swaps the labels i and i+1).
Matching swap_adjacent(int i, const Matching& m);
SetPartition swap_adjacent(int i, const SetPartition& p);

// --- uncrossing words ---------------------------------------------------------

enum class UncrossStrategy {
  /// Repeatedly apply the s_i that lowers crossing_count the most; ties go
  /// to the result with the smallest restricted growth string.
  Greedy,
  /// Bubble-sort the elements into contiguous runs, one run per block,
  /// runs ordered by block minimum.
  BlockSort,
};

/// Letters [i_1, ..., i_t] such that applying s_{i_1} first, then s_{i_2},
/// ..., then s_{i_t} makes x noncrossing. Empty when x is noncrossing.
/// As a permutation the word is w = s_{i_t} ... s_{i_1}.
std::vector<int> uncrossing_word(const Matching& m,
                                 UncrossStrategy strategy = UncrossStrategy::Greedy);
std::vector<int> uncrossing_word(const SetPartition& p,
                                 UncrossStrategy strategy = UncrossStrategy::Greedy);

/// The permutation realized by a letter sequence from uncrossing_word.
Permutation word_permutation(int n, std::span<const int> letters);

// --- parsing helper -------------------------------------------------------------

/// Parses a nested list such as "[[1,2],[3,4,5]]" or "{{1,2},{3}}". "∅",
/// "[]" and "{}" denote the empty list.
std::vector<std::vector<int>> parse_nested_list(std::string_view text);

} // namespace skein
