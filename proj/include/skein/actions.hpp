#pragma once

// Symmetric-group actions on spans of matchings and set partitions: the
// sign-twisted relabelling action on all objects, the skein actions on the
// noncrossing spans, and the projections that resolve crossings.

#include <optional>
#include <vector>

#include "skein/combinat.hpp"
#include "skein/formal.hpp"

namespace skein {

using MatchingVector = LinComb<Matching>;
using PartitionVector = LinComb<SetPartition>;

// --- sign-twisted relabelling ------------------------------------------------

/// sign(sigma) * (sigma relabelling each object), extended linearly.
MatchingVector act_signed(const Permutation& sigma, const MatchingVector& v);
PartitionVector act_signed(const Permutation& sigma, const PartitionVector& v);

// --- skein actions -------------------------------------------------------------

/// s_i acting on a noncrossing matching: the signed swap when that stays
/// noncrossing, otherwise m + m' where m' trades {i,a},{i+1,b} for
/// {i,i+1},{a,b}.
MatchingVector skein_act_ncm(int i, const Matching& m);
MatchingVector skein_act_ncm(int i, const MatchingVector& v);

/// s_i acting on a noncrossing set partition.
///  - i, i+1 in the same block: -p
///  - i or i+1 a singleton: -(p with i and i+1 swapped)
///  - otherwise, with A containing i and B containing i+1:
///    p + p2 - p3 - p4 where p2 has blocks {i,i+1}, (A-i)+(B-(i+1));
///    p3 has A+(i+1), B-(i+1) (dropped when B-(i+1) is a singleton);
///    p4 has B+i, A-i (dropped when A-i is a singleton).
PartitionVector skein_act_ncp(int i, const SetPartition& p);
PartitionVector skein_act_ncp(int i, const PartitionVector& v);

/// sigma acting through the skein action, sigma = s_{w_1} ... s_{w_t} for
/// w = sigma.word(); the rightmost letter acts first.
MatchingVector skein_act_ncm(const Permutation& sigma, const MatchingVector& v);
PartitionVector skein_act_ncp(const Permutation& sigma, const PartitionVector& v);

// --- almost-noncrossing partitions --------------------------------------------

/// A crossing set partition together with an index i such that swapping i
/// and i+1 makes it noncrossing (i and i+1 then lie in different blocks).
class AlmostNoncrossingWitness {
public:
  /// Validates the witness; throws DomainError if `partition` is
  /// noncrossing, i is out of range, or the swap does not uncross it.
  AlmostNoncrossingWitness(SetPartition partition, int index);

  /// The smallest valid index for p, if any.
  static std::optional<AlmostNoncrossingWitness> find(const SetPartition& p);

  /// Every valid index for p.
  static std::vector<AlmostNoncrossingWitness> find_all(const SetPartition& p);

  const SetPartition& partition() const noexcept { return partition_; }
  int index() const noexcept { return index_; }

  /// The block containing i (resp. i+1) and its remaining elements.
  const std::vector<int>& block_a() const { return partition_.block_of(index_); }
  const std::vector<int>& block_b() const { return partition_.block_of(index_ + 1); }
  std::vector<int> tail_a() const;
  std::vector<int> tail_b() const;

  /// s_i applied to the partition; noncrossing by construction.
  SetPartition uncrossed() const { return swap_adjacent(index_, partition_); }

private:
  SetPartition partition_;
  int index_;
};

/// The noncrossing combination equal to the crossing partition modulo the
/// projection kernel: -(s_i . u) where u is the uncrossed partition. The
/// difference partition - skein_resolution(w) lies in the kernel.
PartitionVector skein_resolution(const AlmostNoncrossingWitness& w);

// --- projections ---------------------------------------------------------------

/// x -> w^{-1} . (w o x), where w comes from uncrossing_word(x, strategy).
MatchingVector project_matching(const Matching& m,
                                UncrossStrategy strategy = UncrossStrategy::Greedy);
PartitionVector project_partition(const SetPartition& p,
                                  UncrossStrategy strategy = UncrossStrategy::Greedy);

MatchingVector project_matchings(const MatchingVector& v,
                                 UncrossStrategy strategy = UncrossStrategy::Greedy);
PartitionVector project_partitions(const PartitionVector& v,
                                   UncrossStrategy strategy = UncrossStrategy::Greedy);

// --- kernel spanning sets --------------------------------------------------------

/// One element per 4-subset S of [n] and matching r of the rest: the sum of
/// the three perfect matchings of S, each joined with r.
std::vector<MatchingVector> ptolemy_kernel_basis(int n, const EnumLimits& limits = {});

/// For every crossing almost-noncrossing partition p (singleton-free when
/// requested) and each valid index, p - skein_resolution(p). Deduplicated.
std::vector<PartitionVector> skein_kernel_generators(int n, bool singleton_free = true,
                                                     const EnumLimits& limits = {});

/// Echelon basis of the smallest subspace containing `generators` and
/// stable under the sign-twisted action of every s_j.
template <typename B>
std::vector<LinComb<B>> signed_closure(const std::vector<LinComb<B>>& generators, int n) {
  SpanBuilder<B> span;
  std::vector<LinComb<B>> queue;
  for (const auto& g : generators)
    if (span.add(g)) queue.push_back(g);
  while (!queue.empty()) {
    LinComb<B> v = std::move(queue.back());
    queue.pop_back();
    for (int j = 1; j < n; ++j) {
      auto w = act_signed(Permutation::adjacent(n, j), v);
      if (span.add(w)) queue.push_back(std::move(w));
    }
  }
  return span.basis();
}

} // namespace skein
