#include "skein/actions.hpp"

#include <algorithm>
#include <set>

#include "skein/error.hpp"

namespace skein {

namespace {

void check_index(int i, int n) {
  if (i < 1 || i >= n) {
    throw DomainError("transposition index " + std::to_string(i) + " outside 1.." +
                      std::to_string(n - 1));
  }
}

template <typename B>
LinComb<B> act_signed_impl(const Permutation& sigma, const LinComb<B>& v) {
  const Rational sign = sigma.sign();
  LinComb<B> out;
  for (const auto& [b, c] : v) out.add_term(apply_perm(sigma, b), sign * c);
  return out;
}

SetPartition with_blocks(int n, const std::vector<std::vector<int>>& others,
                         std::initializer_list<std::vector<int>> extra) {
  auto blocks = others;
  for (const auto& b : extra) blocks.push_back(b);
  return SetPartition(n, std::move(blocks));
}

std::vector<int> without(const std::vector<int>& xs, int v) {
  std::vector<int> out;
  for (int x : xs)
    if (x != v) out.push_back(x);
  return out;
}

std::vector<int> with(std::vector<int> xs, int v) {
  xs.push_back(v);
  std::sort(xs.begin(), xs.end());
  return xs;
}

} // namespace

MatchingVector act_signed(const Permutation& sigma, const MatchingVector& v) {
  return act_signed_impl(sigma, v);
}

PartitionVector act_signed(const Permutation& sigma, const PartitionVector& v) {
  return act_signed_impl(sigma, v);
}

MatchingVector skein_act_ncm(int i, const Matching& m) {
  check_index(i, m.n());
  if (!is_noncrossing(m)) throw DomainError("skein action needs noncrossing support, got " + m.str());
  Matching swapped = swap_adjacent(i, m);
  if (is_noncrossing(swapped)) return MatchingVector(swapped, -1);

  const int a = m.partner(i), b = m.partner(i + 1);
  std::vector<Pair> pairs;
  for (const auto& pr : m.pairs())
    if (pr.first != i && pr.second != i && pr.first != i + 1 && pr.second != i + 1)
      pairs.push_back(pr);
  pairs.emplace_back(i, i + 1);
  pairs.emplace_back(a, b);
  MatchingVector out(m);
  out.add_term(Matching(m.n(), std::move(pairs)), 1);
  return out;
}

MatchingVector skein_act_ncm(int i, const MatchingVector& v) {
  return v.map_linear([i](const Matching& m) { return skein_act_ncm(i, m); });
}

PartitionVector skein_act_ncp(int i, const SetPartition& p) {
  const int n = p.n();
  check_index(i, n);
  if (!is_noncrossing(p)) throw DomainError("skein action needs noncrossing support, got " + p.str());

  const int ia = p.block_index(i), ib = p.block_index(i + 1);
  if (ia == ib) return PartitionVector(p, -1);
  const auto& A = p.blocks()[ia];
  const auto& B = p.blocks()[ib];
  if (A.size() == 1 || B.size() == 1) return PartitionVector(swap_adjacent(i, p), -1);

  std::vector<std::vector<int>> others;
  for (int k = 0; k < p.num_blocks(); ++k)
    if (k != ia && k != ib) others.push_back(p.blocks()[k]);
  const auto tail_a = without(A, i);
  const auto tail_b = without(B, i + 1);
  auto merged = tail_a;
  merged.insert(merged.end(), tail_b.begin(), tail_b.end());

  PartitionVector out(p);
  out.add_term(with_blocks(n, others, {{i, i + 1}, merged}), 1);
  if (tail_b.size() >= 2) out.add_term(with_blocks(n, others, {with(A, i + 1), tail_b}), -1);
  if (tail_a.size() >= 2) out.add_term(with_blocks(n, others, {with(B, i), tail_a}), -1);

  for (const auto& [q, c] : out) {
    if (!is_noncrossing(q)) {
      throw InternalError("skein action produced crossing partition " + q.str() + " from " +
                          p.str() + " at i=" + std::to_string(i));
    }
  }
  return out;
}

PartitionVector skein_act_ncp(int i, const PartitionVector& v) {
  return v.map_linear([i](const SetPartition& p) { return skein_act_ncp(i, p); });
}

MatchingVector skein_act_ncm(const Permutation& sigma, const MatchingVector& v) {
  auto w = sigma.word();
  MatchingVector out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = skein_act_ncm(*it, out);
  return out;
}

PartitionVector skein_act_ncp(const Permutation& sigma, const PartitionVector& v) {
  auto w = sigma.word();
  PartitionVector out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = skein_act_ncp(*it, out);
  return out;
}

// --- witnesses ------------------------------------------------------------------

AlmostNoncrossingWitness::AlmostNoncrossingWitness(SetPartition partition, int index)
    : partition_(std::move(partition)), index_(index) {
  check_index(index_, partition_.n());
  if (is_noncrossing(partition_)) {
    throw DomainError("partition " + partition_.str() + " is already noncrossing");
  }
  if (partition_.block_index(index_) == partition_.block_index(index_ + 1)) {
    throw DomainError("elements i and i+1 lie in the same block");
  }
  if (!is_noncrossing(swap_adjacent(index_, partition_))) {
    throw DomainError("swapping " + std::to_string(index_) + " and " + std::to_string(index_ + 1) +
                      " does not uncross " + partition_.str());
  }
}

std::vector<AlmostNoncrossingWitness> AlmostNoncrossingWitness::find_all(const SetPartition& p) {
  std::vector<AlmostNoncrossingWitness> out;
  if (is_noncrossing(p)) return out;
  for (int i = 1; i < p.n(); ++i) {
    if (p.block_index(i) == p.block_index(i + 1)) continue;
    if (is_noncrossing(swap_adjacent(i, p))) out.emplace_back(p, i);
  }
  return out;
}

std::optional<AlmostNoncrossingWitness> AlmostNoncrossingWitness::find(const SetPartition& p) {
  auto all = find_all(p);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<int> AlmostNoncrossingWitness::tail_a() const { return without(block_a(), index_); }
std::vector<int> AlmostNoncrossingWitness::tail_b() const { return without(block_b(), index_ + 1); }

PartitionVector skein_resolution(const AlmostNoncrossingWitness& w) {
  return -skein_act_ncp(w.index(), w.uncrossed());
}

// --- projections ----------------------------------------------------------------

namespace {

template <typename Obj, typename Act>
LinComb<Obj> project_basis(const Obj& x, UncrossStrategy strategy, Act act) {
  auto letters = uncrossing_word(x, strategy);
  Obj y = x;
  for (int i : letters) y = swap_adjacent(i, y);
  const Rational sign = letters.size() % 2 == 0 ? 1 : -1;
  LinComb<Obj> out(y, sign);
  // w^{-1} = s_{i_1} ... s_{i_t}: s_{i_t} acts first.
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = act(*it, out);
  return out;
}

} // namespace

MatchingVector project_matching(const Matching& m, UncrossStrategy strategy) {
  return project_basis(m, strategy, [](int i, const MatchingVector& v) { return skein_act_ncm(i, v); });
}

PartitionVector project_partition(const SetPartition& p, UncrossStrategy strategy) {
  return project_basis(p, strategy,
                       [](int i, const PartitionVector& v) { return skein_act_ncp(i, v); });
}

MatchingVector project_matchings(const MatchingVector& v, UncrossStrategy strategy) {
  return v.map_linear([strategy](const Matching& m) { return project_matching(m, strategy); });
}

PartitionVector project_partitions(const PartitionVector& v, UncrossStrategy strategy) {
  return v.map_linear([strategy](const SetPartition& p) { return project_partition(p, strategy); });
}

// --- kernels ----------------------------------------------------------------------

std::vector<MatchingVector> ptolemy_kernel_basis(int n, const EnumLimits& limits) {
  if (n > limits.matchings) throw SizeLimitError(n, limits.matchings);
  std::vector<MatchingVector> out;
  if (n < 4) return out;
  const auto rests = enumerate_matchings(n - 4, limits);
  std::vector<int> s(4);
  for (s[0] = 1; s[0] <= n; ++s[0])
    for (s[1] = s[0] + 1; s[1] <= n; ++s[1])
      for (s[2] = s[1] + 1; s[2] <= n; ++s[2])
        for (s[3] = s[2] + 1; s[3] <= n; ++s[3]) {
          std::vector<int> rest;  // [n] - S, in order
          for (int v = 1; v <= n; ++v)
            if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(v);
          for (const auto& r : rests) {
            std::vector<Pair> tail;
            for (auto [a, b] : r.pairs()) tail.emplace_back(rest[a - 1], rest[b - 1]);
            MatchingVector v;
            const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
            for (const auto& q : pairings) {
              auto pairs = tail;
              pairs.emplace_back(s[q[0]], s[q[1]]);
              pairs.emplace_back(s[q[2]], s[q[3]]);
              v.add_term(Matching(n, std::move(pairs)), 1);
            }
            out.push_back(std::move(v));
          }
        }
  return out;
}

std::vector<PartitionVector> skein_kernel_generators(int n, bool singleton_free,
                                                     const EnumLimits& limits) {
  std::vector<PartitionVector> out;
  std::set<std::string> seen;
  for (const auto& p : enumerate_set_partitions(n, limits)) {
    if (singleton_free && !p.singleton_free()) continue;
    for (const auto& w : AlmostNoncrossingWitness::find_all(p)) {
      PartitionVector g(p);
      g -= skein_resolution(w);
      if (seen.insert(g.pretty()).second) out.push_back(std::move(g));
    }
  }
  return out;
}

} // namespace skein
