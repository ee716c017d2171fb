#include "skein/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

#include "skein/actions.hpp"
#include "skein/error.hpp"

namespace skein {

// --- IntPartition --------------------------------------------------------------------

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
    if (k && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntPartition IntPartition::two_column_hook(int k, int n) {
  if (k < 0 || n < 2 * k) throw DomainError("(k,k,1^(n-2k)) needs 0 <= 2k <= n");
  std::vector<int> parts;
  if (k > 0) parts = {k, k};
  for (int r = 2 * k; r < n; ++r) parts.push_back(1);
  return IntPartition(std::move(parts));
}

IntPartition IntPartition::conjugate() const {
  std::vector<int> out;
  for (int c = 1; c <= (parts_.empty() ? 0 : parts_[0]); ++c) {
    int len = 0;
    for (int p : parts_)
      if (p >= c) ++len;
    out.push_back(len);
  }
  return IntPartition(std::move(out));
}

std::string IntPartition::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + ")";
}

std::vector<IntPartition> partitions_of(int n) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::vector<IntPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial argument out of range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t hook_dim(const IntPartition& lambda) {
  const auto conj = lambda.conjugate();
  std::uint64_t hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) hooks *= static_cast<std::uint64_t>(lambda[r] - c + conj[c] - r - 1);
  return factorial(lambda.size()) / hooks;
}

std::uint64_t centralizer_size(const IntPartition& ct) {
  std::map<int, int> mult;
  for (int p : ct.parts()) ++mult[p];
  std::uint64_t z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= static_cast<std::uint64_t>(part);
    z *= factorial(m);
  }
  return z;
}

std::uint64_t class_size(const IntPartition& ct) { return factorial(ct.size()) / centralizer_size(ct); }

// --- Murnaghan-Nakayama ----------------------------------------------------------------

namespace {

// Characters are computed on beta-sets: beta_k = lambda_k + (L - 1 - k).
// Removing a rim hook of length r moves one bead from b to b - r, with sign
// (-1)^(number of beads strictly between).
long mn_beta(std::vector<int> beta, std::span<const int> cycles,
             std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
  if (cycles.empty()) return 1;  // every bead is then packed at the bottom
  auto key = std::make_pair(beta, std::vector<int>(cycles.begin(), cycles.end()));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = cycles.front();
  long total = 0;
  std::set<int> beads(beta.begin(), beta.end());
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int x : beta)
      if (target < x && x < b) ++between;
    std::vector<int> next;
    for (int x : beta) next.push_back(x == b ? target : x);
    std::sort(next.rbegin(), next.rend());
    const long sub = mn_beta(std::move(next), cycles.subspan(1), memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

} // namespace

Rational mn_character(const IntPartition& lambda, const IntPartition& ct) {
  if (lambda.size() != ct.size()) {
    throw DomainError("character of " + lambda.str() + " evaluated at cycle type " + ct.str() +
                      " of a different size");
  }
  static std::mutex memo_mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
  const int L = lambda.length();
  std::vector<int> beta(L);
  for (int k = 0; k < L; ++k) beta[k] = lambda[k] + (L - 1 - k);
  std::lock_guard lock(memo_mutex);
  return Rational(mn_beta(std::move(beta), ct.parts(), memo));
}

// --- Pieri --------------------------------------------------------------------------------

std::vector<IntPartition> pieri(const IntPartition& mu, int m2, bool dual) {
  if (m2 < 0) throw DomainError("number of added boxes must be non-negative");
  std::vector<IntPartition> out;
  for (const auto& lambda : partitions_of(mu.size() + m2)) {
    bool ok = lambda.length() >= mu.length();
    for (int r = 0; ok && r < lambda.length(); ++r) {
      const int added = lambda[r] - mu[r];
      if (added < 0) ok = false;
      else if (dual) ok = added <= 1;
      else ok = lambda[r + 1] <= mu[r];  // horizontal strip: rows interlace
    }
    if (ok) out.push_back(lambda);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- class functions -------------------------------------------------------------------------

ClassFunction ClassFunction::irreducible(const IntPartition& lambda) {
  ClassFunction chi(lambda.size());
  for (const auto& ct : partitions_of(lambda.size())) chi.set(ct, mn_character(lambda, ct));
  return chi;
}

Rational ClassFunction::operator()(const IntPartition& ct) const {
  auto it = values_.find(ct);
  if (it == values_.end()) throw DomainError("class function has no value at " + ct.str());
  return it->second;
}

void ClassFunction::set(const IntPartition& ct, Rational value) {
  if (ct.size() != n_) throw DomainError("cycle type " + ct.str() + " is not a partition of n");
  values_[ct] = std::move(value);
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.n_ != n_) throw DomainError("class functions of different degree");
  for (const auto& [ct, v] : other.values_) values_[ct] += v;
  return *this;
}

std::string ClassFunction::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [ct, v] : values_) {
    s += (first ? "" : ", ") + ct.str() + ": " + to_string(v);
    first = false;
  }
  return s + "}";
}

Rational inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.n() != psi.n()) throw DomainError("class functions of different degree");
  Rational total = 0;
  for (const auto& ct : partitions_of(chi.n()))
    total += chi(ct) * psi(ct) / Rational(static_cast<unsigned long>(centralizer_size(ct)));
  return total;
}

std::map<IntPartition, int> decompose(const ClassFunction& chi) {
  std::map<IntPartition, int> out;
  for (const auto& lambda : partitions_of(chi.n())) {
    Rational m = inner_product(chi, ClassFunction::irreducible(lambda));
    if (m.get_den() != 1 || m < 0) {
      throw DomainError("not a character: multiplicity of " + lambda.str() + " is " + to_string(m));
    }
    if (m != 0) out[lambda] = static_cast<int>(m.get_num().get_si());
  }
  return out;
}

// --- module characters --------------------------------------------------------------------------

namespace {

template <typename Obj, typename Act>
Rational trace_on(const std::vector<Obj>& basis, const Permutation& sigma, Act act) {
  Rational tr = 0;
  for (const auto& b : basis) tr += act(sigma, LinComb<Obj>(b)).coeff(b);
  return tr;
}

Rational trace_for(SkeinModule module, int n, std::optional<int> grading, const Permutation& sigma,
                   const EnumLimits& limits) {
  auto ncp_act = [](const Permutation& s, const PartitionVector& v) { return skein_act_ncp(s, v); };
  auto ncm_act = [](const Permutation& s, const MatchingVector& v) { return skein_act_ncm(s, v); };
  switch (module) {
    case SkeinModule::SingletonFreePartitions:
      return trace_on(enumerate_ncp(n, true, grading, limits), sigma, ncp_act);
    case SkeinModule::Partitions:
      return trace_on(enumerate_ncp(n, false, grading, limits), sigma, ncp_act);
    case SkeinModule::Matchings: {
      auto basis = enumerate_ncm(n, limits);
      if (grading) std::erase_if(basis, [&](const Matching& m) { return m.num_pairs() != *grading; });
      return trace_on(basis, sigma, ncm_act);
    }
  }
  throw InternalError("unknown skein module");
}

} // namespace

Rational module_trace(SkeinModule module, int n, std::optional<int> grading, const Permutation& sigma,
                      const EnumLimits& limits) {
  if (sigma.n() != n) throw DomainError("permutation size does not match n");
  return trace_for(module, n, grading, sigma, limits);
}

ClassFunction module_character(SkeinModule module, int n, std::optional<int> grading,
                               const EnumLimits& limits) {
  ClassFunction chi(n);
  for (const auto& ct : partitions_of(n)) {
    chi.set(ct, trace_for(module, n, grading, Permutation::from_cycle_type(ct.parts()), limits));
  }
  return chi;
}

std::string character_table_csv(int n) {
  const auto parts = partitions_of(n);
  std::string csv = "lambda";
  for (const auto& ct : parts) csv += ",\"" + ct.str() + "\"";
  csv += "\n";
  for (const auto& lambda : parts) {
    csv += "\"" + lambda.str() + "\"";
    for (const auto& ct : parts) csv += "," + to_string(mn_character(lambda, ct));
    csv += "\n";
  }
  return csv;
}

} // namespace skein
