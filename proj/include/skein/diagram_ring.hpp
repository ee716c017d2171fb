#pragma once

// The graded ring generated by the edges {a,b} of [n] modulo
//   {a,b}{a,b},  {a,b}{a,c},  {a,b}{c,d} + {a,c}{b,d} + {a,d}{b,c}.
// Elements are kept in normal form, i.e. as combinations of noncrossing
// matchings, by rewriting {a,c}{b,d} -> -{a,b}{c,d} - {a,d}{b,c} for a<b<c<d.

#include <map>
#include <memory>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "skein/actions.hpp"
#include "skein/combinat.hpp"
#include "skein/formal.hpp"

namespace skein {

/// A product of edges, stored as a sorted multiset of (min, max) pairs.
class EdgeMonomial {
public:
  EdgeMonomial() = default;
  explicit EdgeMonomial(int n) : n_(n) {}
  EdgeMonomial(int n, std::vector<Pair> edges);
  static EdgeMonomial from_matching(const Matching& m);

  int n() const noexcept { return n_; }
  const std::vector<Pair>& edges() const noexcept { return edges_; }
  int degree() const noexcept { return static_cast<int>(edges_.size()); }

  /// True when no vertex is shared by two edges (and no edge repeats).
  bool is_matching() const;
  Matching to_matching() const;

  /// "{1,2}{3,4}"; the unit is "1".
  std::string str() const;
  /// Accepts "{1,2}{1,3}", "{1,2}*{1,3}", "{1,2}·{1,3}", "[1,2][1,3]" and "1".
  static EdgeMonomial parse(std::string_view text, int n = -1);

  friend EdgeMonomial operator*(const EdgeMonomial& a, const EdgeMonomial& b);
  friend bool operator==(const EdgeMonomial&, const EdgeMonomial&) = default;
  friend auto operator<=>(const EdgeMonomial&, const EdgeMonomial&) = default;

private:
  int n_ = 0;
  std::vector<Pair> edges_;
};

using RingElement = LinComb<EdgeMonomial>;

/// A nonempty subset of [n] used as a block; elements sorted.
class BlockSubset {
public:
  BlockSubset(int n, std::vector<int> elements);
  int n() const noexcept { return n_; }
  const std::vector<int>& elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(int v) const;
  std::string str() const;

private:
  int n_;
  std::vector<int> elements_;
};

struct KappaTerm {
  int sign;
  BlockSubset first;
  BlockSubset second;
};

/// The five-term combination of block products and its image under h.
struct KappaResult {
  std::vector<KappaTerm> terms;
  RingElement image;
};

/// Spanning set of the ideal generated by h([n]) with its exact dimension.
struct IdealSpan {
  std::vector<RingElement> generators;  // nonzero products h([n]) * b
  std::map<int, std::size_t> dimension_by_degree;
  std::size_t dimension = 0;
};

/// Selection rule for which crossing to rewrite next.
enum class RewriteOrder { Lexicographic, Random };

class DiagramRing {
public:
  explicit DiagramRing(int n);

  int n() const noexcept { return n_; }

  RingElement one() const { return RingElement(EdgeMonomial(n_)); }
  RingElement edge(int a, int b) const;

  /// Image of m in normal form. Throws InternalError if a rewrite ever
  /// fails to lower the crossing count.
  RingElement normal_form(const EdgeMonomial& m) const;
  /// Same, rewriting a uniformly random crossing at each step (uncached).
  RingElement normal_form(const EdgeMonomial& m, std::mt19937_64& rng) const;
  RingElement normalize(const RingElement& u) const;

  RingElement multiply(const RingElement& u, const RingElement& v) const;

  /// Sum of the 2-subsets of `a`; zero when |a| <= 1.
  RingElement h(const BlockSubset& a) const;
  RingElement h(const std::vector<int>& a) const { return h(BlockSubset(n_, a)); }
  /// Product of h over the blocks of p, in normal form.
  RingElement h_partition(const SetPartition& p) const;
  /// h([n]).
  RingElement h_full() const;

  /// Product of h over `blocks`, a singleton-free noncrossing partition of
  /// {2, ..., n}.
  RingElement f_tilde(const std::vector<std::vector<int>>& blocks) const;

  /// Combination for disjoint P, Q (|P|, |Q| >= 2) with designated
  /// elements p in P and q in Q. With P' = P - p and Q' = Q - q:
  ///   P.Q - P'.(Q+p) - (P+q).Q' + (P'+q).(Q'+p) + (P' u Q').{p,q}
  KappaResult kappa(const BlockSubset& P, const BlockSubset& Q, int p, int q) const;

  /// {normal_form(h([n]) * b) : b a noncrossing matching of [n]}.
  IdealSpan ideal_H_basis(const EnumLimits& limits = {}) const;

private:
  using Cache = std::map<Matching, MatchingVector>;

  MatchingVector reduce_lex(const Matching& m) const;
  MatchingVector reduce_random(const Matching& m, std::mt19937_64& rng) const;

  int n_;
  mutable std::shared_ptr<Cache> cache_;
  mutable std::shared_ptr<std::shared_mutex> mutex_;
};

MatchingVector to_matching_vector(const RingElement& u);
RingElement to_ring_element(const MatchingVector& v);

/// Sum of all matchings choosing exactly one pair inside each block of p.
/// p must be noncrossing and singleton-free.
MatchingVector embed_f(const SetPartition& p);

/// Histogram of term degrees, as serialized next to ring elements.
std::map<int, int> degree_histogram(const RingElement& u);

/// Vector JSON with an extra "degree" histogram field.
nlohmann::json ring_element_to_json(const RingElement& u, int n);

} // namespace skein
