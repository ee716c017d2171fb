#include "skein/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

namespace {

void check_limit(int n, int limit) {
  if (n < 0) throw DomainError("ground set size must be non-negative, got " + std::to_string(n));
  if (n > limit) throw SizeLimitError(n, limit);
}

std::string list_str(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(xs[k]);
  }
  return s + "]";
}

} // namespace

// --- Matching -------------------------------------------------------------------

Matching::Matching(int n) : n_(n), mate_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0) throw DomainError("ground set size must be non-negative");
}

Matching::Matching(int n, std::vector<Pair> pairs) : Matching(n) {
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) {
      throw DomainError("pair {" + std::to_string(a) + "," + std::to_string(b) +
                        "} is not inside [" + std::to_string(n) + "]");
    }
    if (a == b) throw DomainError("pair with repeated element " + std::to_string(a));
    if (mate_[a - 1] || mate_[b - 1]) {
      throw DomainError("pairs of a matching must be disjoint (element " +
                        std::to_string(mate_[a - 1] ? a : b) + " repeated)");
    }
    mate_[a - 1] = b;
    mate_[b - 1] = a;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

int Matching::partner(int v) const {
  if (v < 1 || v > n_) throw DomainError("element " + std::to_string(v) + " outside [n]");
  return mate_[v - 1];
}

std::vector<int> Matching::labels() const {
  std::vector<int> lab(n_);
  for (int v = 1; v <= n_; ++v) {
    int w = mate_[v - 1];
    lab[v - 1] = (w != 0 && w < v) ? w : v;
  }
  return lab;
}

std::string Matching::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (k) s += ',';
    s += "[" + std::to_string(pairs_[k].first) + "," + std::to_string(pairs_[k].second) + "]";
  }
  return s + "]";
}

Matching Matching::parse(std::string_view text, int n) {
  auto lists = parse_nested_list(text);
  std::vector<Pair> pairs;
  int top = 0;
  for (const auto& l : lists) {
    if (l.size() != 2) throw ParseError("matching pairs must have exactly two elements");
    pairs.emplace_back(l[0], l[1]);
    top = std::max({top, l[0], l[1]});
  }
  try {
    return Matching(n < 0 ? top : n, std::move(pairs));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// --- SetPartition -----------------------------------------------------------------

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), index_(static_cast<std::size_t>(std::max(n, 0)), -1) {
  if (n < 0) throw DomainError("ground set size must be non-negative");
  for (auto& b : blocks) {
    if (b.empty()) throw DomainError("set partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (int v : blocks[k]) {
      if (v < 1 || v > n) {
        throw DomainError("element " + std::to_string(v) + " is not inside [" +
                          std::to_string(n) + "]");
      }
      if (index_[v - 1] != -1) {
        throw DomainError("blocks must be disjoint (element " + std::to_string(v) + " repeated)");
      }
      index_[v - 1] = static_cast<int>(k);
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (index_[v - 1] == -1) {
      throw DomainError("blocks must cover [" + std::to_string(n) + "], missing " +
                        std::to_string(v));
    }
  }
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<int, std::size_t>> seen;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& s) { return s.first == labels[v]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[v], blocks.size());
      blocks.push_back({static_cast<int>(v) + 1});
    } else {
      blocks[it->second].push_back(static_cast<int>(v) + 1);
    }
  }
  return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

int SetPartition::block_index(int v) const {
  if (v < 1 || v > n_) throw DomainError("element " + std::to_string(v) + " outside [n]");
  return index_[v - 1];
}

bool SetPartition::singleton_free() const { return num_singletons() == 0; }

int SetPartition::num_singletons() const {
  return static_cast<int>(
      std::count_if(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() == 1; }));
}

std::vector<int> SetPartition::labels() const { return index_; }

std::string SetPartition::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) s += ',';
    s += list_str(blocks_[k]);
  }
  return s + "]";
}

SetPartition SetPartition::parse(std::string_view text, int n) {
  auto lists = parse_nested_list(text);
  int top = 0;
  for (const auto& l : lists)
    for (int v : l) top = std::max(top, v);
  try {
    return SetPartition(n < 0 ? top : n, std::move(lists));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// --- Permutation ------------------------------------------------------------------

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw DomainError("permutation size must be non-negative");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > n() || hit[x - 1]) throw DomainError("permutation images must be a bijection");
    hit[x - 1] = true;
  }
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) {
    throw DomainError("adjacent transposition index " + std::to_string(i) +
                      " outside 1.." + std::to_string(n - 1));
  }
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::from_word(int n, std::span<const int> letters) {
  Permutation p(n);
  for (int i : letters) {
    if (i < 1 || i >= n) throw DomainError("letter " + std::to_string(i) + " out of range");
    std::swap(p.images_[i - 1], p.images_[i]);
  }
  return p;
}

Permutation Permutation::from_cycle_type(std::span<const int> parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  Permutation p(n);
  int start = 1;
  for (int len : parts) {
    if (len < 1) throw DomainError("cycle lengths must be positive");
    for (int k = 0; k < len; ++k) p.images_[start + k - 1] = start + (k + 1) % len;
    start += len;
  }
  return p;
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  Permutation p(n);
  // Fisher-Yates with an explicit distribution so results do not depend on
  // the standard library's shuffle implementation.
  for (int k = n - 1; k > 0; --k) {
    std::uniform_int_distribution<int> d(0, k);
    std::swap(p.images_[k], p.images_[d(rng)]);
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (n() != rhs.n()) throw DomainError("cannot compose permutations of different sizes");
  std::vector<int> out(images_.size());
  for (int x = 1; x <= n(); ++x) out[x - 1] = (*this)(rhs(x));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int x = 1; x <= n(); ++x) out[images_[x - 1] - 1] = x;
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (images_[x - 1] != x) return false;
  return true;
}

int Permutation::inversions() const {
  int inv = 0;
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

std::vector<int> Permutation::word() const {
  // Peel right descents: if p(i) > p(i+1) then p = (p s_i) s_i with one
  // inversion fewer in p s_i.
  std::vector<int> cur = images_;
  std::vector<int> rev;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < n(); ++i) {
      if (cur[i - 1] > cur[i]) {
        std::swap(cur[i - 1], cur[i]);
        rev.push_back(i);
        found = true;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> parts;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 1; x <= n(); ++x) {
    if (seen[x - 1]) continue;
    int len = 0;
    for (int y = x; !seen[y - 1]; y = images_[y - 1]) {
      seen[y - 1] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string Permutation::str() const { return list_str(images_); }

// --- crossings ----------------------------------------------------------------------

int crossing_count(std::span<const int> lab) {
  const int n = static_cast<int>(lab.size());
  int count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (lab[a] == lab[b]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (lab[c] != lab[a]) continue;
        for (int d = c + 1; d < n; ++d)
          if (lab[d] == lab[b]) ++count;
      }
    }
  return count;
}

bool is_noncrossing(const Matching& m) {
  const auto& ps = m.pairs();
  for (std::size_t x = 0; x < ps.size(); ++x)
    for (std::size_t y = 0; y < ps.size(); ++y) {
      auto [a, c] = ps[x];
      auto [b, d] = ps[y];
      if (a < b && b < c && c < d) return false;
    }
  return true;
}

bool is_noncrossing(const SetPartition& p) {
  // A crossing needs a<b<c<d with a,c in one block and b,d in another; it
  // suffices to look at consecutive elements a<c of each block.
  const auto& bs = p.blocks();
  for (std::size_t x = 0; x < bs.size(); ++x) {
    for (std::size_t k = 0; k + 1 < bs[x].size(); ++k) {
      int a = bs[x][k], c = bs[x][k + 1];
      for (std::size_t y = 0; y < bs.size(); ++y) {
        if (y == x) continue;
        bool inside = false, outside = false;
        for (int v : bs[y]) {
          if (a < v && v < c) inside = true;
          else outside = true;
        }
        if (inside && outside) return false;
      }
    }
  }
  return true;
}

int crossing_count(const Matching& m) {
  auto lab = m.labels();
  return crossing_count(lab);
}

int crossing_count(const SetPartition& p) {
  auto lab = p.labels();
  return crossing_count(lab);
}

// --- enumeration ----------------------------------------------------------------------

std::vector<Matching> enumerate_matchings(int n, const EnumLimits& limits) {
  check_limit(n, limits.matchings);
  std::vector<Matching> out;
  std::vector<Pair> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> rec = [&](int v) {
    while (v <= n && used[v]) ++v;
    if (v > n) {
      out.emplace_back(n, cur);
      return;
    }
    used[v] = true;
    rec(v + 1);
    for (int w = v + 1; w <= n; ++w) {
      if (used[w]) continue;
      used[w] = true;
      cur.emplace_back(v, w);
      rec(v + 1);
      cur.pop_back();
      used[w] = false;
    }
    used[v] = false;
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> enumerate_ncm(int n, const EnumLimits& limits) {
  auto all = enumerate_matchings(n, limits);
  std::vector<Matching> out;
  for (auto& m : all)
    if (is_noncrossing(m)) out.push_back(std::move(m));
  return out;
}

std::vector<Matching> enumerate_ncm_pairs(int n, int k, const EnumLimits& limits) {
  auto all = enumerate_ncm(n, limits);
  std::erase_if(all, [k](const Matching& m) { return m.num_pairs() != k; });
  return all;
}

namespace {

// Restricted-growth enumeration; `prune` rejects placing v (the largest
// element so far) into block `b` of the current partial assignment.
template <typename Prune>
std::vector<SetPartition> grow_partitions(int n, Prune prune) {
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.emplace_back(n, blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (prune(blocks, b, v)) continue;
      blocks[b].push_back(v);
      rec(v + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({v});
    rec(v + 1);
    blocks.pop_back();
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<SetPartition> enumerate_set_partitions(int n, const EnumLimits& limits) {
  check_limit(n, limits.set_partitions);
  return grow_partitions(n, [](const auto&, std::size_t, int) { return false; });
}

std::vector<SetPartition> enumerate_ncp(int n, bool singleton_free,
                                        std::optional<int> block_count,
                                        const EnumLimits& limits) {
  check_limit(n, limits.noncrossing_partitions);
  // Appending v to block B creates a crossing iff some other block X has
  // min(X) < b < max(X) for an element b of B.
  auto crosses = [](const std::vector<std::vector<int>>& blocks, std::size_t target, int) {
    for (std::size_t x = 0; x < blocks.size(); ++x) {
      if (x == target) continue;
      int lo = blocks[x].front(), hi = blocks[x].back();
      for (int b : blocks[target])
        if (lo < b && b < hi) return true;
    }
    return false;
  };
  auto all = grow_partitions(n, crosses);
  std::erase_if(all, [&](const SetPartition& p) {
    if (singleton_free && !p.singleton_free()) return true;
    if (block_count && p.num_blocks() != *block_count) return true;
    return false;
  });
  return all;
}

// --- action -------------------------------------------------------------------------------

Matching apply_perm(const Permutation& sigma, const Matching& m) {
  if (sigma.n() != m.n()) throw DomainError("permutation and matching live on different [n]");
  std::vector<Pair> pairs;
  pairs.reserve(m.pairs().size());
  for (auto [a, b] : m.pairs()) pairs.emplace_back(sigma(a), sigma(b));
  return Matching(m.n(), std::move(pairs));
}

SetPartition apply_perm(const Permutation& sigma, const SetPartition& p) {
  if (sigma.n() != p.n()) throw DomainError("permutation and partition live on different [n]");
  auto blocks = p.blocks();
  for (auto& b : blocks)
    for (int& v : b) v = sigma(v);
  return SetPartition(p.n(), std::move(blocks));
}

Matching swap_adjacent(int i, const Matching& m) {
  return apply_perm(Permutation::adjacent(m.n(), i), m);
}

SetPartition swap_adjacent(int i, const SetPartition& p) {
  return apply_perm(Permutation::adjacent(p.n(), i), p);
}

// --- uncrossing -----------------------------------------------------------------------------

namespace {

std::vector<int> block_sort_word(std::vector<int> lab) {
  const int n = static_cast<int>(lab.size());
  // target[v-1]: final position of the element currently labelled v.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> first(n, n);
  for (int v = 0; v < n; ++v) {
    auto it = std::find(lab.begin(), lab.end(), lab[v]);
    first[v] = static_cast<int>(it - lab.begin());
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return first[x] < first[y]; });
  std::vector<int> target(n);
  for (int pos = 0; pos < n; ++pos) target[order[pos]] = pos;

  std::vector<int> letters;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (target[i - 1] > target[i]) {
        std::swap(target[i - 1], target[i]);
        letters.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return letters;
}

std::vector<int> growth_string(const std::vector<int>& lab) {
  std::map<int, int> rename;
  std::vector<int> out;
  out.reserve(lab.size());
  for (int x : lab) out.push_back(rename.try_emplace(x, static_cast<int>(rename.size())).first->second);
  return out;
}

std::vector<int> greedy_word(std::vector<int> lab) {
  const int n = static_cast<int>(lab.size());
  std::vector<int> letters;
  int current = crossing_count(lab);
  while (current > 0) {
    // steepest descent; ties go to the smallest resulting labelling
    int best = 0, best_count = current;
    std::vector<int> best_form;
    for (int i = 1; i < n; ++i) {
      if (lab[i - 1] == lab[i]) continue;
      std::swap(lab[i - 1], lab[i]);
      const int next = crossing_count(lab);
      if (next < best_count || (best && next == best_count && growth_string(lab) < best_form)) {
        best = i;
        best_count = next;
        best_form = growth_string(lab);
      }
      std::swap(lab[i - 1], lab[i]);
    }
    if (!best) {
      // No single swap lowers the count; finish by sorting blocks.
      auto rest = block_sort_word(lab);
      letters.insert(letters.end(), rest.begin(), rest.end());
      break;
    }
    std::swap(lab[best - 1], lab[best]);
    letters.push_back(best);
    current = best_count;
  }
  return letters;
}

std::vector<int> uncross_labels(std::vector<int> lab, UncrossStrategy strategy) {
  if (strategy == UncrossStrategy::Greedy) return greedy_word(std::move(lab));
  if (crossing_count(lab) == 0) return {};
  return block_sort_word(std::move(lab));
}

} // namespace

std::vector<int> uncrossing_word(const Matching& m, UncrossStrategy strategy) {
  return uncross_labels(m.labels(), strategy);
}

std::vector<int> uncrossing_word(const SetPartition& p, UncrossStrategy strategy) {
  return uncross_labels(p.labels(), strategy);
}

Permutation word_permutation(int n, std::span<const int> letters) {
  std::vector<int> rev(letters.rbegin(), letters.rend());
  return Permutation::from_word(n, rev);
}

// --- parsing ----------------------------------------------------------------------------------

std::vector<std::vector<int>> parse_nested_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto is_open = [](char c) { return c == '[' || c == '{'; };
  auto closer = [](char c) { return c == '[' ? ']' : '}'; };

  skip();
  if (text.substr(pos) == "\xE2\x88\x85") return {};  // U+2205 EMPTY SET
  if (pos >= text.size() || !is_open(text[pos])) throw fail("expected '[' or '{'");
  const char outer_close = closer(text[pos++]);
  std::vector<std::vector<int>> out;
  for (;;) {
    skip();
    if (pos >= text.size()) throw fail("unterminated list");
    if (text[pos] == outer_close) {
      ++pos;
      break;
    }
    if (!is_open(text[pos])) throw fail("expected inner list");
    const char inner_close = closer(text[pos++]);
    std::vector<int> inner;
    for (;;) {
      skip();
      if (pos >= text.size()) throw fail("unterminated inner list");
      if (text[pos] == inner_close) {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected integer");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos++] - '0');
        if (v > 1'000'000) throw fail("element too large");
      }
      inner.push_back(v);
    }
    out.push_back(std::move(inner));
  }
  skip();
  if (pos != text.size()) throw fail("trailing characters");
  return out;
}

} // namespace skein
