#include "skein/diagram_ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>

#include "skein/error.hpp"

namespace skein {

// --- EdgeMonomial ------------------------------------------------------------------

EdgeMonomial::EdgeMonomial(int n, std::vector<Pair> edges) : n_(n) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b) {
      throw DomainError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                        "} is not a 2-subset of [" + std::to_string(n) + "]");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

EdgeMonomial EdgeMonomial::from_matching(const Matching& m) { return EdgeMonomial(m.n(), m.pairs()); }

bool EdgeMonomial::is_matching() const {
  std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
  for (auto [a, b] : edges_) {
    if (used[a] || used[b]) return false;
    used[a] = used[b] = true;
  }
  return true;
}

Matching EdgeMonomial::to_matching() const { return Matching(n_, edges_); }

std::string EdgeMonomial::str() const {
  if (edges_.empty()) return "1";
  std::string s;
  for (auto [a, b] : edges_) s += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
  return s;
}

EdgeMonomial EdgeMonomial::parse(std::string_view text, int n) {
  std::vector<Pair> edges;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    return ParseError(what + " in monomial '" + std::string(text) + "'");
  };
  auto skip = [&] {
    for (;;) {
      if (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) {
        ++pos;
      } else if (text.substr(pos, 2) == "\xC2\xB7") {  // U+00B7 MIDDLE DOT
        pos += 2;
      } else {
        break;
      }
    }
  };
  auto number = [&] {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected integer");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
    return v;
  };
  skip();
  if (text.substr(pos) == "1") return EdgeMonomial(std::max(n, 0));
  int top = 0;
  while (skip(), pos < text.size()) {
    char open = text[pos];
    if (open != '{' && open != '[') throw fail("expected '{'");
    ++pos;
    int a = number();
    skip();
    if (pos < text.size() && text[pos] == ',') ++pos;
    int b = number();
    skip();
    if (pos >= text.size() || text[pos] != (open == '{' ? '}' : ']')) throw fail("unterminated edge");
    ++pos;
    edges.emplace_back(a, b);
    top = std::max({top, a, b});
  }
  try {
    return EdgeMonomial(n < 0 ? top : n, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

EdgeMonomial operator*(const EdgeMonomial& a, const EdgeMonomial& b) {
  if (a.n_ != b.n_) throw DomainError("cannot multiply monomials over different [n]");
  auto edges = a.edges_;
  edges.insert(edges.end(), b.edges_.begin(), b.edges_.end());
  return EdgeMonomial(a.n_, std::move(edges));
}

// --- BlockSubset ------------------------------------------------------------------------

BlockSubset::BlockSubset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw DomainError("block has a repeated element");
  }
  for (int v : elements_) {
    if (v < 1 || v > n) throw DomainError("block element " + std::to_string(v) + " outside [n]");
  }
}

bool BlockSubset::contains(int v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string BlockSubset::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < elements_.size(); ++k) s += (k ? "," : "") + std::to_string(elements_[k]);
  return s + "}";
}

// --- conversions ---------------------------------------------------------------------------

MatchingVector to_matching_vector(const RingElement& u) {
  MatchingVector out;
  for (const auto& [m, c] : u) {
    if (!m.is_matching()) throw DomainError("monomial " + m.str() + " is not a matching");
    out.add_term(m.to_matching(), c);
  }
  return out;
}

RingElement to_ring_element(const MatchingVector& v) {
  RingElement out;
  for (const auto& [m, c] : v) out.add_term(EdgeMonomial::from_matching(m), c);
  return out;
}

std::map<int, int> degree_histogram(const RingElement& u) {
  std::map<int, int> h;
  for (const auto& [m, c] : u) ++h[m.degree()];
  return h;
}

nlohmann::json ring_element_to_json(const RingElement& u, int n) {
  auto j = vector_to_json(u, "monomial", n);
  nlohmann::json hist = nlohmann::json::object();
  for (auto [d, k] : degree_histogram(u)) hist[std::to_string(d)] = k;
  j["degree"] = std::move(hist);
  return j;
}

// --- DiagramRing ------------------------------------------------------------------------------

DiagramRing::DiagramRing(int n)
    : n_(n), cache_(std::make_shared<Cache>()), mutex_(std::make_shared<std::shared_mutex>()) {
  if (n < 0) throw DomainError("ground set size must be non-negative");
}

RingElement DiagramRing::edge(int a, int b) const { return RingElement(EdgeMonomial(n_, {{a, b}})); }

namespace {

struct Crossing {
  std::size_t x, y;  // indices into pairs(), x < y
};

std::vector<Crossing> crossings(const Matching& m) {
  std::vector<Crossing> out;
  const auto& ps = m.pairs();
  for (std::size_t x = 0; x < ps.size(); ++x)
    for (std::size_t y = x + 1; y < ps.size(); ++y)
      if (ps[x].first < ps[y].first && ps[y].first < ps[x].second && ps[x].second < ps[y].second)
        out.push_back({x, y});
  return out;
}

// {a,c}{b,d} with a<b<c<d -> the two resolutions {a,b}{c,d} and {a,d}{b,c}.
std::pair<Matching, Matching> resolve(const Matching& m, Crossing cr) {
  const auto& ps = m.pairs();
  const int a = ps[cr.x].first, c = ps[cr.x].second;
  const int b = ps[cr.y].first, d = ps[cr.y].second;
  std::vector<Pair> rest;
  for (std::size_t k = 0; k < ps.size(); ++k)
    if (k != cr.x && k != cr.y) rest.push_back(ps[k]);
  auto r1 = rest, r2 = rest;
  r1.insert(r1.end(), {{a, b}, {c, d}});
  r2.insert(r2.end(), {{a, d}, {b, c}});
  Matching m1(m.n(), std::move(r1)), m2(m.n(), std::move(r2));
  const int before = crossing_count(m);
  if (crossing_count(m1) >= before || crossing_count(m2) >= before) {
    throw InternalError("rewriting diverged: resolving a crossing of " + m.str() +
                        " did not lower the crossing count");
  }
  return {std::move(m1), std::move(m2)};
}

} // namespace

MatchingVector DiagramRing::reduce_lex(const Matching& m) const {
  auto cs = crossings(m);
  if (cs.empty()) return MatchingVector(m);
  {
    std::shared_lock lock(*mutex_);
    auto it = cache_->find(m);
    if (it != cache_->end()) return it->second;
  }
  auto [m1, m2] = resolve(m, cs.front());
  MatchingVector out = reduce_lex(m1);
  out += reduce_lex(m2);
  out *= -1;
  std::unique_lock lock(*mutex_);
  cache_->emplace(m, out);
  return out;
}

MatchingVector DiagramRing::reduce_random(const Matching& m, std::mt19937_64& rng) const {
  auto cs = crossings(m);
  if (cs.empty()) return MatchingVector(m);
  std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
  auto [m1, m2] = resolve(m, cs[pick(rng)]);
  MatchingVector out = reduce_random(m1, rng);
  out += reduce_random(m2, rng);
  return -out;
}

RingElement DiagramRing::normal_form(const EdgeMonomial& m) const {
  if (m.n() != n_) throw DomainError("monomial lives on a different [n]");
  if (!m.is_matching()) return {};
  return to_ring_element(reduce_lex(m.to_matching()));
}

RingElement DiagramRing::normal_form(const EdgeMonomial& m, std::mt19937_64& rng) const {
  if (m.n() != n_) throw DomainError("monomial lives on a different [n]");
  if (!m.is_matching()) return {};
  return to_ring_element(reduce_random(m.to_matching(), rng));
}

RingElement DiagramRing::normalize(const RingElement& u) const {
  return u.map_linear([this](const EdgeMonomial& m) { return normal_form(m); });
}

RingElement DiagramRing::multiply(const RingElement& u, const RingElement& v) const {
  if ((u.n() >= 0 && u.n() != n_) || (v.n() >= 0 && v.n() != n_)) {
    throw DomainError("ring elements live on a different [n]");
  }
  RingElement out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) out.axpy(x * y, normal_form(a * b));
  return out;
}

RingElement DiagramRing::h(const BlockSubset& a) const {
  if (a.n() != n_) throw DomainError("block lives on a different [n]");
  RingElement out;
  const auto& e = a.elements();
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = x + 1; y < e.size(); ++y) out.add_term(EdgeMonomial(n_, {{e[x], e[y]}}), 1);
  return out;
}

RingElement DiagramRing::h_full() const {
  std::vector<int> all(n_);
  for (int v = 1; v <= n_; ++v) all[v - 1] = v;
  return h(all);
}

RingElement DiagramRing::h_partition(const SetPartition& p) const {
  if (p.n() != n_) throw DomainError("partition lives on a different [n]");
  RingElement out = one();
  for (const auto& b : p.blocks()) {
    out = multiply(out, h(b));
    if (out.is_zero()) break;
  }
  return out;
}

RingElement DiagramRing::f_tilde(const std::vector<std::vector<int>>& blocks) const {
  std::vector<int> lab(n_ > 0 ? n_ - 1 : 0, -1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].size() < 2) throw DomainError("f_tilde needs a singleton-free partition");
    for (int v : blocks[k]) {
      if (v < 2 || v > n_) throw DomainError("f_tilde blocks must partition {2..n}");
      if (lab[v - 2] != -1) throw DomainError("f_tilde blocks must be disjoint");
      lab[v - 2] = static_cast<int>(k);
    }
  }
  if (std::count(lab.begin(), lab.end(), -1) != 0) throw DomainError("f_tilde blocks must cover {2..n}");
  if (crossing_count(lab) != 0) throw DomainError("f_tilde needs a noncrossing partition");

  RingElement out = one();
  for (const auto& b : blocks) out = multiply(out, h(b));
  return out;
}

KappaResult DiagramRing::kappa(const BlockSubset& P, const BlockSubset& Q, int p, int q) const {
  if (P.size() < 2 || Q.size() < 2) throw DomainError("kappa needs |P|, |Q| >= 2");
  for (int v : P.elements())
    if (Q.contains(v)) throw DomainError("kappa needs disjoint P and Q");
  if (!P.contains(p) || !Q.contains(q)) throw DomainError("designated elements must lie in P and Q");

  auto minus = [](const BlockSubset& s, int v) {
    std::vector<int> e;
    for (int x : s.elements())
      if (x != v) e.push_back(x);
    return e;
  };
  auto plus = [](std::vector<int> e, int v) {
    e.push_back(v);
    return e;
  };
  const auto P1 = minus(P, p);
  const auto Q1 = minus(Q, q);
  auto PQ1 = P1;
  PQ1.insert(PQ1.end(), Q1.begin(), Q1.end());

  KappaResult r;
  r.terms.push_back({+1, P, Q});
  r.terms.push_back({-1, BlockSubset(n_, P1), BlockSubset(n_, plus(Q.elements(), p))});
  r.terms.push_back({-1, BlockSubset(n_, plus(P.elements(), q)), BlockSubset(n_, Q1)});
  r.terms.push_back({+1, BlockSubset(n_, plus(P1, q)), BlockSubset(n_, plus(Q1, p))});
  r.terms.push_back({+1, BlockSubset(n_, PQ1), BlockSubset(n_, {p, q})});
  for (const auto& t : r.terms) r.image.axpy(t.sign, multiply(h(t.first), h(t.second)));
  return r;
}

IdealSpan DiagramRing::ideal_H_basis(const EnumLimits& limits) const {
  IdealSpan out;
  const RingElement gen = h_full();
  std::map<int, std::vector<RingElement>> by_degree;
  for (const auto& b : enumerate_ncm(n_, limits)) {
    auto prod = multiply(gen, RingElement(EdgeMonomial::from_matching(b)));
    if (prod.is_zero()) continue;
    by_degree[b.num_pairs() + 1].push_back(prod);
    out.generators.push_back(std::move(prod));
  }
  for (const auto& [d, gens] : by_degree) {
    auto dim = span_dimension(gens);
    out.dimension_by_degree[d] = dim;
    out.dimension += dim;
  }
  return out;
}

// --- embedding ------------------------------------------------------------------------------

MatchingVector embed_f(const SetPartition& p) {
  if (!is_noncrossing(p)) throw DomainError("embedding needs a noncrossing partition, got " + p.str());
  if (!p.singleton_free()) throw DomainError("embedding needs a singleton-free partition, got " + p.str());
  MatchingVector out;
  std::vector<Pair> chosen;
  const auto& blocks = p.blocks();
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == blocks.size()) {
      Matching m(p.n(), chosen);
      if (!is_noncrossing(m)) throw InternalError("embedding produced crossing matching " + m.str());
      out.add_term(m, 1);
      return;
    }
    const auto& b = blocks[k];
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y) {
        chosen.emplace_back(b[x], b[y]);
        rec(k + 1);
        chosen.pop_back();
      }
  };
  rec(0);
  return out;
}

} // namespace skein
