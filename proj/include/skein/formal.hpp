#pragma once

// Exact formal linear combinations over canonical basis objects and exact
// rank computations over the rationals.

#include <gmpxx.h>

#include <concepts>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "skein/error.hpp"

namespace skein {

/// Reduced fraction with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Basis objects carry their ground set and a canonical text form.
template <typename B>
concept BasisObject = std::totally_ordered<B> && requires(const B& b) {
  { b.n() } -> std::convertible_to<int>;
  { b.str() } -> std::convertible_to<std::string>;
};

/// A finite formal sum of basis objects with nonzero rational coefficients.
template <BasisObject B>
class LinComb {
public:
  using Terms = std::map<B, Rational>;

  LinComb() = default;
  LinComb(const B& b, Rational c = 1) { add_term(b, std::move(c)); }
  LinComb(std::initializer_list<std::pair<B, Rational>> terms) {
    for (const auto& [b, c] : terms) add_term(b, c);
  }

  const Terms& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const B& b, const Rational& c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.n() != b.n()) {
      throw DomainError("basis mismatch: objects on [" + std::to_string(b.n()) +
                        "] and [" + std::to_string(terms_.begin()->first.n()) + "]");
    }
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// *this += c * w
  LinComb& axpy(const Rational& c, const LinComb& w) {
    if (c == 0) return *this;
    for (const auto& [b, x] : w.terms_) add_term(b, c * x);
    return *this;
  }

  LinComb& operator+=(const LinComb& w) { return axpy(1, w); }
  LinComb& operator-=(const LinComb& w) { return axpy(-1, w); }
  LinComb& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [b, x] : terms_) x *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb v, const LinComb& w) { return v += w; }
  friend LinComb operator-(LinComb v, const LinComb& w) { return v -= w; }
  friend LinComb operator-(LinComb v) { return v *= -1; }
  friend LinComb operator*(const Rational& c, LinComb v) { return v *= c; }
  friend bool operator==(const LinComb& v, const LinComb& w) { return v.terms_ == w.terms_; }

  /// Ground set of the terms, or -1 for the zero vector.
  int n() const { return terms_.empty() ? -1 : terms_.begin()->first.n(); }

  /// Applies `f: B -> LinComb<C>` to every basis object and sums the
  /// results with the coefficients of *this.
  template <typename F>
  auto map_linear(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const B&>()))>;
    Out out;
    for (const auto& [b, c] : terms_) out.axpy(c, f(b));
    return out;
  }

  /// Human-readable form, e.g. "{{1,2},{3,4}} + 2{{1,4},{2,3}}" with
  /// braces substituted for brackets; "0" for the zero vector.
  std::string pretty() const;

private:
  Terms terms_;
};

/// v + c * w
template <BasisObject B>
LinComb<B> combine(const LinComb<B>& v, const LinComb<B>& w, const Rational& c) {
  LinComb<B> out = v;
  return out.axpy(c, w);
}

/// "[[1,2],[3,4]]" -> "{{1,2},{3,4}}", "[]" -> "∅".
std::string brace_form(const std::string& canonical);

struct TextTerm {
  Rational coeff;
  std::string object;
};

/// Splits "{{1,2}} - 3/2{{1,3}}" into signed terms at bracket depth zero.
/// Accepts "-" and "−" as minus signs; "0" is the empty sum.
std::vector<TextTerm> split_terms(std::string_view text);

/// Parses the pretty() form back into a combination; `parse_obj(text)`
/// decodes one basis object.
template <BasisObject B, typename Parse>
LinComb<B> parse_lincomb(std::string_view text, Parse parse_obj) {
  LinComb<B> v;
  for (const auto& t : split_terms(text)) v.add_term(parse_obj(t.object), t.coeff);
  return v;
}

template <BasisObject B>
std::string LinComb<B>::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag);
    s += brace_form(b.str());
    first = false;
  }
  return s;
}

/// Rows of rational entries indexed by a shared, labelled column basis.
class SparseMatrix {
public:
  using Row = std::map<int, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::vector<std::string> column_labels, std::vector<Row> rows);

  /// Builds the matrix whose rows are `vectors`, with one column per basis
  /// object occurring in any of them (columns in canonical order).
  template <BasisObject B>
  static SparseMatrix from_vectors(const std::vector<LinComb<B>>& vectors);

  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t num_cols() const noexcept { return labels_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<std::string>& column_labels() const noexcept { return labels_; }

  /// {"basis": [labels...], "rows": [[[col, "p/q"], ...], ...]}
  nlohmann::json to_json() const;
  static SparseMatrix from_json(const nlohmann::json& j);

private:
  std::vector<std::string> labels_;
  std::vector<Row> rows_;
};

template <BasisObject B>
SparseMatrix SparseMatrix::from_vectors(const std::vector<LinComb<B>>& vectors) {
  std::map<B, int> index;
  for (const auto& v : vectors)
    for (const auto& [b, c] : v) index.try_emplace(b, 0);
  std::vector<std::string> labels;
  labels.reserve(index.size());
  int col = 0;
  for (auto& [b, k] : index) {
    k = col++;
    labels.push_back(b.str());
  }
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    Row r;
    for (const auto& [b, c] : v) r.emplace(index.at(b), c);
    rows.push_back(std::move(r));
  }
  return SparseMatrix(std::move(labels), std::move(rows));
}

/// Exact rank by fraction-free (Bareiss) elimination after clearing the
/// denominators of each row.
std::size_t rank(const SparseMatrix& m);

template <BasisObject B>
std::size_t span_dimension(const std::vector<LinComb<B>>& vectors) {
  return rank(SparseMatrix::from_vectors(vectors));
}

template <BasisObject B>
bool in_span(const LinComb<B>& v, const std::vector<LinComb<B>>& vectors) {
  if (v.is_zero()) return true;
  auto extended = vectors;
  extended.push_back(v);
  return span_dimension(extended) == span_dimension(vectors);
}

/// Incrementally maintained echelon basis of a subspace. Rows are kept with
/// distinct leading basis objects and leading coefficient 1.
template <BasisObject B>
class SpanBuilder {
public:
  /// Adds v; returns true iff v was not already in the span.
  bool add(const LinComb<B>& v) {
    LinComb<B> r = reduce(v);
    if (r.is_zero()) return false;
    Rational lead = r.begin()->second;
    r *= Rational(1) / lead;
    B key = r.begin()->first;
    rows_.emplace(std::move(key), std::move(r));
    return true;
  }

  bool contains(const LinComb<B>& v) const { return reduce(v).is_zero(); }
  std::size_t dimension() const noexcept { return rows_.size(); }

  std::vector<LinComb<B>> basis() const {
    std::vector<LinComb<B>> out;
    for (const auto& [k, r] : rows_) out.push_back(r);
    return out;
  }

private:
  LinComb<B> reduce(LinComb<B> v) const {
    // Eliminate pivots in increasing order; terms only move towards larger
    // keys, so a single forward sweep suffices.
    auto it = v.terms().begin();
    while (it != v.terms().end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      B key = it->first;
      v.axpy(-it->second, row->second);
      it = v.terms().upper_bound(key);
    }
    return v;
  }

  std::map<B, LinComb<B>> rows_;
};

// --- JSON vectors -------------------------------------------------------------

/// {"basis": kind, "n": n, "terms": [{"obj": "...", "coeff": "p/q"}, ...]}
template <BasisObject B>
nlohmann::json vector_to_json(const LinComb<B>& v, const std::string& kind, int n) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, c] : v) terms.push_back({{"obj", b.str()}, {"coeff", to_string(c)}});
  return {{"basis", kind}, {"n", n}, {"terms", std::move(terms)}};
}

/// Inverse of vector_to_json; `parse_obj(text, n)` decodes one basis object.
template <BasisObject B, typename Parse>
LinComb<B> vector_from_json(const nlohmann::json& j, const std::string& kind, Parse parse_obj) {
  try {
    if (j.at("basis").get<std::string>() != kind) {
      throw ParseError("expected a '" + kind + "' vector, got '" +
                       j.at("basis").get<std::string>() + "'");
    }
    int n = j.contains("n") ? j.at("n").get<int>() : -1;
    LinComb<B> v;
    for (const auto& t : j.at("terms")) {
      const auto& coeff = t.at("coeff");
      Rational c = coeff.is_string() ? parse_rational(coeff.get<std::string>())
                                     : Rational(coeff.get<long>());
      v.add_term(parse_obj(t.at("obj").get<std::string>(), n), c);
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed vector JSON: ") + e.what());
  }
}

} // namespace skein
