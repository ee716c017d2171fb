#include "skein/formal.hpp"

#include <cctype>
#include <numeric>

namespace skein {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '+') t += c;
  if (t.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(t, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string brace_form(const std::string& canonical) {
  if (canonical == "[]") return "\xE2\x88\x85";
  std::string s = canonical;
  for (char& c : s) {
    if (c == '[') c = '{';
    else if (c == ']') c = '}';
  }
  return s;
}

std::vector<TextTerm> split_terms(std::string_view text) {
  std::string t;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.substr(k, 3) == "\xE2\x88\x92") {
      t += '-';
      k += 2;
    } else {
      t += text[k];
    }
  }
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return std::string();
    return s.substr(a, s.find_last_not_of(" \t\n") - a + 1);
  };
  if (trim(t) == "0") return {};

  std::vector<TextTerm> out;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&] {
    std::string body = trim(cur);
    cur.clear();
    if (body.empty()) throw ParseError("missing term in '" + std::string(text) + "'");
    std::size_t k = 0;
    while (k < body.size() && (std::isdigit(static_cast<unsigned char>(body[k])) || body[k] == '/')) ++k;
    std::string obj = trim(body.substr(k));
    if (!obj.empty() && obj[0] == '*') obj = trim(obj.substr(1));
    Rational c = k ? parse_rational(body.substr(0, k)) : Rational(1);
    if (obj.empty()) obj = "1";
    out.push_back({sign * c, obj});
    sign = 1;
  };
  bool pending = false;  // a sign was read and its term has not started
  for (char c : t) {
    if (depth == 0 && (c == '+' || c == '-')) {
      if (!trim(cur).empty()) flush();
      if (c == '-') sign = -sign;
      pending = true;
      continue;
    }
    if (c == '{' || c == '[') ++depth;
    if (c == '}' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    cur += c;
    if (!std::isspace(static_cast<unsigned char>(c))) pending = false;
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  if (pending && trim(cur).empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
  flush();
  return out;
}

SparseMatrix::SparseMatrix(std::vector<std::string> column_labels, std::vector<Row> rows)
    : labels_(std::move(column_labels)), rows_(std::move(rows)) {
  const int cols = static_cast<int>(labels_.size());
  for (auto& r : rows_) {
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [c, x] : r) {
      if (c < 0 || c >= cols) throw DomainError("matrix entry outside the column basis");
    }
  }
}

nlohmann::json SparseMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& [c, x] : r) jr.push_back({c, to_string(x)});
    rows.push_back(std::move(jr));
  }
  return {{"basis", labels_}, {"rows", std::move(rows)}};
}

SparseMatrix SparseMatrix::from_json(const nlohmann::json& j) {
  try {
    auto labels = j.at("basis").get<std::vector<std::string>>();
    std::vector<Row> rows;
    for (const auto& jr : j.at("rows")) {
      Row r;
      for (const auto& e : jr) r[e.at(0).get<int>()] += parse_rational(e.at(1).get<std::string>());
      rows.push_back(std::move(r));
    }
    return SparseMatrix(std::move(labels), std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::size_t rank(const SparseMatrix& m) {
  const std::size_t cols = m.num_cols();
  std::vector<std::vector<mpz_class>> a;
  a.reserve(m.num_rows());
  for (const auto& r : m.rows()) {
    if (r.empty()) continue;
    mpz_class den = 1;
    for (const auto& [c, x] : r) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> dense(cols, 0);
    for (const auto& [c, x] : r) dense[c] = x.get_num() * (den / x.get_den());
    a.push_back(std::move(dense));
  }

  const std::size_t rows = a.size();
  std::size_t r = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& row = a[i];
      const mpz_class f = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (piv * row[j] - f * a[r][j]) / prev, exact by Sylvester's identity
        t = piv * row[j];
        if (f != 0 && a[r][j] != 0) t -= f * a[r][j];
        if (prev != 1) mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        else row[j] = t;
      }
      row[c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

} // namespace skein
