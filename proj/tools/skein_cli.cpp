// skein: command-line driver for the skein library.
//
// Exit codes: 0 success, 1 malformed input or unknown suite, 2 size limit
// exceeded, 3 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "skein/actions.hpp"
#include "skein/combinat.hpp"
#include "skein/diagram_ring.hpp"
#include "skein/error.hpp"
#include "skein/formal.hpp"
#include "skein/reptheory.hpp"
#include "skein/verify.hpp"

using namespace skein;
using nlohmann::json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitLimit = 2;
constexpr int kExitFailed = 3;

// Ground set of a text vector: the explicit n, or the largest element named.
int infer_n(const std::vector<TextTerm>& terms, std::optional<int> n) {
  if (n) return *n;
  int top = 0;
  for (const auto& t : terms) {
    if (t.object == "1") continue;
    std::string obj = t.object;
    // monomials are written as juxtaposed edges
    std::string wrapped = obj.rfind("{{", 0) == 0 || obj.rfind("[[", 0) == 0 ? obj : "{" + obj + "}";
    std::replace(wrapped.begin(), wrapped.end(), '*', ',');
    for (std::size_t k = 0; (k = wrapped.find("}{", k)) != std::string::npos;) wrapped.replace(k, 2, "},{");
    for (std::size_t k = 0; (k = wrapped.find("][", k)) != std::string::npos;) wrapped.replace(k, 2, "],[");
    for (const auto& block : parse_nested_list(wrapped))
      for (int v : block) top = std::max(top, v);
  }
  return top;
}

bool looks_like_json(const std::string& text) {
  const auto k = text.find_first_not_of(" \t\n");
  if (k == std::string::npos || text[k] != '{') return false;
  const auto q = text.find_first_not_of(" \t\n", k + 1);
  return q != std::string::npos && text[q] == '"';
}

template <typename B, typename Parse>
LinComb<B> read_vector(const std::string& text, const std::string& kind, std::optional<int> n, Parse parse) {
  if (looks_like_json(text)) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return vector_from_json<B>(j, kind, [&](const std::string& s, int m) { return parse(s, n ? *n : m); });
  }
  const auto terms = split_terms(text);
  const int ground = infer_n(terms, n);
  LinComb<B> v;
  for (const auto& t : terms) v.add_term(parse(t.object, ground), t.coeff);
  return v;
}

MatchingVector read_matchings(const std::string& text, std::optional<int> n) {
  return read_vector<Matching>(text, "matching", n,
                               [](const std::string& s, int m) { return Matching::parse(s, m); });
}

PartitionVector read_partitions(const std::string& text, std::optional<int> n) {
  return read_vector<SetPartition>(text, "set_partition", n,
                                   [](const std::string& s, int m) { return SetPartition::parse(s, m); });
}

RingElement read_ring(const std::string& text, std::optional<int> n) {
  return read_vector<EdgeMonomial>(text, "monomial", n,
                                   [](const std::string& s, int m) { return EdgeMonomial::parse(s, m); });
}

template <typename B>
void print_vector(const LinComb<B>& v, const std::string& kind, int n, bool as_json) {
  if (as_json) std::cout << vector_to_json(v, kind, n).dump() << "\n";
  else std::cout << v.pretty() << "\n";
}

int ground_of(int n_vec, std::optional<int> n) { return n ? *n : std::max(n_vec, 0); }

void check_index(int i, int n) {
  if (i < 1 || i >= n)
    throw DomainError("index i = " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1) + " for n = " +
                      std::to_string(n));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skein modules of noncrossing matchings and partitions"};
  app.require_subcommand(1);
  int limit_override = 0;
  app.add_option("--limit-override", limit_override, "Raise every enumeration size limit to this n");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List the objects of one kind on [n]");
  std::string kind;
  int n = 0;
  bool singleton_free = false;
  std::optional<int> blocks;
  enumerate->add_option("kind", kind, "matchings | ncm | partitions | ncp")
      ->required()
      ->check(CLI::IsMember({"matchings", "ncm", "partitions", "ncp"}));
  enumerate->add_option("--n", n, "Ground set size")->required();
  enumerate->add_flag("--singleton-free", singleton_free, "Only singleton-free partitions");
  enumerate->add_option("--blocks", blocks, "Number of blocks (pairs for matchings)");

  // act
  auto* act = app.add_subcommand("act", "Apply s_i through the skein action");
  std::string space, vec;
  int index = 0;
  std::optional<int> vec_n;
  bool as_json = false;
  act->add_option("space", space, "ncm | ncp")->required()->check(CLI::IsMember({"ncm", "ncp"}));
  act->add_option("--i", index, "Adjacent transposition index")->required();
  act->add_option("--vec", vec, "Vector, as a formal sum or JSON")->required();
  act->add_option("--n", vec_n, "Ground set size (default: largest element)");
  act->add_flag("--json", as_json, "Print JSON");

  // embed
  auto* embed = app.add_subcommand("embed", "Sum of matchings choosing one pair in each block");
  std::string partition_text;
  embed->add_option("partition", partition_text)->required();
  embed->add_option("--n", vec_n);
  embed->add_flag("--json", as_json);

  // project
  auto* project = app.add_subcommand("project", "Resolve crossings into the noncrossing span");
  project->add_option("space", space, "m | p")->required()->check(CLI::IsMember({"m", "p"}));
  project->add_option("vec", vec)->required();
  project->add_option("--n", vec_n);
  project->add_flag("--json", as_json);

  // nf
  auto* nf = app.add_subcommand("nf", "Normal form in the edge ring");
  std::string monomial;
  nf->add_option("monomial", monomial, "e.g. {1,3}{2,4}")->required();
  nf->add_option("--n", vec_n);
  nf->add_flag("--json", as_json);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<int> n_max;
  std::uint64_t seed = 1;
  std::string out_path;
  bool list = false;
  verify->add_option("suite", suite, "Suite name or 'all'");
  verify->add_option("--n-max", n_max, "Largest n checked");
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--out", out_path, "Write the JSON report here");
  verify->add_flag("--list", list, "List the suites");

  // chartable
  auto* chartable = app.add_subcommand("chartable", "Character table of S_n as CSV");
  chartable->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const EnumLimits limits = limit_override > 0 ? EnumLimits::uniform(limit_override) : EnumLimits{};

  try {
    if (*enumerate) {
      std::vector<std::string> lines;
      if (kind == "matchings" || kind == "ncm") {
        auto ms = kind == "ncm" ? enumerate_ncm(n, limits) : enumerate_matchings(n, limits);
        for (const auto& m : ms)
          if (!blocks || m.num_pairs() == *blocks) lines.push_back(brace_form(m.str()));
      } else if (kind == "ncp") {
        for (const auto& p : enumerate_ncp(n, singleton_free, blocks, limits)) lines.push_back(brace_form(p.str()));
      } else {
        for (const auto& p : enumerate_set_partitions(n, limits))
          if ((!singleton_free || p.singleton_free()) && (!blocks || p.num_blocks() == *blocks))
            lines.push_back(brace_form(p.str()));
      }
      for (const auto& l : lines) std::cout << l << "\n";
      std::cerr << "count: " << lines.size() << "\n";
    } else if (*act) {
      if (space == "ncm") {
        auto v = read_matchings(vec, vec_n);
        const int ground = ground_of(v.n(), vec_n);
        check_index(index, ground);
        print_vector(skein_act_ncm(index, v), "matching", ground, as_json);
      } else {
        auto v = read_partitions(vec, vec_n);
        const int ground = ground_of(v.n(), vec_n);
        check_index(index, ground);
        print_vector(skein_act_ncp(index, v), "set_partition", ground, as_json);
      }
    } else if (*embed) {
      auto v = read_partitions(partition_text, vec_n);
      auto image = v.map_linear([](const SetPartition& p) { return embed_f(p); });
      print_vector(image, "matching", ground_of(v.n(), vec_n), as_json);
    } else if (*project) {
      if (space == "m") {
        auto v = read_matchings(vec, vec_n);
        print_vector(project_matchings(v), "matching", ground_of(v.n(), vec_n), as_json);
      } else {
        auto v = read_partitions(vec, vec_n);
        print_vector(project_partitions(v), "set_partition", ground_of(v.n(), vec_n), as_json);
      }
    } else if (*nf) {
      auto u = read_ring(monomial, vec_n);
      const int ground = ground_of(u.n(), vec_n);
      auto reduced = DiagramRing(ground).normalize(u);
      if (as_json) std::cout << ring_element_to_json(reduced, ground).dump() << "\n";
      else std::cout << reduced.pretty() << "\n";
    } else if (*verify) {
      if (list) {
        for (const auto& s : verify::suites())
          std::cout << s.name << "\t(n <= " << s.default_n_max << ")\t" << s.description << "\n";
        return 0;
      }
      if (suite.empty()) throw ParseError("missing suite name; use --list to see them");
      const int cap = limit_override > 0 ? limit_override : 10;
      if (n_max && *n_max > cap) throw SizeLimitError(*n_max, cap);
      const auto reports = verify::run(suite, n_max, seed);
      json j = json::array();
      for (const auto& r : reports) j.push_back(r.to_json());
      if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write " + out_path);
        out << j.dump(2) << "\n";
        for (const auto& r : reports)
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.check << " (" << r.ms << " ms)\n";
      }
      for (const auto& r : reports) {
        if (!r.passed) {
          std::cerr << "verification failed: " << r.check << ": " << r.counterexample.value_or("?") << "\n";
          return kExitFailed;
        }
      }
    } else if (*chartable) {
      std::cout << character_table_csv(n);
    }
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
