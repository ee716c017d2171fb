#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skein/actions.hpp"
#include "skein/combinat.hpp"
#include "skein/diagram_ring.hpp"
#include "skein/error.hpp"
#include "skein/reptheory.hpp"
#include "skein/verify.hpp"

namespace py = pybind11;
using namespace skein;

namespace {

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(q));
}

Rational rational(const py::handle& x) {
  return parse_rational(py::str(x).cast<std::string>());
}

template <typename B>
void bind_vector(py::module_& m, const char* name) {
  using V = LinComb<B>;
  py::class_<V>(m, name)
      .def(py::init<>())
      .def(py::init([](const B& b) { return V(b); }))
      .def(py::init([](const py::dict& terms) {
        V v;
        for (auto [k, c] : terms) v.add_term(k.template cast<B>(), rational(c));
        return v;
      }))
      .def("terms", [](const V& v) {
        py::list out;
        for (const auto& [b, c] : v) out.append(py::make_tuple(b, fraction(c)));
        return out;
      })
      .def("coeff", [](const V& v, const B& b) { return fraction(v.coeff(b)); })
      .def("is_zero", &V::is_zero)
      .def("__len__", &V::size)
      .def("__add__", [](const V& a, const V& b) { return a + b; })
      .def("__sub__", [](const V& a, const V& b) { return a - b; })
      .def("__neg__", [](const V& a) { return -a; })
      .def("__mul__", [](const V& a, const py::object& c) { return rational(c) * a; })
      .def("__rmul__", [](const V& a, const py::object& c) { return rational(c) * a; })
      .def("__eq__", [](const V& a, const V& b) { return a == b; })
      .def("__str__", &V::pretty)
      .def("__repr__", [name](const V& v) { return std::string(name) + "(" + v.pretty() + ")"; });
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skein modules of noncrossing matchings and set partitions";

  static py::exception<Error> error(m, "SkeinError");
  static py::exception<DomainError> domain_error(m, "DomainError", error.ptr());
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<SizeLimitError> size_error(m, "SizeLimitError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const SizeLimitError& e) {
      py::set_error(size_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Matching>(m, "Matching")
      .def(py::init([](const std::string& text, int n) { return Matching::parse(text, n); }), py::arg("text"),
           py::arg("n") = -1)
      .def_property_readonly("n", &Matching::n)
      .def_property_readonly("pairs", &Matching::pairs)
      .def("partner", &Matching::partner)
      .def("is_noncrossing", [](const Matching& x) { return is_noncrossing(x); })
      .def("__eq__", [](const Matching& a, const Matching& b) { return a == b; })
      .def("__lt__", [](const Matching& a, const Matching& b) { return a < b; })
      .def("__hash__", [](const Matching& a) { return py::hash(py::str(a.str())); })
      .def("__str__", &Matching::str)
      .def("__repr__", [](const Matching& a) { return "Matching('" + a.str() + "')"; });

  py::class_<SetPartition>(m, "SetPartition")
      .def(py::init([](const std::string& text, int n) { return SetPartition::parse(text, n); }), py::arg("text"),
           py::arg("n") = -1)
      .def_property_readonly("n", &SetPartition::n)
      .def_property_readonly("blocks", &SetPartition::blocks)
      .def("singleton_free", &SetPartition::singleton_free)
      .def("is_noncrossing", [](const SetPartition& x) { return is_noncrossing(x); })
      .def("__eq__", [](const SetPartition& a, const SetPartition& b) { return a == b; })
      .def("__lt__", [](const SetPartition& a, const SetPartition& b) { return a < b; })
      .def("__hash__", [](const SetPartition& a) { return py::hash(py::str(a.str())); })
      .def("__str__", &SetPartition::str)
      .def("__repr__", [](const SetPartition& a) { return "SetPartition('" + a.str() + "')"; });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("adjacent", &Permutation::adjacent)
      .def_static("from_word", [](int n, const std::vector<int>& w) { return Permutation::from_word(n, w); })
      .def_property_readonly("n", &Permutation::n)
      .def_property_readonly("images", &Permutation::images)
      .def("word", &Permutation::word)
      .def("sign", &Permutation::sign)
      .def("cycle_type", &Permutation::cycle_type)
      .def("__call__", &Permutation::operator())
      .def("__mul__", &Permutation::operator*)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__str__", &Permutation::str);

  bind_vector<Matching>(m, "MatchingVector");
  bind_vector<SetPartition>(m, "PartitionVector");
  bind_vector<EdgeMonomial>(m, "RingElement");

  py::class_<EdgeMonomial>(m, "EdgeMonomial")
      .def(py::init([](const std::string& text, int n) { return EdgeMonomial::parse(text, n); }), py::arg("text"),
           py::arg("n") = -1)
      .def_property_readonly("degree", &EdgeMonomial::degree)
      .def_property_readonly("edges", &EdgeMonomial::edges)
      .def("__eq__", [](const EdgeMonomial& a, const EdgeMonomial& b) { return a == b; })
      .def("__str__", &EdgeMonomial::str);

  auto limits = [](int limit) { return limit > 0 ? EnumLimits::uniform(limit) : EnumLimits{}; };
  m.def("enumerate_matchings", [=](int n, int limit) { return enumerate_matchings(n, limits(limit)); }, py::arg("n"),
        py::arg("limit") = 0);
  m.def("enumerate_ncm", [=](int n, int limit) { return enumerate_ncm(n, limits(limit)); }, py::arg("n"),
        py::arg("limit") = 0);
  m.def("enumerate_set_partitions", [=](int n, int limit) { return enumerate_set_partitions(n, limits(limit)); },
        py::arg("n"), py::arg("limit") = 0);
  m.def("enumerate_ncp",
        [=](int n, bool singleton_free, std::optional<int> blocks, int limit) {
          return enumerate_ncp(n, singleton_free, blocks, limits(limit));
        },
        py::arg("n"), py::arg("singleton_free") = false, py::arg("blocks") = py::none(), py::arg("limit") = 0);

  m.def("skein_act_ncm", py::overload_cast<int, const MatchingVector&>(&skein_act_ncm), py::arg("i"), py::arg("v"));
  m.def("skein_act_ncp", py::overload_cast<int, const PartitionVector&>(&skein_act_ncp), py::arg("i"), py::arg("v"));
  m.def("act_signed", py::overload_cast<const Permutation&, const MatchingVector&>(&act_signed));
  m.def("act_signed", py::overload_cast<const Permutation&, const PartitionVector&>(&act_signed));
  m.def("project_matching", [](const MatchingVector& v) { return project_matchings(v); });
  m.def("project_partition", [](const PartitionVector& v) { return project_partitions(v); });
  m.def("uncrossing_word", [](const SetPartition& p) { return uncrossing_word(p); });
  m.def("embed_f", &embed_f, py::arg("partition"));

  py::class_<DiagramRing>(m, "DiagramRing")
      .def(py::init<int>())
      .def_property_readonly("n", &DiagramRing::n)
      .def("normal_form", [](const DiagramRing& r, const std::string& text) {
        return r.normal_form(EdgeMonomial::parse(text, r.n()));
      })
      .def("normalize", &DiagramRing::normalize)
      .def("multiply", &DiagramRing::multiply)
      .def("h", [](const DiagramRing& r, const std::vector<int>& a) { return r.h(a); })
      .def("h_full", &DiagramRing::h_full)
      .def("h_partition", &DiagramRing::h_partition)
      .def("ideal_dimension", [](const DiagramRing& r) { return r.ideal_H_basis().dimension; });

  m.def("mn_character", [](const std::vector<int>& lambda, const std::vector<int>& ct) {
    return fraction(mn_character(IntPartition(lambda), IntPartition(ct)));
  });
  m.def("hook_dim", [](const std::vector<int>& lambda) { return hook_dim(IntPartition(lambda)); });
  m.def("character_table_csv", &character_table_csv);

  m.def("riordan_numbers", &verify::riordan_numbers);
  m.def("motzkin_numbers", &verify::motzkin_numbers);
  m.def("verify_suites", [] {
    std::vector<std::string> names;
    for (const auto& s : verify::suites()) names.push_back(s.name);
    return names;
  });
  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> n_max, std::uint64_t seed) {
        std::vector<verify::Report> reports;
        {
          py::gil_scoped_release release;
          reports = verify::run(suite, n_max, seed);
        }
        py::object loads = py::module_::import("json").attr("loads");
        py::list out;
        for (const auto& r : reports) out.append(loads(r.to_json().dump()));
        return out;
      },
      py::arg("suite"), py::arg("n_max") = py::none(), py::arg("seed") = 1);
}
