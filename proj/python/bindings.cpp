// Python module wrapping the core operations.  Exact values cross the
// boundary as strings (cyclotomic power-basis form) or arbitrary-precision
// ints; reports come through the same JSON builders the command-line tool
// uses, converted to plain dicts.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <complex>
#include <optional>

#include "json.hpp"

#include "bicay/catalog.hpp"
#include "bicay/cayley.hpp"
#include "bicay/chars.hpp"
#include "bicay/engine.hpp"
#include "bicay/errors.hpp"
#include "bicay/graphiso.hpp"
#include "bicay/io.hpp"

namespace py = pybind11;
using namespace bicay;
using nlohmann::json;

namespace {

py::object big_int(const mpz_class& z) {
  std::string s = z.get_str();
  PyObject* v = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!v) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(v);
}

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default:
      return py::none();
  }
}

ConnectionSet set_of(const Group& g, std::vector<unsigned> members) {
  return make_connection_set(g, std::move(members));
}

}  // namespace

PYBIND11_MODULE(bicay, m) {
  m.doc() = "Character-sum invariants of Cayley graphs on small groups";

  py::register_exception<Error>(m, "BicayError");

  py::class_<Group>(m, "Group")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("name", [](const Group& g) { return g.name(); })
      .def_property_readonly("is_abelian",
                             [](const Group& g) {
                               for (unsigned x = 0; x < g.order(); ++x)
                                 for (unsigned y = x + 1; y < g.order(); ++y)
                                   if (g.op(x, y) != g.op(y, x)) return false;
                               return true;
                             })
      .def("op", &Group::op, py::arg("x"), py::arg("y"))
      .def("inv", &Group::inv, py::arg("x"))
      .def("element_order",
           [](const Group& g, unsigned x) { return element_order(g, x); },
           py::arg("x"))
      .def_property_readonly(
          "generators", [](const Group& g) { return g.generators(); })
      .def("__len__", &Group::order)
      .def("__repr__", [](const Group& g) {
        return "<Group " + g.name() + " of order " +
               std::to_string(g.order()) + ">";
      });

  m.def("build_group", &build_group, py::arg("label"),
        "Group from a catalog label such as '[20,3]' or a recognized name.");
  m.def("load_group_spec", &load_group_spec, py::arg("text"),
        "Group from a textual spec: perm/sdp/dp/sl23 forms.");
  m.def("catalog_labels", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.label);
    return out;
  });
  m.def("sl23_golden_sets", &sl23_golden_sets,
        "The reference violating pair for the order-24 special linear group.");

  py::class_<CharacterTable>(m, "CharacterTable")
      .def_property_readonly("conductor",
                             [](const CharacterTable& t) { return t.conductor; })
      .def_property_readonly("degrees",
                             [](const CharacterTable& t) { return t.degrees; })
      .def_property_readonly(
          "num_classes", [](const CharacterTable& t) { return t.h; })
      .def_property_readonly("class_sizes",
                             [](const CharacterTable& t) {
                               std::vector<size_t> out;
                               for (const auto& c : t.partition.classes)
                                 out.push_back(c.size());
                               return out;
                             })
      .def("value",
           [](const CharacterTable& t, unsigned row, unsigned cls) {
             return t.rows.at(row).at(cls).to_string();
           },
           py::arg("row"), py::arg("cls"),
           "Exact value as a power-basis string.")
      .def("value_c",
           [](const CharacterTable& t, unsigned row, unsigned cls) {
             return t.rows.at(row).at(cls).to_complex();
           },
           py::arg("row"), py::arg("cls"), "Value as a complex double.")
      .def("__repr__", [](const CharacterTable& t) {
        return "<CharacterTable " + std::to_string(t.h) + " classes, order " +
               std::to_string(t.group.order()) + ">";
      });

  m.def("character_table", &character_table, py::arg("group"));

  m.def(
      "char_sum_set",
      [](const CharacterTable& t, const Group& g, std::vector<unsigned> members,
         unsigned degree, bool multiset) {
        CharSumSet s =
            char_sum_set(t, set_of(g, std::move(members)), degree, multiset);
        std::vector<std::string> out;
        for (const auto& v : s.values) out.push_back(v.to_string());
        return out;
      },
      py::arg("table"), py::arg("group"), py::arg("members"),
      py::arg("degree"), py::arg("multiset") = false,
      "Character sums of the set over all rows of one degree, exact strings.");

  m.def(
      "m_profiles_equal",
      [](const CharacterTable& t, const Group& g, std::vector<unsigned> s,
         std::vector<unsigned> u) {
        return m_profiles_equal(t, set_of(g, std::move(s)),
                                set_of(g, std::move(u)));
      },
      py::arg("table"), py::arg("group"), py::arg("s"), py::arg("t"),
      "True when every degree's char-sum set agrees between the two sets.");

  m.def(
      "char_poly",
      [](const Group& g, std::vector<unsigned> members) {
        auto coeffs =
            char_poly_exact(build_cayley(g, set_of(g, std::move(members))));
        py::list out;
        for (const auto& c : coeffs) out.append(big_int(c));
        return out;
      },
      py::arg("group"), py::arg("members"),
      "Exact adjacency characteristic polynomial, ascending coefficients.");

  m.def(
      "eigenvalues",
      [](const Group& g, std::vector<unsigned> members) {
        return eigenvalues_float(
            build_cayley(g, set_of(g, std::move(members))));
      },
      py::arg("group"), py::arg("members"),
      "Clustered float spectrum as (value, multiplicity), descending.");

  m.def(
      "spectrum",
      [](const Group& g, std::vector<unsigned> members,
         const std::string& label) {
        ConnectionSet s = set_of(g, std::move(members));
        CharacterTable table = character_table(g);
        SpectrumReport rep = spectrum_report(build_cayley(g, s), table);
        return to_py(spectrum_json(g, s, rep, label));
      },
      py::arg("group"), py::arg("members"), py::arg("label") = "",
      "Full spectrum report: char poly, clusters, linear sums, tag.");

  m.def(
      "are_isomorphic",
      [](const Group& g, std::vector<unsigned> s, std::vector<unsigned> t) {
        return are_isomorphic(build_cayley(g, set_of(g, std::move(s))),
                              build_cayley(g, set_of(g, std::move(t))));
      },
      py::arg("group"), py::arg("s"), py::arg("t"),
      "Whether the two Cayley graphs are isomorphic.");

  m.def(
      "canonical_hex",
      [](const Group& g, std::vector<unsigned> members) {
        return canonical_form(build_cayley(g, set_of(g, std::move(members))))
            .to_hex();
      },
      py::arg("group"), py::arg("members"));

  m.def(
      "bi_pair",
      [](const Group& g, std::vector<unsigned> s, std::vector<unsigned> t,
         const std::string& label) {
        CharacterTable table = character_table(g);
        return to_py(bi_pair_report(table, set_of(g, std::move(s)),
                                    set_of(g, std::move(t)), label));
      },
      py::arg("group"), py::arg("s"), py::arg("t"), py::arg("label") = "",
      "Pair report: per-degree sums, equality, isomorphism, violation flag.");

  m.def(
      "bi_check_group",
      [](const Group& g, const std::string& mode, uint64_t budget,
         unsigned jobs, const std::string& label) {
        auto t0 = std::chrono::steady_clock::now();
        BIGroupReport r = [&] {
          py::gil_scoped_release rel;
          CharacterTable table = character_table(g);
          BIMode m = mode == "full" ? BIMode::full : BIMode::reduced;
          return bi_check_group(g, table, m, budget, jobs);
        }();
        double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        return to_py(bi_group_report_json(g, r, label, dt));
      },
      py::arg("group"), py::arg("mode") = "reduced",
      py::arg("budget") = uint64_t(1) << 20, py::arg("jobs") = 1,
      py::arg("label") = "",
      "Scan connection sets for an invariance violation.");

  m.def(
      "find_non_ci_witness",
      [](const Group& g, uint64_t budget, const std::string& label) {
        auto t0 = std::chrono::steady_clock::now();
        CISearchReport r = [&] {
          py::gil_scoped_release rel;
          return find_non_ci_witness(g, budget);
        }();
        double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        return to_py(ci_search_json(g, r, label, budget, dt));
      },
      py::arg("group"), py::arg("budget") = uint64_t(1) << 20,
      py::arg("label") = "",
      "Search for isomorphic sets with no automorphism between them.");

  m.def(
      "construct_non_bi_witness",
      [](const Group& g, uint64_t budget, unsigned jobs,
         const std::string& label) {
        auto t0 = std::chrono::steady_clock::now();
        auto w = [&] {
          py::gil_scoped_release rel;
          CharacterTable table = character_table(g);
          return construct_non_bi_witness(g, table, budget, jobs);
        }();
        double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        return to_py(non_bi_witness_json(g, w, label, dt));
      },
      py::arg("group"), py::arg("budget") = uint64_t(1) << 17,
      py::arg("jobs") = 1, py::arg("label") = "",
      "Build or search out an invariance-breaking pair for the group.");

  m.def(
      "classify_f20",
      [](const Group& g, std::vector<unsigned> members) {
        F20Classification c =
            classify_f20_spectrum(set_of(g, std::move(members)));
        py::dict out;
        out["type"] = c.type;
        out["mu2"] = c.mu2;
        out["mu3"] = c.mu3;
        out["mult2"] = c.mult2;
        out["mult3"] = c.mult3;
        return out;
      },
      py::arg("group"), py::arg("members"),
      "Spectrum shape of a generating set in the order-20 Frobenius group.");

  m.def(
      "classify_f42",
      [](const Group& g, std::vector<unsigned> members) {
        F42Classification c =
            classify_f42_spectrum(set_of(g, std::move(members)));
        py::dict out;
        out["type"] = c.type;
        out["mu2"] = c.mu2;
        out["mu3"] = c.mu3;
        out["mu5"] = c.mu5;
        out["mult2"] = c.mult2;
        out["mult3"] = c.mult3;
        out["mult5"] = c.mult5;
        return out;
      },
      py::arg("group"), py::arg("members"),
      "Spectrum shape of a generating set in the order-42 Frobenius group.");

  m.def(
      "enumerate_connection_sets",
      [](const Group& g, unsigned size, bool generating_only) {
        std::vector<std::vector<unsigned>> out;
        for (const auto& s :
             enumerate_connection_sets(g, size, generating_only))
          out.push_back(s.members);
        return out;
      },
      py::arg("group"), py::arg("size"), py::arg("generating_only") = true,
      "All inverse-closed subsets of one size, as member index lists.");

  m.attr("__version__") = "0.1.0";
}
