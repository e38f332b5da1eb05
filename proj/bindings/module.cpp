#include "gwcp3/combinatorics.hpp"
#include "gwcp3/counts.hpp"
#include "gwcp3/elliptic.hpp"
#include "gwcp3/report.hpp"
#include "gwcp3/table.hpp"
#include "gwcp3/wdvv.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gwcp3;

namespace {

py::object to_fraction(const Rational& v) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(v.numerator().str())),
                    py::int_(py::str(v.denominator().str())));
}

py::int_ to_pyint(const Int& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Gromov-Witten invariants of CP^3 (rational via WDVV, elliptic via recursion)";

    py::class_<GWTable>(m, "Table")
        .def(py::init<>())
        .def("get", [](const GWTable& t, int g, int n, int a, int b) {
                 return to_fraction(t.get(g, n, a, b));
             },
             py::arg("genus"), py::arg("degree"), py::arg("a"), py::arg("b"))
        .def("has", [](const GWTable& t, int g, int n, int a, int b) {
                 return t.has(GWKey{g, n, a, b});
             })
        .def("max_complete_degree", &GWTable::max_complete_degree)
        .def("save", &GWTable::save)
        .def_static("load", &GWTable::load)
        .def("records", [](const GWTable& t) {
                 std::ostringstream out;
                 t.write_records(out);
                 return out.str();
             })
        .def("csv", [](const GWTable& t) {
                 std::ostringstream out;
                 t.write_csv(out);
                 return out.str();
             })
        .def("__len__", [](const GWTable& t) { return t.entries().size(); });

    m.def("cells_for_degree", &GWTable::cells_for_degree, py::arg("genus"), py::arg("degree"));
    m.def("golden_table", &load_golden_table1);

    m.def("compute", [](int max_degree, int workers) { return compute_table(max_degree, workers); },
          py::arg("max_degree"), py::arg("workers") = 1,
          "Solve genus 0 (WDVV) and genus 1 (recursions) through max_degree.");

    m.def("verify_golden", [](const GWTable& t, int max_degree) {
              std::vector<py::dict> out;
              for (const auto& d : verify_against_golden(t, max_degree)) {
                  py::dict row;
                  row["degree"] = d.degree;
                  row["a"] = d.a;
                  row["b"] = d.b;
                  row["column"] = d.column;
                  row["expected"] = d.expected;
                  row["actual"] = d.actual;
                  out.push_back(row);
              }
              return out;
          },
          py::arg("table"), py::arg("max_degree") = 5);

    m.def("elliptic_count", [](const GWTable& t, int n, int a, int b) {
              auto c = elliptic_count(t, n, a, b);
              return py::make_tuple(to_fraction(c.raw), to_string(c.status));
          },
          py::arg("table"), py::arg("degree"), py::arg("a"), py::arg("b"));

    m.def("cross_check", [](const GWTable& t, int n, int workers) {
              std::vector<py::tuple> out;
              for (const auto& r : cross_check(t, n, workers))
                  out.push_back(py::make_tuple(r.a, r.b, to_fraction(r.rel_a),
                                               to_fraction(r.rel_b), to_fraction(r.difference)));
              return out;
          },
          py::arg("table"), py::arg("degree"), py::arg("workers") = 1);

    m.def("relation_a_ledger", [](const GWTable& t, int n, int a, int b) {
              std::vector<py::tuple> out;
              for (const auto& [label, value] : relation_a_terms(t, n, a, b).terms)
                  out.push_back(py::make_tuple(label, to_fraction(value)));
              return out;
          });
    m.def("relation_b_ledger", [](const GWTable& t, int n, int a, int b) {
              std::vector<py::tuple> out;
              for (const auto& [label, value] : relation_b_terms(t, n, a, b).terms)
                  out.push_back(py::make_tuple(label, to_fraction(value)));
              return out;
          });
    m.def("relation_a_solve", [](const GWTable& t, int n, int a, int b) {
              return to_fraction(relation_a_solve(t, n, a, b));
          });
    m.def("relation_b_solve", [](const GWTable& t, int n, int a, int b) {
              return to_fraction(relation_b_solve(t, n, a, b));
          });

    m.def("wdvv_residual", [](const GWTable& t, int n) { return to_fraction(wdvv_residual(t, n)); });
    m.def("f1_linear_coefficient", [] { return to_fraction(f1_linear_coefficient()); });

    m.def("binom", [](long long n, long long k) { return to_pyint(binom(n, k)); });
    m.def("multinom", [](long long n, long long k1, long long k2) {
        return to_pyint(multinom(n, k1, k2));
    });

    m.def("combined_csv", [](const GWTable& t, int max_degree) {
        std::ostringstream out;
        write_combined_csv(out, t, max_degree);
        return out.str();
    });
    m.def("combined_markdown", [](const GWTable& t, int max_degree) {
        std::ostringstream out;
        write_combined_markdown(out, t, max_degree);
        return out.str();
    });

    py::register_exception<MissingEntry>(m, "MissingEntryError");
    py::register_exception<ConsistencyViolation>(m, "ConsistencyError");
}
