#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <polyenum/closedform.hpp>
#include <polyenum/lattice.hpp>
#include <polyenum/oracle.hpp>
#include <polyenum/polynomial.hpp>
#include <polyenum/series.hpp>
#include <polyenum/strip.hpp>
#include <polyenum/verify.hpp>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace polyenum;

namespace {

// Count tables cross the boundary as {key tuple: int}. Counts fit in
// long long, so no string detour is needed.
py::dict table_to_dict(const CoeffTable& t) {
    py::dict d;
    for (const auto& [key, cnt] : t.entries()) {
        py::tuple k(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) k[i] = key[i];
        d[k] = cnt;
    }
    return d;
}

// Polynomial terms as (deg_a, deg_b, numerator, denominator) with the
// rational parts as decimal strings: coefficients can exceed machine ints.
py::list poly_terms(const Poly2& p) {
    py::list out;
    for (const auto& [key, c] : p.terms())
        out.append(py::make_tuple(key[0], key[1], c.get_num().get_str(), c.get_den().get_str()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_polyenum, m) {
    m.doc() = "exact enumeration of polyomino and polygon classes (C++ core)";

    m.def("formula_ids", &formula_ids, "All catalog formula identifiers, sorted.");

    m.def(
        "class_labels",
        [] {
            std::vector<std::string> out;
            for (ClassLabel l : all_labels()) out.push_back(label_name(l));
            return out;
        },
        "All class labels accepted by enumerate_class.");

    m.def(
        "evaluate_json",
        [](const std::string& id, int max_x, int max_y, int max_q) {
            return evaluate(id, TruncOrder{max_x, max_y, max_q, 0}).to_json();
        },
        py::arg("formula_id"), py::arg("max_x") = 6, py::arg("max_y") = 6, py::arg("max_q") = 12,
        "Expand a catalog formula; returns the canonical JSON encoding of the\n"
        "truncated series (byte-reproducible).");

    m.def(
        "enumerate_class",
        [](const std::string& label, int max_area, int max_half_perimeter) {
            return table_to_dict(polyenum::enumerate_class(label_from_string(label), max_area,
                                                           max_half_perimeter));
        },
        py::arg("label"), py::arg("max_area"), py::arg("max_half_perimeter") = 0,
        "Brute-force counts keyed (m, n, k) = (horizontal half-perimeter,\n"
        "vertical half-perimeter, area).");

    m.def(
        "enumerate_sap_strip",
        [](int height, int max_half_perimeter) {
            return table_to_dict(polyenum::enumerate_sap_strip(height, max_half_perimeter));
        },
        py::arg("height"), py::arg("max_half_perimeter"),
        "Self-avoiding polygons of height <= k keyed (m, n), each weighted by\n"
        "the number of offsets it can occupy in the strip.");

    m.def(
        "solve_strip",
        [](int height) {
            RatFun s = polyenum::solve_strip(height);
            py::dict d;
            d["height"] = height;
            d["vars"] = py::make_tuple("x", "y");
            d["numerator"] = poly_terms(s.num);
            d["denominator"] = poly_terms(s.den);
            d["display"] =
                "S_" + std::to_string(height) + "(x, y) = " + s.to_string("x", "y");
            return d;
        },
        py::arg("height"),
        "The strip polygon generating function as a reduced rational\n"
        "function: two coefficient tables plus a display string.");

    m.def("growth_lower_bound", &growth_lower_bound, py::arg("height"), py::arg("digits") = 2,
          "Decimal lower bound on the polygon growth constant from the\n"
          "dominant pole of the strip solution.");

    m.def(
        "run_all_checks",
        [] {
            py::list out;
            for (const CheckResult& r : run_all_checks()) {
                py::dict d;
                d["number"] = r.number;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        "Run the ten acceptance checks (takes a while); returns one dict per\n"
        "check with number, name, passed and detail.");
}
