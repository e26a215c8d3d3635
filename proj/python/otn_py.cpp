#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "otn/closure_lab.hpp"
#include "otn/coeff.hpp"
#include "otn/fn_calc.hpp"
#include "otn/order.hpp"
#include "otn/properties.hpp"
#include "otn/term.hpp"
#include "otn/theta.hpp"

namespace py = pybind11;
using namespace otn;

namespace {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Zero: return "zero";
        case Kind::Stable: return "stable";
        case Kind::Sum: return "sum";
        case Kind::Phi: return "phi";
        case Kind::Omega: return "omega";
        case Kind::Psi: return "psi";
    }
    return "?";
}

// Accepts a Term or its text form.
Term as_term(const System& sys, const py::handle& h) {
    if (py::isinstance<Term>(h)) return h.cast<Term>();
    return parse(h.cast<std::string>(), sys.n());
}

// Accepts a sequence of (arg, value) pairs of Terms or strings.
FiniteFn as_fn(const System& sys, const py::iterable& pairs) {
    std::vector<FnEntry> es;
    for (auto item : pairs) {
        auto pr = item.cast<py::sequence>();
        if (pr.size() != 2) throw py::value_error("function entries are (arg, value) pairs");
        es.push_back({as_term(sys, pr[0]), as_term(sys, pr[1])});
    }
    return make_fn(sys, std::move(es));
}

py::list fn_pairs(const FiniteFn& f) {
    py::list out;
    for (const auto& e : f.entries) out.append(py::make_tuple(e.arg, e.val));
    return out;
}

py::dict suite_dict(const SuiteResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["passed"] = r.passed();
    d["checked"] = r.checked;
    d["violations"] = r.violations;
    d["examples"] = r.examples;
    d["notes"] = r.notes;
    d["seconds"] = r.seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(otn_py, m) {
    m.doc() = "Ordinal term notation kernel";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Term>(m, "Term")
        .def_property_readonly("kind", [](Term t) { return kind_name(t.kind()); })
        .def_property_readonly("length", &Term::len)
        .def("subterms", [](Term t) { return imm_subterms(t); })
        .def("__str__", [](Term t) { return print(t); })
        .def("__repr__", [](Term t) { return "Term('" + print(t) + "')"; })
        .def("__eq__", [](Term a, Term b) { return a == b; }, py::is_operator())
        .def("__hash__", [](Term t) { return t.shape(); });

    py::class_<System>(m, "System")
        .def(py::init<int>(), py::arg("n") = 1)
        .def_property_readonly("n", &System::n)
        .def_property_readonly("lam", &System::lambda)
        .def("parse", [](const System& s, const std::string& text) { return parse(text, s.n()); })
        .def("compare",
             [](const System& s, py::object a, py::object b) {
                 return static_cast<int>(compare(s, as_term(s, a), as_term(s, b)));
             })
        .def("validate",
             [](const System& s, py::object t) {
                 Verdict v = validate(s, as_term(s, t));
                 py::dict d;
                 d["accepted"] = v.accepted;
                 d["clause"] = v.clause;
                 d["reason"] = v.reason;
                 d["degree"] = fn_pairs(v.m);
                 return d;
             })
        .def("sort",
             [](const System& s, const py::iterable& xs) {
                 std::vector<Term> ts;
                 for (auto x : xs) ts.push_back(as_term(s, x));
                 sort_unique(s, ts);
                 return ts;
             })
        .def("enumerate",
             [](const System& s, int max_len) { return enumerate(s, max_len).terms; }, py::arg("max_len"))
        .def("count", [](const System& s, int max_len) { return enumerate(s, max_len).terms.size(); },
             py::arg("max_len"))
        .def("add", [](const System& s, py::object a, py::object b) { return add(s, as_term(s, a), as_term(s, b)); })
        .def("theta",
             [](const System& s, py::object b, py::object xi) { return theta_term(s, as_term(s, b), as_term(s, xi)); })
        .def("theta_inverse",
             [](const System& s, py::object c, py::object z) {
                 return theta_minus_term(s, as_term(s, c), as_term(s, z));
             })
        .def("tnf",
             [](const System& s, py::object t) {
                 py::list out;
                 for (const auto& e : to_tnf(s, as_term(s, t)).entries) out.append(py::make_tuple(e.b, e.xi, e.coeff));
                 return out;
             })
        .def("a_measure", [](const System& s, py::object t) { return a_measure_term(s, as_term(s, t)); })
        .def("is_irreducible", [](const System& s, const py::iterable& f) { return is_irreducible(s, as_fn(s, f)); })
        .def("less_c",
             [](const System& s, const py::iterable& f, py::object c, py::object xi) {
                 return less_c(s, as_fn(s, f), as_term(s, c), as_term(s, xi));
             })
        .def("lx_less",
             [](const System& s, const py::iterable& f, const py::iterable& g, py::object b) {
                 return lx_less(s, as_fn(s, f), as_fn(s, g), as_term(s, b));
             })
        .def("o", [](const System& s, const py::iterable& f) { return o_of(s, as_fn(s, f)); })
        .def("e_set", [](const System& s, py::object t) { return e_set(s, as_term(s, t)); })
        .def("f_set",
             [](const System& s, py::object d, py::object t) { return f_set(s, as_term(s, d), as_term(s, t)); });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, int max_len) {
            SuiteResult r;
            {
                py::gil_scoped_release release;
                r = run_suite(name, max_len);
            }
            return suite_dict(r);
        },
        py::arg("name"), py::arg("max_len") = 0);
}
