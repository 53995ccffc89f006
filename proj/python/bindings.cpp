#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trilie/cli.hpp"
#include "trilie/errors.hpp"
#include "trilie/parse.hpp"
#include "trilie/repmod.hpp"

namespace py = pybind11;
using namespace trilie;

namespace {

Scalar parameter(const std::string& text, const Scalar& symbol) {
    if (text == "sym") return symbol;
    Scalar s = parse_scalar(text);
    if (!s.is_constant()) throw ConfigError("parameter must be p/q or sym, got " + text);
    return s;
}

py::dict report_dict(const DefectReport& r) {
    py::list defects;
    for (const auto& e : r.entries) {
        py::list idx;
        for (const auto& s : e.indices) idx.append(slot_text(s));
        py::dict d;
        d["axiom"] = e.axiom;
        d["indices"] = idx;
        d["probe"] = e.probe ? py::object(py::str(e.probe->to_string())) : py::object(py::none());
        d["defect"] = e.defect_text();
        defects.append(d);
    }
    py::dict out;
    out["check"] = r.check;
    out["family"] = r.family;
    out["parameters"] = r.parameters;
    out["cases"] = r.cases;
    out["passed"] = r.passed();
    out["defects"] = defects;
    return out;
}

Action action(const std::string& family, const std::string& lambda, const std::string& mu) {
    if (family == "T") return TriAction::t_family(parameter(lambda, Scalar::lambda()), parameter(mu, Scalar::mu()));
    if (family == "psi") return LieAction::psi(parameter(lambda, Scalar::lambda()), parameter(mu, Scalar::mu()));
    if (family == "phi") return LieAction::phi(parameter(mu, Scalar::mu()));
    throw ConfigError("family must be T, psi or phi");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations in the 3-Lie algebra A_omega^delta";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotAModule>(m, "NotAModule", PyExc_ValueError);

    m.def("parse_scalar", [](const std::string& s) { return parse_scalar(s).to_string(); },
          "Canonical form of a scalar expression");
    m.def("parse_elem", [](const std::string& s) { return format(parse_elem(s)); },
          "Canonical form of an element expression");
    m.def("scalar_divides", [](const std::string& d, const std::string& a) -> py::object {
        auto q = exact_quotient(parse_scalar(a), parse_scalar(d));
        return q ? py::object(py::str(q->to_string())) : py::object(py::none());
    }, py::arg("d"), py::arg("a"), "Quotient a / d if d divides a, else None");

    m.def("bracket", [](const std::string& x, const std::string& y, const std::string& z) {
        return format(bracket(parse_elem(x), parse_elem(y), parse_elem(z)));
    });
    m.def("bracket_det", [](const std::string& x, const std::string& y, const std::string& z) {
        return format(bracket_det(parse_elem(x), parse_elem(y), parse_elem(z)));
    });
    m.def("decompose", [](const std::string& expr) {
        const DerivInput in = parse_deriv(expr);
        PqxzElem out = deriv_to_pqxz(in.generators);
        out += in.basis;
        return format(out);
    });

    m.def("check_fundamental", [](std::int64_t lo, std::int64_t hi, unsigned jobs) {
        py::gil_scoped_release release;
        DefectReport r = check_fundamental(Window::of(lo, hi), bracket_basis, jobs);
        py::gil_scoped_acquire acquire;
        return report_dict(r);
    }, py::arg("lo") = -2, py::arg("hi") = 2, py::arg("jobs") = 0);
    m.def("check_module_t", [](const std::string& lambda, const std::string& mu, std::int64_t lo, std::int64_t hi) {
        const auto t = TriAction::t_family(parameter(lambda, Scalar::lambda()), parameter(mu, Scalar::mu()));
        ModuleVerdict v;
        {
            py::gil_scoped_release release;
            v = module_verdict(t, Window::of(lo, hi));
        }
        py::dict out;
        out["is_module"] = v.is_module;
        out["axiom1"] = report_dict(v.axiom1);
        out["axiom2"] = report_dict(v.axiom2);
        return out;
    }, py::arg("lam") = "sym", py::arg("mu") = "sym", py::arg("lo") = -2, py::arg("hi") = 2);
    m.def("counterexample_phi", [](const std::string& mu) {
        const auto c = counterexample_phi(parameter(mu, Scalar::mu()));
        py::dict out;
        out["lhs"] = format(c.lhs);
        out["rhs"] = format(c.rhs);
        out["defect"] = format(c.defect);
        return out;
    }, py::arg("mu") = "sym");
    m.def("orbit", [](const std::string& family, const std::string& start, const std::string& lambda,
                      const std::string& mu, std::int64_t lo, std::int64_t hi) {
        return orbit_probe(action(family, lambda, mu), parse_weight_key(start), Window::of(lo, hi)).summary();
    }, py::arg("family"), py::arg("start"), py::arg("lam") = "sym", py::arg("mu") = "sym", py::arg("lo") = -3,
          py::arg("hi") = 3);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, "Run one command line; returns (exit status, stdout, stderr)");
}
