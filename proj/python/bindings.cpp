#include <sptforge/combinatorics.hpp>
#include <sptforge/registry.hpp>
#include <sptforge/sptcrank.hpp>

#include "cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace sptforge;

namespace {

py::object to_py(const BigInt &v)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.to_string().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt> &v)
{
    py::list out;
    for (const auto &x : v) {
        out.append(to_py(x));
    }
    return out;
}

py::dict report_dict(const VerificationReport &r)
{
    py::dict d;
    d["id"] = r.id;
    d["order"] = r.order;
    d["status"] = status_name(r.status);
    if (r.first_mismatch) {
        py::dict m;
        m["power"] = r.first_mismatch->power;
        m["lhs"] = r.first_mismatch->lhs;
        m["rhs"] = r.first_mismatch->rhs;
        d["first_mismatch"] = m;
    } else {
        d["first_mismatch"] = py::none();
    }
    d["millis"] = r.millis;
    d["notes"] = r.notes;
    return d;
}

VerifyOptions options(std::optional<int> order, bool reference_bounds)
{
    VerifyOptions o;
    o.order = order;
    o.reference_bounds = reference_bounds;
    return o;
}

} // namespace

PYBIND11_MODULE(sptforge, m)
{
    m.doc() = "Exact q-series verification of spt-crank-type identities";

    py::register_exception<DivergentSpec>(m, "DivergentSpec", PyExc_ValueError);

    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : spt_families()) {
            out.push_back(family_name(f));
        }
        return out;
    });

    m.def(
        "spt_table",
        [](const std::string &family, int n_max) {
            std::vector<BigInt> t;
            {
                py::gil_scoped_release release;
                t = spt_table(parse_family(family), n_max);
            }
            return to_py(t);
        },
        py::arg("family"), py::arg("n_max"), "spt_X(n) for 0 <= n <= n_max");

    m.def(
        "crank_table",
        [](const std::string &family, int t, int n_max) {
            std::vector<CrankRow> rows;
            {
                py::gil_scoped_release release;
                rows = crank_table(parse_family(family), t, n_max);
            }
            py::list out;
            for (const auto &r : rows) {
                py::dict d;
                d["n"] = r.n;
                d["classes"] = to_py(r.classes);
                d["spt"] = to_py(r.spt);
                out.append(d);
            }
            return out;
        },
        py::arg("family"), py::arg("t"), py::arg("n_max"));

    m.def(
        "spt_oracle", [](const std::string &family, int n) { return to_py(spt_oracle(parse_family(family), n)); },
        py::arg("family"), py::arg("n"), "spt_X(n) by exhaustive enumeration");
    m.def(
        "classic_spt", [](int n) { return to_py(classic_spt(n)); }, py::arg("n"));

    m.def(
        "check_congruence",
        [](const std::string &family, int p, int b, int n_max) {
            CongruenceResult r;
            {
                py::gil_scoped_release release;
                r = check_congruence(parse_family(family), p, b, n_max);
            }
            py::dict d;
            d["family"] = family_name(r.family);
            d["p"] = r.p;
            d["b"] = r.b;
            d["n_max"] = r.n_max;
            d["checked"] = r.checked;
            d["holds"] = r.holds();
            if (r.failure) {
                d["failure"] = py::dict(py::arg("n") = r.failure->n, py::arg("reason") = r.failure->reason,
                                        py::arg("detail") = r.failure->detail);
            } else {
                d["failure"] = py::none();
            }
            return d;
        },
        py::arg("family"), py::arg("p"), py::arg("b"), py::arg("n_max"));

    m.def("known_congruences", [] {
        std::vector<std::tuple<std::string, int, int>> out;
        for (const auto &c : known_congruences()) {
            out.emplace_back(family_name(c.family), c.p, c.b);
        }
        return out;
    });

    m.def("catalog", [] {
        py::list out;
        for (const auto &c : catalog()) {
            py::dict d;
            d["id"] = c.id;
            d["ring"] = c.ring_name();
            d["default_order"] = c.default_order;
            d["citation"] = c.citation;
            out.append(d);
        }
        return out;
    });

    m.def(
        "verify",
        [](const std::string &id, std::optional<int> order, bool reference_bounds) {
            VerificationReport r;
            {
                py::gil_scoped_release release;
                r = verify_case(id, options(order, reference_bounds));
            }
            return report_dict(r);
        },
        py::arg("id"), py::arg("order") = py::none(), py::arg("reference_bounds") = false,
        "Raises IndexError for unknown ids");

    m.def(
        "verify_all",
        [](const std::string &pattern, int parallelism, std::optional<int> order) {
            std::vector<VerificationReport> rs;
            {
                py::gil_scoped_release release;
                rs = verify_all(pattern, parallelism, options(order, false));
            }
            py::list out;
            for (const auto &r : rs) {
                out.append(report_dict(r));
            }
            return out;
        },
        py::arg("pattern") = "*", py::arg("parallelism") = 1, py::arg("order") = py::none());

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr)");
}
