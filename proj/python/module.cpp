// Python bindings for the main operations: the E family, the symmetric
// families, filling statistics, and the verification suites.

#include "nsmac/hecke.hpp"
#include "nsmac/macdonald.hpp"
#include "nsmac/parse.hpp"
#include "nsmac/render.hpp"
#include "nsmac/symmetric.hpp"
#include "nsmac/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace nsmac;

namespace {

Composition comp(const std::vector<int>& parts) { return Composition(parts); }
Partition part(const std::vector<int>& parts) { return Partition(parts); }

Mode mode_of(bool checked) { return checked ? Mode::checked : Mode::fast; }

std::optional<XMonomial> opt_head(const std::optional<std::vector<int>>& head) {
    if (!head) return std::nullopt;
    return *head;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict stats_dict(const std::vector<int>& mu_parts,
                    const std::vector<std::vector<int>>& rows) {
    Composition mu = comp(mu_parts);
    nlohmann::json j{{"mu", mu.parts}, {"rows", rows}};
    Filling f = filling_from_json(j);
    DiagramInfo d = make_diagram(mu);
    AugmentedStats s = augmented_stats(d, f.values);
    PlainStats p = plain_stats(d, f.values);
    py::dict out;
    out["non_attacking"] = is_non_attacking_augmented(d, f.values);
    py::list descents;
    for (const auto& u : s.descents) descents.append(py::make_tuple(u.col, u.row));
    out["descents"] = descents;
    out["maj"] = s.maj;
    out["inv_pairs"] = s.inv_pairs;
    out["inv"] = s.inv;
    out["coinv"] = s.coinv;
    out["maj_prime"] = s.maj_prime;
    out["coinv_prime"] = s.coinv_prime;
    out["inversion_triples"] = count_inversion_triples(d, f.values);
    out["coinversion_triples"] = count_coinversion_triples(d, f.values);
    out["plain_maj"] = p.maj;
    out["plain_inv"] = p.inv;
    return out;
}

py::list verify_list(const std::string& suite, int n, int max_degree,
                     unsigned long seed, int jobs) {
    verify::Options opt;
    opt.n = n;
    opt.max_degree = max_degree;
    opt.seed = seed;
    opt.jobs = jobs;
    py::list out;
    for (const auto& r : verify::run_suite(suite, opt)) {
        py::dict d;
        d["name"] = r.name;
        d["pass"] = r.pass;
        d["detail"] = r.detail;
        d["ms"] = r.ms;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(nsmac, m) {
    m.doc() = "Exact non-symmetric Macdonald polynomials and their symmetric families";

    py::class_<XPolynomial>(m, "Poly")
        .def_property_readonly("vars", &XPolynomial::vars)
        .def("text",
             [](const XPolynomial& f, const std::optional<std::vector<int>>& head) {
                 return xpoly_text(f, opt_head(head));
             },
             py::arg("head") = py::none())
        .def("latex",
             [](const XPolynomial& f, const std::optional<std::vector<int>>& head) {
                 return xpoly_latex(f, opt_head(head));
             },
             py::arg("head") = py::none())
        .def("to_json", [](const XPolynomial& f) { return json_to_py(xpoly_json(f)); })
        .def("coeff",
             [](const XPolynomial& f, const std::vector<int>& e) {
                 return f.coeff(e).str();
             })
        .def("is_symmetric", &XPolynomial::is_symmetric)
        .def("__len__", [](const XPolynomial& f) { return f.terms().size(); })
        .def("__eq__", [](const XPolynomial& a, const XPolynomial& b) { return a == b; })
        .def("__add__", [](const XPolynomial& a, const XPolynomial& b) { return a + b; })
        .def("__sub__", [](const XPolynomial& a, const XPolynomial& b) { return a - b; })
        .def("__mul__", [](const XPolynomial& a, const XPolynomial& b) { return a * b; })
        .def("__repr__", [](const XPolynomial& f) { return xpoly_text(f); });

    m.def("parse", &parse_xpoly, py::arg("text"), py::arg("n"),
          "Parse the text form back into a Poly");

    m.def("E", [](const std::vector<int>& mu, int jobs) {
              return E_combinatorial(comp(mu), jobs);
          },
          py::arg("mu"), py::arg("jobs") = 1);
    m.def("E_recurrence",
          [](const std::vector<int>& mu) { return E_recurrence(comp(mu)); }, py::arg("mu"));
    m.def("E_integral",
          [](const std::vector<int>& mu, bool checked, int jobs) {
              return E_integral(comp(mu), mode_of(checked), jobs);
          },
          py::arg("mu"), py::arg("checked") = true, py::arg("jobs") = 1);
    m.def("E_inverted",
          [](const std::vector<int>& mu, bool checked, int jobs) {
              return E_inverted(comp(mu), mode_of(checked), jobs);
          },
          py::arg("mu"), py::arg("checked") = true, py::arg("jobs") = 1);
    m.def("key", [](const std::vector<int>& mu) { return key_polynomial(comp(mu)); },
          py::arg("mu"));

    m.def("D", [](const std::vector<int>& mu, int m) { return D_mu(comp(mu), m); },
          py::arg("mu"), py::arg("m"));
    m.def("J", [](const std::vector<int>& lam, int m) { return J_lambda(part(lam), m); },
          py::arg("lam"), py::arg("m"));
    m.def("J_stable",
          [](const std::vector<int>& lam, const std::vector<int>& mu, int m, bool checked) {
              return J_via_stable_limit(part(lam), comp(mu), m, mode_of(checked));
          },
          py::arg("lam"), py::arg("mu"), py::arg("m"), py::arg("checked") = true);
    m.def("P_truncated",
          [](const std::vector<int>& lam, const std::vector<int>& mu, int m, bool checked) {
              return P_lambda_truncated(part(lam), comp(mu), m, mode_of(checked));
          },
          py::arg("lam"), py::arg("mu"), py::arg("m"), py::arg("checked") = true);
    m.def("P_symmetrized",
          [](const std::vector<int>& lam, bool checked) {
              return P_lambda_symmetrized(part(lam), mode_of(checked));
          },
          py::arg("lam"), py::arg("checked") = true);
    m.def("schur_keys",
          [](const std::vector<int>& lam, int n) { return schur_via_keys(part(lam), n); },
          py::arg("lam"), py::arg("n"));
    m.def("schur_tableaux",
          [](const std::vector<int>& lam, int n) { return schur_oracle(part(lam), n); },
          py::arg("lam"), py::arg("n"));

    m.def("count_non_attacking",
          [](const std::vector<int>& mu) {
              // Route through a decimal string so counts beyond 64 bits
              // arrive as exact python ints.
              std::string digits = count_non_attacking(comp(mu)).get_str();
              return py::module_::import("builtins").attr("int")(digits);
          },
          py::arg("mu"));
    m.def("filling_stats", &stats_dict, py::arg("mu"), py::arg("rows"),
          "Statistics bundle for a filling given as bottom-up rows");
    m.def("run_verify", &verify_list, py::arg("suite") = "all", py::arg("n") = 3,
          py::arg("max_degree") = 3, py::arg("seed") = 42, py::arg("jobs") = 1,
          "Run a verification suite; returns one dict per check");
}
