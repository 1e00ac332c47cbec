#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quandlink/errors.hpp"
#include "quandlink/gauss_code.hpp"
#include "quandlink/homcount.hpp"
#include "quandlink/linking.hpp"
#include "quandlink/moves.hpp"
#include "quandlink/quandle.hpp"
#include "quandlink/wirtinger.hpp"

namespace py = pybind11;
using namespace quandlink;

namespace {

OperationMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix rows must all have length equal to the order");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return OperationMatrix(n, std::move(entries));
}

std::vector<std::vector<int>> matrix_to_rows(const OperationMatrix& m) {
    std::vector<std::vector<int>> rows(m.order(), std::vector<int>(m.order()));
    for (int a = 1; a <= m.order(); ++a)
        for (int b = 1; b <= m.order(); ++b) rows[a - 1][b - 1] = m.at(a, b);
    return rows;
}

Quandle quandle_from_rows(const std::vector<std::vector<int>>& rows) {
    QuandleVerification ver = verify_quandle(matrix_from_rows(rows));
    if (!ver.ok()) {
        std::string msg = "not a quandle:";
        for (const auto& v : ver.violations) msg += "\n  " + v.describe();
        throw std::invalid_argument(msg);
    }
    return *std::move(ver.quandle);
}

CountMethod method_from_name(const std::string& name) {
    if (name == "oracle") return CountMethod::Oracle;
    if (name == "propagate") return CountMethod::Propagate;
    if (name == "closed") return CountMethod::ClosedForm;
    throw std::invalid_argument("unknown method '" + name + "'");
}

py::list script_to_list(const MoveScript& script) {
    py::list out;
    for (const auto& record : script.moves) {
        py::dict d;
        if (const auto* r1 = std::get_if<R1Insertion>(&record)) {
            d["type"] = "r1";
            d["component"] = r1->component;
            d["position"] = r1->position;
            d["sign"] = r1->sign;
            d["over_first"] = r1->over_first;
        } else {
            const auto& r2 = std::get<R2Insertion>(record);
            d["type"] = "r2";
            d["component_a"] = r2.component_a;
            d["position_a"] = r2.position_a;
            d["component_b"] = r2.component_b;
            d["position_b"] = r2.position_b;
            d["sign"] = r2.sign;
        }
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quandle counting invariants and linking numbers for virtual link diagrams";

    py::register_exception<ParseError>(m, "GaussCodeParseError", PyExc_ValueError);
    py::register_exception<OracleBudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Quandle>(m, "Quandle")
        .def_property_readonly("order", &Quandle::order)
        .def("op", &Quandle::op, py::arg("a"), py::arg("b"))
        .def("inv", &Quandle::inv, py::arg("a"), py::arg("b"))
        .def("matrix", [](const Quandle& q) { return matrix_to_rows(q.matrix()); })
        .def("dual_matrix", [](const Quandle& q) { return matrix_to_rows(q.dual_matrix()); })
        .def("orbits", [](const Quandle& q) { return orbits(q).orbits; })
        .def_property_readonly("is_connected", [](const Quandle& q) { return is_connected(q); })
        .def_property_readonly("is_trivial_orbit",
                               [](const Quandle& q) { return is_trivial_orbit_quandle(q); })
        .def("__eq__", [](const Quandle& a, const Quandle& b) { return a == b; })
        .def("__repr__", [](const Quandle& q) {
            return "<Quandle order=" + std::to_string(q.order()) + ">";
        });

    m.def("make_trivial", &make_trivial, py::arg("n"));
    m.def("make_xn", &make_xn, py::arg("n"));
    m.def("quandle_from_matrix", &quandle_from_rows, py::arg("rows"),
          "Build a verified quandle from a 1-based operation matrix; raises ValueError listing "
          "every axiom violation otherwise.");
    m.def(
        "check_axioms",
        [](const std::vector<std::vector<int>>& rows) {
            std::vector<std::string> out;
            for (const auto& v : verify_quandle(matrix_from_rows(rows)).violations)
                out.push_back(v.describe());
            return out;
        },
        py::arg("rows"), "Complete list of axiom violations (empty = quandle).");
    m.def(
        "subquandle",
        [](const Quandle& q, const std::vector<int>& elements) { return subquandle(q, elements); },
        py::arg("quandle"), py::arg("elements"));

    py::class_<SignedGaussCode>(m, "GaussCode")
        .def(py::init([](const std::string& text) { return SignedGaussCode::parse(text); }),
             py::arg("text"))
        .def("serialize", &SignedGaussCode::serialize)
        .def_property_readonly("component_count", &SignedGaussCode::component_count)
        .def_property_readonly("crossing_count", &SignedGaussCode::crossing_count)
        .def_property_readonly("interlinked_crossing_count",
                               &SignedGaussCode::interlinked_crossing_count)
        .def("components",
             [](const SignedGaussCode& code) {
                 py::list comps;
                 for (const auto& comp : code.components()) {
                     py::list passages;
                     for (const auto& p : comp)
                         passages.append(py::make_tuple(
                             p.crossing, p.role == Role::Over ? "O" : "U", p.sign));
                     comps.append(passages);
                 }
                 return comps;
             })
        .def("__eq__",
             [](const SignedGaussCode& a, const SignedGaussCode& b) { return a == b; })
        .def("__repr__", [](const SignedGaussCode& code) {
            return "<GaussCode components=" + std::to_string(code.component_count()) +
                   " crossings=" + std::to_string(code.crossing_count()) + ">";
        });

    m.def("parse_gauss_code", &SignedGaussCode::parse, py::arg("text"));

    py::class_<KnotQuandlePresentation>(m, "Presentation")
        .def_readonly("generator_count", &KnotQuandlePresentation::generator_count)
        .def_property_readonly("generator_components",
                               [](const KnotQuandlePresentation& p) {
                                   return std::vector<int>(p.generator_component.begin() + 1,
                                                           p.generator_component.end());
                               })
        .def_property_readonly("relations", [](const KnotQuandlePresentation& p) {
            py::list out;
            for (const auto& r : p.relations)
                out.append(py::make_tuple(r.under_in, r.over, r.under_out, r.sign));
            return out;
        });

    m.def("presentation", &presentation, py::arg("code"));

    py::class_<ColoringReport>(m, "ColoringReport")
        .def_readonly("count", &ColoringReport::count)
        .def_property_readonly("method",
                               [](const ColoringReport& r) { return to_string(r.method); })
        .def_readonly("arcs", &ColoringReport::arc_count)
        .def_readonly("target_order", &ColoringReport::target_order)
        .def_property_readonly("colorings",
                               [](const ColoringReport& r) -> py::object {
                                   if (!r.colorings) return py::none();
                                   py::list out;
                                   for (const auto& c : *r.colorings)
                                       out.append(std::vector<int>(c.color.begin() + 1,
                                                                   c.color.end()));
                                   return out;
                               })
        .def("__repr__", [](const ColoringReport& r) {
            return "<ColoringReport count=" + std::to_string(r.count) + ">";
        });

    m.def(
        "count_homomorphisms",
        [](const SignedGaussCode& code, const Quandle& target, const std::string& method,
           double budget, bool list_colorings) {
            CountOptions options;
            options.assignment_budget = budget;
            options.list_colorings = list_colorings;
            KnotQuandlePresentation p = presentation(code);
            CountMethod cm = method_from_name(method);
            if (cm == CountMethod::ClosedForm)
                throw std::invalid_argument("use 'oracle' or 'propagate' here");
            return cm == CountMethod::Oracle ? count_oracle(p, target, options)
                                             : count_propagate(p, target, options);
        },
        py::arg("code"), py::arg("target"), py::arg("method") = "propagate",
        py::arg("budget") = 1e8, py::arg("list_colorings") = false);

    m.def(
        "decomposition_check",
        [](const SignedGaussCode& code, const Quandle& target) {
            return count_decomposition_check(presentation(code), target);
        },
        py::arg("code"), py::arg("target"));

    py::class_<LinkingProfile>(m, "LinkingProfile")
        .def_readonly("lk_over", &LinkingProfile::lk_over)
        .def_readonly("lk_under", &LinkingProfile::lk_under)
        .def_readonly("over_component", &LinkingProfile::over_component)
        .def_readonly("under_component", &LinkingProfile::under_component)
        .def_property_readonly("lk_classical",
                               [](const LinkingProfile& p) {
                                   return static_cast<double>(p.classical_times2()) / 2.0;
                               })
        .def_property_readonly("evidence",
                               [](const LinkingProfile& p) {
                                   return to_string(classify_splitness_evidence(p));
                               })
        .def("__repr__", [](const LinkingProfile& p) {
            return "<LinkingProfile lk" + std::to_string(p.over_component) + "/" +
                   std::to_string(p.under_component) + "=" + std::to_string(p.lk_over) + " lk" +
                   std::to_string(p.under_component) + "/" + std::to_string(p.over_component) +
                   "=" + std::to_string(p.lk_under) + ">";
        });

    m.def("virtual_linking_numbers", &virtual_linking_numbers, py::arg("code"), py::arg("i") = 1,
          py::arg("j") = 2);
    m.def("xn_count_closed_form", &xn_count_closed_form, py::arg("lk12"), py::arg("lk21"),
          py::arg("n"));

    py::class_<RecoveryResult>(m, "RecoveryResult")
        .def_readonly("s", &RecoveryResult::s)
        .def_readonly("s_prime", &RecoveryResult::s_prime)
        .def_readonly("bound", &RecoveryResult::bound)
        .def_readonly("abs_lk", &RecoveryResult::abs_lk)
        .def_property_readonly("branch",
                               [](const RecoveryResult& r) { return to_string(r.branch); })
        .def_readonly("classical_consistent", &RecoveryResult::consistent_with_classical)
        .def_property_readonly("max_s_prime",
                               [](const RecoveryResult& r) -> py::object {
                                   if (!r.max_s_prime) return py::none();
                                   return py::int_(*r.max_s_prime);
                               })
        .def("__repr__", [](const RecoveryResult& r) {
            return "<RecoveryResult abs_lk=" + std::to_string(r.abs_lk) + " branch=" +
                   to_string(r.branch) + ">";
        });

    m.def(
        "recover_abs_linking",
        [](const SignedGaussCode& code, py::object max_n, const std::string& method,
           double budget) {
            if (code.component_count() != 2)
                throw std::invalid_argument("recovery requires a 2-component link");
            int sound = std::max(2, code.interlinked_crossing_count());
            int bound = max_n.is_none() ? sound : py::cast<int>(max_n);
            if (bound < sound)
                throw std::invalid_argument("max_n " + std::to_string(bound) +
                                            " is below the sound bound " + std::to_string(sound));
            auto counts = xn_count_sweep(code, 2, bound, method_from_name(method), budget);
            return recover_abs_linking(counts, bound);
        },
        py::arg("code"), py::arg("max_n") = py::none(), py::arg("method") = "propagate",
        py::arg("budget") = 1e8);

    m.def(
        "xn_count_sweep",
        [](const SignedGaussCode& code, int min_n, int max_n, const std::string& method,
           double budget) {
            return xn_count_sweep(code, min_n, max_n, method_from_name(method), budget);
        },
        py::arg("code"), py::arg("min_n"), py::arg("max_n"), py::arg("method") = "propagate",
        py::arg("budget") = 1e8);

    m.def(
        "apply_r1",
        [](const SignedGaussCode& code, int component, int position, int sign, bool over_first) {
            return apply_r1(code, {component, position, sign, over_first});
        },
        py::arg("code"), py::arg("component"), py::arg("position"), py::arg("sign") = 1,
        py::arg("over_first") = true);
    m.def(
        "apply_r2",
        [](const SignedGaussCode& code, int component_a, int position_a, int component_b,
           int position_b, int sign) {
            return apply_r2(code, {component_a, position_a, component_b, position_b, sign});
        },
        py::arg("code"), py::arg("component_a"), py::arg("position_a"), py::arg("component_b"),
        py::arg("position_b"), py::arg("sign") = 1);
    m.def(
        "random_perturb",
        [](const SignedGaussCode& code, std::uint64_t seed, int budget) {
            auto [result, script] = random_perturb(code, seed, budget);
            return py::make_tuple(result, script_to_list(script));
        },
        py::arg("code"), py::arg("seed"), py::arg("budget"));
}
