#include "ucq/finite_space.hpp"
#include "ucq/functionals.hpp"
#include "ucq/harness.hpp"
#include "ucq/realfunctions.hpp"
#include "ucq/sequences.hpp"
#include "ucq/topology.hpp"
#include "ucq/zoo.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ucq;

namespace {

// Distances cross the boundary as exact strings; Python callers that want
// numerics can wrap them in fractions.Fraction.
std::string dist_str(const FiniteSpace& s, const std::string& x, const std::string& y) {
    return to_string(s.at(s.index_of(x), s.index_of(y)));
}

FiniteSpace space_from_rows(const std::string& name, const std::vector<std::string>& points,
                            const std::vector<std::vector<std::string>>& rows) {
    FiniteSpace s;
    s.name = name;
    s.points = points;
    for (const auto& row : rows) {
        s.d.emplace_back();
        for (const auto& cell : row) s.d.back().push_back(parse_rational(cell));
    }
    ValidationReport rep = validate_axioms(s);
    if (!rep.valid()) {
        std::ostringstream msg;
        msg << "not a quasi-metric: " << rep.violations.size() << " violation(s), first: "
            << rep.violations.front().axiom;
        throw std::invalid_argument(msg.str());
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(pyucq, m) {
    m.doc() = "exact-arithmetic quasi-metric spaces: validation, topology, example catalog";

    py::class_<FiniteSpace>(m, "FiniteSpace")
        .def_readonly("name", &FiniteSpace::name)
        .def_readonly("points", &FiniteSpace::points)
        .def("distance", &dist_str, py::arg("x"), py::arg("y"))
        .def("to_json", [](const FiniteSpace& s) { return space_to_json_text(s); })
        .def("__len__", [](const FiniteSpace& s) { return s.size(); })
        .def("__repr__", [](const FiniteSpace& s) {
            return "<FiniteSpace " + s.name + " (" + std::to_string(s.size()) + " points)>";
        });

    m.def("make_space", &space_from_rows, py::arg("name"), py::arg("points"), py::arg("rows"),
          "Build and validate a finite quasi-metric space from rational strings.");
    m.def("space_from_json", [](const std::string& text) { return space_from_json_text(text); });

    m.def("validate", [](const FiniteSpace& s) {
        ValidationReport rep = validate_axioms(s);
        std::vector<std::string> out;
        for (const auto& v : rep.violations) {
            std::string line = v.axiom;
            for (const auto& w : v.where) line += " " + w;
            out.push_back(line);
        }
        return out;
    });

    m.def("is_t1", &is_T1);
    m.def("conjugate", &conjugate);
    m.def("sup_metric", &sup_metric);
    m.def("is_normal", [](const FiniteSpace& s) { return is_normal(s).normal; });
    m.def("isolated_points", [](const FiniteSpace& s) {
        PointSet p = isolated_points(s);
        return std::vector<std::string>(p.begin(), p.end());
    });
    m.def("isolation", [](const FiniteSpace& s, const std::string& x) {
        return to_string(isolation_finite(s, x));
    });

    m.def("lebesgue_number", [](const FiniteSpace& s,
                                const std::vector<std::vector<std::string>>& members) {
        Cover c;
        for (const auto& mem : members) c.members.emplace_back(mem.begin(), mem.end());
        return to_string(lebesgue_number(s, c).delta_star);
    });

    m.def("rho", [](const FiniteSpace& s) {
        RhoResult r = rho_construct(s);
        return py::make_tuple(r.space, r.used_discrete_metric, r.separation_warnings);
    });

    m.def("zoo_ids", &zoo_ids);
    m.def("zoo_describe", [](const std::string& id) { return zoo_get(id).description(); });
    m.def("zoo_emit", [](const std::string& id, long long size) {
        const CountableSpace& z = zoo_get(id);
        return restrict_space(z, z.carrier_sample(size));
    });
    m.def("zoo_check", [](const std::string& id, long long horizon) {
        const CountableSpace& z = zoo_get(id);
        std::vector<py::dict> out;
        for (const Claim& c : z.claims()) {
            if (!c.machine_checkable()) continue;
            ClaimRun run = run_claim(z, c, horizon);
            py::dict d;
            d["id"] = c.id;
            d["verdict"] = to_string(run.verdict.outcome);
            d["matches"] = run.matches;
            d["skipped"] = run.skipped;
            out.push_back(std::move(d));
        }
        return out;
    }, py::arg("id"), py::arg("horizon") = 10000);

    m.def("run_finite_suite", [](std::uint64_t seed, long long trials, std::size_t max_size) {
        SuiteReport r = run_finite_suite(seed, trials, max_size);
        return py::make_tuple(r.failures(), r.to_json_text());
    }, py::arg("seed") = 1, py::arg("trials") = 100, py::arg("max_size") = 8);
}
