#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "planar/binomial.hpp"
#include "planar/cli.hpp"
#include "planar/errors.hpp"
#include "planar/roots.hpp"
#include "planar/series.hpp"
#include "planar/tree.hpp"
#include "planar/verify.hpp"

namespace py = pybind11;
using namespace planar;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

Rational from_python(const py::handle& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return parse_rational(py::str(fraction(value)).cast<std::string>());
}

PlanarSeries series_from_dict(const py::dict& terms, Truncation truncation) {
    PlanarSeries f(truncation);
    for (const auto& [key, value] : terms) f.add_term(key.cast<PlanarTree>(), from_python(value));
    return f;
}

py::dict terms_of(const PlanarSeries& f) {
    py::dict out;
    for (const auto& [t, c] : f.terms()) out[py::cast(t)] = to_fraction(c);
    return out;
}

py::dict terms_of(const TensorSeries& f) {
    py::dict out;
    for (const auto& [k, c] : f.terms()) out[py::make_tuple(k.first, k.second)] = to_fraction(c);
    return out;
}

py::dict profile_dict(const ArityProfile& p) {
    py::dict out;
    for (const auto& [k, n] : p.nu) out[py::int_(k)] = n;
    return out;
}

ArityProfile profile_from(const std::map<std::size_t, std::size_t>& counts) {
    return ArityProfile::from_counts(counts);
}

LeafSet leaf_set(const std::vector<std::size_t>& indices) {
    LeafSet out;
    for (auto i : indices) out.insert(i);
    return out;
}

std::vector<std::size_t> members(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if ((mask >> i) & 1U) out.push_back(i);
    return out;
}

py::list gamma_list(const std::vector<GammaPair>& pairs) {
    py::list out;
    for (const auto& g : pairs) out.append(py::make_tuple(members(g.alpha), members(g.beta)));
    return out;
}

std::string series_repr(const PlanarSeries& f) {
    std::ostringstream out;
    out << "Series({";
    bool first = true;
    for (const auto& [t, c] : f.terms()) {
        out << (first ? "" : ", ") << "'" << render_tree(t) << "': " << to_string(c);
        first = false;
    }
    out << "}";
    if (f.truncation()) out << ", truncation=" << *f.truncation();
    out << ")";
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Planar reduced rooted trees, planar binomial coefficients and planar power series.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<PlanarTree>(m, "Tree")
        .def(py::init([](const std::string& text) { return parse_tree(text); }), py::arg("text"))
        .def_static("empty", &PlanarTree::empty)
        .def_static("leaf", &PlanarTree::leaf)
        .def_static("corona", &PlanarTree::corona, py::arg("r"))
        .def_property_readonly("degree", &PlanarTree::degree)
        .def_property_readonly("arity", &PlanarTree::arity)
        .def_property_readonly("children",
                               [](const PlanarTree& t) { return std::vector<PlanarTree>(t.children().begin(), t.children().end()); })
        .def_property_readonly("is_empty", &PlanarTree::is_empty)
        .def_property_readonly("is_leaf", &PlanarTree::is_leaf)
        .def_property_readonly("is_node", &PlanarTree::is_node)
        .def("__str__", &render_tree)
        .def("__repr__", [](const PlanarTree& t) { return "Tree('" + render_tree(t) + "')"; })
        .def("__hash__", [](const PlanarTree& t) { return TreeHash{}(t); })
        .def("__eq__", [](const PlanarTree& a, const PlanarTree& b) { return a == b; })
        .def("__lt__", [](const PlanarTree& a, const PlanarTree& b) { return a < b; })
        .def("__le__", [](const PlanarTree& a, const PlanarTree& b) { return a <= b; })
        .def("__gt__", [](const PlanarTree& a, const PlanarTree& b) { return a > b; })
        .def("__ge__", [](const PlanarTree& a, const PlanarTree& b) { return a >= b; });
    py::implicitly_convertible<std::string, PlanarTree>();

    m.def("parse_tree", &parse_tree, py::arg("text"));
    m.def("render_tree", &render_tree, py::arg("tree"));
    m.def("graft", [](const std::vector<PlanarTree>& children) { return graft(children); }, py::arg("children"));
    m.def("contract", [](const PlanarTree& t, const std::vector<std::size_t>& leaves) { return contract(t, leaf_set(leaves)); },
          py::arg("tree"), py::arg("leaves"), "Contraction onto the given 0-based leaf indices.");
    m.def("substitute", [](const PlanarTree& t, const std::vector<PlanarTree>& a) { return substitute(t, a); },
          py::arg("tree"), py::arg("assignment"));
    m.def("enumerate_trees", &enumerate_trees, py::arg("degree"), py::arg("cap") = default_enumeration_cap);
    m.def("arity_profile", [](const PlanarTree& t) { return profile_dict(arity_profile(t)); }, py::arg("tree"));
    m.def("enumerate_profile",
          [](const std::map<std::size_t, std::size_t>& nu, std::size_t cap) { return enumerate_profile(profile_from(nu), cap); },
          py::arg("profile"), py::arg("cap") = default_enumeration_cap);
    m.def("catalan", [](const std::map<std::size_t, std::size_t>& nu) { return catalan(profile_from(nu)); },
          py::arg("profile"));
    m.def("profiles_of_degree", [](std::size_t n) {
        py::list out;
        for (const auto& p : profiles_of_degree(n)) out.append(profile_dict(p));
        return out;
    }, py::arg("degree"));

    m.def("binom1", &binom1, py::arg("t"), py::arg("s"));
    m.def("binom2", &binom2, py::arg("t"), py::arg("s"), py::arg("v"));
    m.def("binom1_oracle", &binom1_oracle, py::arg("t"), py::arg("s"), py::arg("cap") = default_oracle_cap);
    m.def("binom2_oracle", &binom2_oracle, py::arg("t"), py::arg("s"), py::arg("v"),
          py::arg("cap") = default_oracle_cap);
    m.def("gamma_sets", [](std::size_t mm, std::size_t r, std::size_t s) {
        const auto g = gamma_sets(mm, r, s);
        py::dict out;
        out["all"] = gamma_list(g.all);
        out["prime"] = gamma_list(g.prime);
        out["double_prime"] = gamma_list(g.double_prime);
        out["star"] = gamma_list(g.star);
        return out;
    }, py::arg("m"), py::arg("r"), py::arg("s"));

    py::class_<PlanarSeries>(m, "Series")
        .def(py::init([](const py::dict& terms, Truncation truncation) { return series_from_dict(terms, truncation); }),
             py::arg("terms") = py::dict(), py::arg("truncation") = py::none())
        .def_static("one", &PlanarSeries::one)
        .def_static("x", &PlanarSeries::x)
        .def_static("one_plus_x", &PlanarSeries::one_plus_x)
        .def_property_readonly("truncation", &PlanarSeries::truncation)
        .def("terms", [](const PlanarSeries& f) { return terms_of(f); })
        .def("coeff", [](const PlanarSeries& f, const PlanarTree& t) { return to_fraction(f.coeff(t)); }, py::arg("tree"))
        .def("truncated", &PlanarSeries::truncated, py::arg("n"))
        .def("power", [](const PlanarSeries& f, const PlanarTree& t, Truncation n) { return power(f, t, n); },
             py::arg("tree"), py::arg("max_degree") = py::none())
        .def("compose", [](const PlanarSeries& f, const PlanarSeries& g, Truncation n) { return compose(f, g, n); },
             py::arg("inner"), py::arg("max_degree") = py::none())
        .def("derive", &derive)
        .def("delta", [](const PlanarSeries& f) { return terms_of(delta(f)); })
        .def("to_classical", [](const PlanarSeries& f, std::size_t n) {
            py::list out;
            for (const auto& c : to_classical(f, n).coeffs) out.append(to_fraction(c));
            return out;
        }, py::arg("n"))
        .def("__add__", [](const PlanarSeries& f, const PlanarSeries& g) { return add(f, g); })
        .def("__sub__", [](const PlanarSeries& f, const PlanarSeries& g) { return subtract(f, g); })
        .def("__mul__", [](const PlanarSeries& f, const PlanarSeries& g) { return mul(f, g); })
        .def("__mul__", [](const PlanarSeries& f, const py::object& c) { return scale(f, from_python(c)); })
        .def("__rmul__", [](const PlanarSeries& f, const py::object& c) { return scale(f, from_python(c)); })
        .def("__eq__", [](const PlanarSeries& f, const PlanarSeries& g) { return f == g; })
        .def("__len__", &PlanarSeries::size)
        .def("__repr__", &series_repr);

    m.def("mul", [](const std::vector<PlanarSeries>& parts, Truncation n) { return mul(parts, n); },
          py::arg("parts"), py::arg("max_degree") = py::none(), "The m-ary grafting product of m >= 2 series.");
    m.def("tree_power", &tree_power, py::arg("t"), py::arg("s"));
    m.def("coaddition", [](const PlanarTree& t) { return terms_of(coaddition(t)); }, py::arg("tree"));
    m.def("coaddition_structural", [](const PlanarTree& t) { return terms_of(coaddition_structural(t)); },
          py::arg("tree"));

    m.def("root", [](const PlanarTree& t, std::size_t n, const std::optional<PlanarSeries>& target) {
        return target ? root(t, *target, n) : root(t, n);
    }, py::arg("tree"), py::arg("max_degree"), py::arg("target") = py::none());
    m.def("generalized_root", &generalized_root, py::arg("t"), py::arg("s"), py::arg("max_degree"));
    m.def("exp_t", &exp_t, py::arg("tree"), py::arg("max_degree"));
    m.def("log_t", &log_t, py::arg("tree"), py::arg("max_degree"));
    m.def("corona_root_coeff", [](std::size_t d, const PlanarTree& t) { return to_fraction(corona_root_coeff(d, t)); },
          py::arg("d"), py::arg("tree"));
    m.def("classical_binom", [](const py::object& q, std::size_t n) { return to_fraction(classical_binom(from_python(q), n)); },
          py::arg("q"), py::arg("n"));
    m.def("catalan_aggregate", [](std::size_t d, std::size_t n) { return to_fraction(catalan_aggregate(d, n)); },
          py::arg("d"), py::arg("n"));

    m.def("verify", [](const std::string& suite, std::size_t max_degree) {
        py::list out;
        for (const auto& r : verify::run_suite(suite, max_degree)) {
            py::dict row;
            row["suite"] = r.suite;
            row["check"] = r.name;
            row["cases"] = r.cases;
            row["passed"] = r.passed();
            row["counterexample"] = r.counterexample;
            out.append(row);
        }
        return out;
    }, py::arg("suite") = "all", py::arg("max_degree") = 4);

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "planar");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line front end in process; returns (exit code, stdout, stderr).");
}
