// Python bindings. Everything crosses the boundary as text (polynomials in
// the y/x grammar, rationals as "p/q") or plain ints, so no GMP types leak.

#include "apolar/cubics.hpp"
#include "apolar/errors.hpp"
#include "apolar/invsys.hpp"
#include "apolar/poly.hpp"
#include "apolar/socle3.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace apolar;

namespace {

using OptVars = std::optional<std::size_t>;

std::pair<DualPoly, DualPoly> parse_pair(const std::string& ftext, const std::string& gtext,
                                         OptVars vars) {
    DualPoly f = parse_dual(ftext, vars);
    DualPoly g = parse_dual(gtext, vars);
    const std::size_t m = std::max(f.vars(), g.vars());
    return {f.widened(m), g.widened(m)};
}

py::dict witness_dict(const socle3::IsoWitness& w) {
    std::vector<std::string> images;
    for (std::size_t j = 0; j < w.phi.vars(); ++j) images.push_back(print_poly(w.phi.image(j)));
    py::dict d;
    d["images"] = images;
    d["unit"] = print_poly(w.unit);
    return d;
}

socle3::IsoWitness witness_from(const std::vector<std::string>& images,
                                const std::string& unit) {
    const std::size_t m = images.size();
    std::vector<JetElement> jets;
    for (const auto& text : images) jets.push_back(parse_jet(text, 3, m));
    return {socle3::AutMap(std::move(jets)), parse_jet(unit, 3, m)};
}

py::dict classification_dict(const cubics::TernaryClassification& c) {
    py::dict d;
    d["class"] = cubics::to_string(c.cls);
    d["j"] = c.j ? py::object(py::str(rat_to_string(*c.j))) : py::object(py::none());
    if (c.profile) {
        d["colength"] = c.profile->colength;
        d["points"] = c.profile->points;
    } else {
        d["colength"] = py::none();
        d["points"] = py::none();
    }
    return d;
}

py::dict model_dict(const cubics::ModelRow& row) {
    py::dict d;
    d["class"] = row.class_name;
    d["geometry"] = row.geometry;
    d["vars"] = row.vars;
    d["ideal_gens"] = row.ideal_gens;
    d["dual_generator"] = row.dual_generator;
    return d;
}

} // namespace

PYBIND11_MODULE(_apolar, m) {
    m.doc() = "apolarity toolkit: annihilator ideals, Hilbert functions, socle-degree-3 "
              "normal forms, and plane cubic classification over the rationals";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);

    m.def(
        "hilbert_function",
        [](const std::string& f, OptVars vars) {
            return invsys::hilbert_function(parse_dual(f, vars));
        },
        py::arg("f"), py::arg("vars") = py::none(),
        "Hilbert function of the apolar algebra of f, as a list of ints.");

    m.def(
        "annihilator",
        [](const std::string& f, OptVars vars, std::optional<int> bound) {
            const auto ideal = invsys::annihilator(parse_dual(f, vars), bound);
            std::vector<std::string> gens;
            for (const auto& g : ideal.min_gens) gens.push_back(print_poly(g, Side::series));
            py::dict d;
            d["vars"] = ideal.vars;
            d["socle_bound"] = ideal.socle_bound;
            d["min_gens"] = gens;
            d["kbasis_dim"] = ideal.kbasis.dim();
            return d;
        },
        py::arg("f"), py::arg("vars") = py::none(), py::arg("bound") = py::none(),
        "Minimal generators of Ann(f) up to the socle bound, with the dimension "
        "of the ideal's graded basis below that bound.");

    m.def(
        "multiplicity",
        [](const std::string& f, OptVars vars) {
            return invsys::derivative_span(parse_dual(f, vars)).dim();
        },
        py::arg("f"), py::arg("vars") = py::none(),
        "Length of the apolar algebra: dimension of the span of f and its "
        "iterated derivatives.");

    m.def(
        "contract",
        [](const std::string& op, const std::string& f, OptVars vars) {
            Poly p = parse_poly(op, Side::series, vars).poly;
            DualPoly g = parse_dual(f, vars);
            const std::size_t mv = std::max(p.vars(), g.vars());
            return print_poly(contract(p.widened(mv), g.widened(mv)));
        },
        py::arg("op"), py::arg("f"), py::arg("vars") = py::none(),
        "Apply the differential operator op (in x variables) to f (in y variables).");

    m.def(
        "canonical_grading",
        [](const std::string& f, OptVars vars) {
            const DualPoly g = parse_dual(f, vars);
            const auto canon = socle3::canonical_grading_witness(g);
            py::dict d;
            d["model"] = print_poly(canon.model);
            d["essential_vars"] = canon.essential_vars;
            d["witness"] = witness_dict(canon.witness);
            d["verified"] = socle3::verify_iso(g, canon.model, canon.witness);
            return d;
        },
        py::arg("f"), py::arg("vars") = py::none(),
        "Witness taking a socle-degree-3 input with nondegenerate essential cubic "
        "part to its graded model.");

    m.def(
        "normal_form",
        [](const std::string& f, OptVars vars) {
            const DualPoly g = parse_dual(f, vars);
            const auto nf = socle3::normalize_socle3(g);
            std::vector<std::string> lambdas;
            for (const auto& l : nf.lambdas) lambdas.push_back(rat_to_string(l));
            py::dict d;
            d["essential_vars"] = nf.essential_vars;
            d["cubic_part"] = print_poly(nf.cubic_part);
            d["lambdas"] = lambdas;
            d["normal_form"] = print_poly(nf.normal_form);
            d["witness"] = witness_dict(nf.witness);
            d["verified"] = socle3::verify_iso(g, nf.normal_form, nf.witness);
            return d;
        },
        py::arg("f"), py::arg("vars") = py::none(),
        "Split a socle-degree-3 input into an essential cubic plus squares of the "
        "remaining variables, with a verifying witness.");

    m.def(
        "iso_socle3",
        [](const std::string& f, const std::string& g, OptVars vars) {
            const auto [pf, pg] = parse_pair(f, g, vars);
            const auto dec = socle3::iso_socle3(pf, pg);
            py::dict d;
            d["status"] = socle3::to_string(dec.status);
            d["hf_left"] = dec.hf_left;
            d["hf_right"] = dec.hf_right;
            d["detail"] = dec.detail;
            return d;
        },
        py::arg("f"), py::arg("g"), py::arg("vars") = py::none(),
        "Decide whether the apolar algebras of two socle-degree-3 forms are "
        "isomorphic after extension to the algebraic closure.");

    m.def(
        "verify_witness",
        [](const std::string& f, const std::string& g, const std::vector<std::string>& images,
           const std::string& unit, OptVars vars) {
            const auto [pf, pg] = parse_pair(f, g, vars);
            return socle3::verify_iso(pf, pg, witness_from(images, unit));
        },
        py::arg("f"), py::arg("g"), py::arg("images"), py::arg("unit"),
        py::arg("vars") = py::none(),
        "Check a substitution-and-unit witness: does it carry g to f?");

    m.def(
        "classify_ternary_cubic",
        [](const std::string& f) {
            return classification_dict(cubics::classify_ternary_cubic(parse_dual(f, 3)));
        },
        py::arg("f"),
        "Projective type of a ternary cubic with all three variables essential, "
        "with j for the elliptic classes and the singular-scheme profile otherwise.");

    m.def(
        "classify_binary_cubic",
        [](const std::string& f) {
            return cubics::to_string(cubics::classify_binary_cubic(parse_dual(f, 2)));
        },
        py::arg("f"), "Root type of a binary cubic.");

    m.def(
        "j_invariant",
        [](const std::string& f) {
            return rat_to_string(cubics::j_invariant(parse_dual(f, 3)));
        },
        py::arg("f"), "Exact j-invariant of a smooth ternary cubic, as a rational string.");

    m.def(
        "legendre",
        [](const std::string& q) {
            return print_poly(cubics::legendre_cubic(rat_from_string(q)));
        },
        py::arg("q"), "Member of the one-parameter cubic family at the rational parameter q.");

    m.def(
        "lambda_orbit",
        [](const std::string& q) {
            std::vector<std::string> out;
            for (const auto& p : cubics::lambda_orbit(rat_from_string(q)))
                out.push_back(rat_to_string(p));
            return out;
        },
        py::arg("q"),
        "The six parameters giving the same j, in the fixed orbit order.");

    m.def("model_table", [] {
        std::vector<py::dict> rows;
        for (const auto& row : cubics::model_table()) rows.push_back(model_dict(row));
        return rows;
    });
}
