#include "apolar/cubics.hpp"
#include "apolar/errors.hpp"
#include "apolar/invsys.hpp"
#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"
#include "apolar/socle3.hpp"
#include "apolar/subspace.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace apolar;
using Doc = nlohmann::ordered_json;

namespace {

// ---- output plumbing ---------------------------------------------------
//
// Every command builds one self-describing document; the text mode renders
// a human summary of the same document, so the two formats cannot drift.

enum class Fmt { text, structured };

Fmt output_format(const std::string& flag) {
    std::string v = flag;
    if (v.empty()) {
        const char* env = std::getenv("APOLAR_FORMAT");
        v = env ? env : "text";
    }
    if (v == "text")
        return Fmt::text;
    if (v == "structured")
        return Fmt::structured;
    throw parse_error("output format must be 'text' or 'structured', got '" + v + "'", 0);
}

Doc new_doc(const std::string& command) {
    Doc d;
    d["schema"] = "apolar/1";
    d["command"] = command;
    return d;
}

void set_vars(Doc& d, std::size_t vars, bool inferred) {
    d["vars"] = vars;
    d["vars_source"] = inferred ? "inferred" : "override";
}

std::string vars_line(const Doc& d) {
    return "vars: " + std::to_string(d["vars"].get<std::size_t>()) + " (" +
           d["vars_source"].get<std::string>() + ")";
}

std::string sjoin(const Doc& arr, const std::string& sep) {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty())
            out += sep;
        out += v.get<std::string>();
    }
    return out;
}

std::string ijoin(const Doc& arr) {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v.get<long long>());
    }
    return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

Doc int_array(const std::vector<int>& v) {
    Doc a = Doc::array();
    for (int x : v)
        a.push_back(x);
    return a;
}

// ---- parsing helpers -----------------------------------------------------

struct DualInput {
    DualPoly f;
    bool inferred;
};

DualInput read_dual(const std::string& text, const std::optional<std::size_t>& vars) {
    return {parse_dual(text, vars), !vars.has_value()};
}

// Series-side generator lists share one ring: everything is reparsed with
// the maximum variable index seen across the list (or the override).
std::pair<std::vector<Poly>, bool> read_gens(const std::vector<std::string>& texts,
                                             const std::optional<std::size_t>& vars_opt,
                                             std::size_t* vars_out) {
    std::size_t vars = vars_opt.value_or(0);
    for (const auto& t : texts)
        vars = std::max(vars, parse_poly(t, Side::series, vars_opt).vars_seen);
    if (vars == 0)
        throw domain_error("the variable count cannot be inferred from an empty or constant "
                           "generator list; pass --vars");
    std::vector<Poly> gens;
    gens.reserve(texts.size());
    for (const auto& t : texts)
        gens.push_back(parse_poly(t, Side::series, vars).poly);
    *vars_out = vars;
    return {gens, !vars_opt.has_value()};
}

// ---- witness files ---------------------------------------------------------
//
// Plain-text serialization of an isomorphism witness:
//
//   # comment
//   vars 2
//   socle 3
//   x1 -> x1 + 1/6*x1^2
//   x2 -> x2
//   unit 1 - 1/3*x1
//
// One line per substituted variable, every polynomial in the x-side grammar.

Doc witness_doc(const socle3::IsoWitness& w) {
    Doc d;
    d["vars"] = w.vars();
    d["socle"] = w.socle_bound();
    Doc imgs = Doc::array();
    for (std::size_t j = 0; j < w.vars(); ++j)
        imgs.push_back(print_poly(w.phi.image(j)));
    d["images"] = imgs;
    d["unit"] = print_poly(w.unit);
    return d;
}

std::string witness_file_text(const Doc& w) {
    std::ostringstream out;
    out << "vars " << w["vars"].get<std::size_t>() << "\n";
    out << "socle " << w["socle"].get<int>() << "\n";
    std::size_t j = 1;
    for (const auto& img : w["images"])
        out << "x" << j++ << " -> " << img.get<std::string>() << "\n";
    out << "unit " << w["unit"].get<std::string>() << "\n";
    return out.str();
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

socle3::IsoWitness read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw domain_error("cannot open witness file: " + path);

    std::size_t vars = 0;
    int socle = 0;
    bool have_vars = false, have_socle = false, have_unit = false;
    std::vector<std::string> image_text;
    std::vector<bool> image_seen;
    std::string unit_text;

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw parse_error("witness file " + path + " line " + std::to_string(lineno) + ": " + msg,
                          0);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trimmed(line);
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "vars") {
            long long v = 0;
            if (!(ls >> v) || v < 1 || v > 9)
                fail("vars needs a count between 1 and 9");
            if (have_vars)
                fail("duplicate vars line");
            vars = static_cast<std::size_t>(v);
            have_vars = true;
            image_text.assign(vars, "");
            image_seen.assign(vars, false);
        } else if (head == "socle") {
            if (!(ls >> socle) || socle < 0)
                fail("socle needs a nonnegative bound");
            have_socle = true;
        } else if (head == "unit") {
            if (have_unit)
                fail("duplicate unit line");
            std::getline(ls, unit_text);
            have_unit = true;
        } else if (head.size() >= 2 && head[0] == 'x') {
            if (!have_vars)
                fail("vars must come before the substitution lines");
            std::size_t j = 0;
            for (std::size_t k = 1; k < head.size(); ++k) {
                if (head[k] < '0' || head[k] > '9')
                    fail("unrecognized directive '" + head + "'");
                j = j * 10 + static_cast<std::size_t>(head[k] - '0');
            }
            if (j < 1 || j > vars)
                fail("variable " + head + " is out of range for " + std::to_string(vars) +
                     " variables");
            std::string arrow;
            ls >> arrow;
            if (arrow != "->")
                fail("expected '->' after " + head);
            if (image_seen[j - 1])
                fail("duplicate line for " + head);
            std::getline(ls, image_text[j - 1]);
            image_seen[j - 1] = true;
        } else {
            fail("unrecognized directive '" + head + "'");
        }
    }
    lineno = 0;
    if (!have_vars)
        fail("missing 'vars' line");
    if (!have_socle)
        fail("missing 'socle' line");
    if (!have_unit)
        fail("missing 'unit' line");
    for (std::size_t j = 0; j < vars; ++j)
        if (!image_seen[j])
            fail("missing substitution line for x" + std::to_string(j + 1));

    try {
        std::vector<JetElement> images;
        images.reserve(vars);
        for (std::size_t j = 0; j < vars; ++j)
            images.push_back(parse_jet(image_text[j], socle, vars));
        JetElement unit = parse_jet(unit_text, socle, vars);
        return {socle3::AutMap(std::move(images)), unit};
    } catch (const parse_error& e) {
        throw parse_error("witness file " + path + ": " + e.what(), 0);
    }
}

// ---- text rendering --------------------------------------------------------

void print_profile_line(const Doc& p) {
    std::cout << "profile: colength " << p["colength"].get<int>() << ", distinct points "
              << p["points"].get<int>() << "\n";
}

void render_text(const Doc& d) {
    const std::string cmd = d["command"].get<std::string>();
    std::ostream& o = std::cout;

    if (cmd == "ann") {
        o << vars_line(d) << "\n";
        o << "socle bound: " << d["socle_bound"].get<int>() << "\n";
        o << "minimal generators: " << sjoin(d["min_generators"], ", ") << "\n";
        o << "ideal k-basis size (degree <= " << d["socle_bound"].get<int>()
          << "): " << d["ideal_kbasis"].get<std::size_t>() << "\n";
        o << "quotient k-basis size: " << d["quotient_kbasis"].get<std::size_t>() << "\n";
    } else if (cmd == "hf") {
        o << vars_line(d) << "\n";
        o << "hilbert function: " << ijoin(d["hf"]) << "\n";
        o << "multiplicity: " << d["multiplicity"].get<long long>() << "\n";
        o << "symmetric: " << yesno(d["symmetric"].get<bool>()) << "\n";
    } else if (cmd == "perp") {
        o << vars_line(d) << "\n";
        o << "socle bound: " << d["socle_bound"].get<int>() << "\n";
        o << "dimension: " << d["dim"].get<std::size_t>() << "\n";
        o << "basis:\n";
        for (const auto& b : d["basis"])
            o << "  " << b.get<std::string>() << "\n";
    } else if (cmd == "gorenstein") {
        o << vars_line(d) << "\n";
        o << "socle bound: " << d["socle_bound"].get<int>() << "\n";
        o << "hilbert function: " << ijoin(d["hf"]) << "\n";
        o << "multiplicity: " << d["multiplicity"].get<long long>() << "\n";
        o << "gorenstein: " << yesno(d["gorenstein"].get<bool>()) << "\n";
        o << "socle dimension: " << d["socle_dim"].get<std::size_t>() << "\n";
        if (d.contains("dual_generator"))
            o << "dual generator: " << d["dual_generator"].get<std::string>() << "\n";
    } else if (cmd == "q0") {
        o << vars_line(d) << "\n";
        o << "top form: " << d["top_form"].get<std::string>() << "\n";
        o << "top-form quotient hilbert function: " << ijoin(d["hf"]) << "\n";
        o << "multiplicity: " << d["multiplicity"].get<long long>() << "\n";
        o << "input hilbert function: " << ijoin(d["input_hf"]) << "\n";
        o << "symmetric: " << yesno(d["symmetric"].get<bool>()) << "\n";
    } else if (cmd == "delta") {
        o << vars_line(d) << "\n";
        o << "columns: " << sjoin(d["columns"], ", ") << "\n";
        std::size_t j = 1;
        for (const auto& row : d["matrix"])
            o << "x" << j++ << ": " << sjoin(row, " ") << "\n";
        o << "rank: " << d["rank"].get<std::size_t>() << "\n";
        o << "nondegenerate: " << yesno(d["nondegenerate"].get<bool>()) << "\n";
    } else if (cmd == "canonical") {
        o << vars_line(d) << "\n";
        o << "essential variables: " << d["essential_vars"].get<std::size_t>() << "\n";
        o << "model: " << d["model"].get<std::string>() << "\n";
        o << "witness verifies: " << yesno(d["verified"].get<bool>()) << "\n";
        if (d.contains("witness_file"))
            o << "witness written to: " << d["witness_file"].get<std::string>() << "\n";
        o << "witness:\n" << witness_file_text(d["witness"]);
    } else if (cmd == "normalize") {
        o << vars_line(d) << "\n";
        o << "essential variables: " << d["essential_vars"].get<std::size_t>() << "\n";
        o << "cubic part: " << d["cubic_part"].get<std::string>() << "\n";
        o << "lambdas: " << sjoin(d["lambdas"], ", ") << "\n";
        o << "normal form: " << d["normal_form"].get<std::string>() << "\n";
        o << "witness verifies: " << yesno(d["verified"].get<bool>()) << "\n";
        if (d.contains("witness_file"))
            o << "witness written to: " << d["witness_file"].get<std::string>() << "\n";
        o << "witness:\n" << witness_file_text(d["witness"]);
    } else if (cmd == "iso") {
        o << "left: " << d["left"].get<std::string>() << " (vars "
          << d["vars_left"].get<std::size_t>() << ")\n";
        o << "right: " << d["right"].get<std::string>() << " (vars "
          << d["vars_right"].get<std::size_t>() << ")\n";
        o << "hf left: " << ijoin(d["hf_left"]) << "\n";
        o << "hf right: " << ijoin(d["hf_right"]) << "\n";
        o << "status: " << d["status"].get<std::string>() << "\n";
        o << "detail: " << d["detail"].get<std::string>() << "\n";
    } else if (cmd == "verify-iso") {
        o << "vars: " << d["vars"].get<std::size_t>() << " (witness)\n";
        o << "socle bound: " << d["socle_bound"].get<int>() << "\n";
        o << "witness verifies: " << yesno(d["verified"].get<bool>()) << "\n";
    } else if (cmd == "classify") {
        o << vars_line(d) << "\n";
        o << "class: " << d["class"].get<std::string>() << "\n";
        if (d.contains("aronhold_s"))
            o << "aronhold S: " << d["aronhold_s"].get<std::string>() << "\n";
        if (d.contains("aronhold_t"))
            o << "aronhold T: " << d["aronhold_t"].get<std::string>() << "\n";
        o << "discriminant: " << d["discriminant"].get<std::string>() << "\n";
        if (d.contains("j"))
            o << "j: " << d["j"].get<std::string>() << "\n";
        if (d.contains("profile"))
            print_profile_line(d["profile"]);
    } else if (cmd == "jinv") {
        if (d.contains("lambda"))
            o << "lambda: " << d["lambda"].get<std::string>() << "\n";
        o << "cubic: " << d["cubic"].get<std::string>() << "\n";
        o << "aronhold S: " << d["aronhold_s"].get<std::string>() << "\n";
        o << "aronhold T: " << d["aronhold_t"].get<std::string>() << "\n";
        o << "discriminant: " << d["discriminant"].get<std::string>() << "\n";
        o << "j: " << d["j"].get<std::string>() << "\n";
        if (d.contains("orbit"))
            o << "orbit: " << sjoin(d["orbit"], ", ") << "\n";
    } else if (cmd == "models") {
        bool first = true;
        for (const auto& row : d["rows"]) {
            if (!first)
                o << "\n";
            first = false;
            o << row["class"].get<std::string>() << ": " << row["geometry"].get<std::string>()
              << "\n";
            o << "  ideal: " << sjoin(row["ideal"], ", ") << "\n";
            o << "  dual generator: " << row["dual_generator"].get<std::string>() << "\n";
        }
    } else if (cmd == "selftest") {
        o << "seed: " << d["seed"].get<std::uint64_t>() << "\n";
        for (const auto& c : d["checks"]) {
            if (c["pass"].get<bool>())
                o << "PASS " << c["name"].get<std::string>() << "\n";
            else
                o << "FAIL " << c["name"].get<std::string>() << ": "
                  << c["detail"].get<std::string>() << "\n";
        }
        o << "selftest: " << d["checks"].size() << " checks, " << d["passed"].get<std::size_t>()
          << " passed, " << d["failed"].get<std::size_t>() << " failed\n";
    }
}

void emit(const Doc& d, Fmt fmt) {
    if (fmt == Fmt::structured) {
        std::cout << d.dump(2) << "\n";
        return;
    }
    render_text(d);
}

// ---- selftest --------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int range(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat coeff() { return Rat(range(-9, 9)); }
    Rat nonzero_coeff() {
        int c = 0;
        while (c == 0)
            c = range(-9, 9);
        return Rat(c);
    }
};

Poly random_poly(Rng& rng, std::size_t vars, int maxdeg) {
    Poly p(vars);
    for (const auto& a : monomial_basis(vars, maxdeg))
        if (rng.range(0, 2) != 0)
            p.add_term(a, rng.coeff());
    return p;
}

Poly random_homogeneous(Rng& rng, std::size_t vars, int d) {
    Poly p(vars);
    for (const auto& a : monomials_of_degree(vars, d))
        p.add_term(a, rng.coeff());
    return p;
}

DualPoly random_nondeg_cubic(Rng& rng, std::size_t n) {
    for (;;) {
        DualPoly f(random_homogeneous(rng, n, 3));
        if (!f.is_zero() && socle3::is_nondegenerate_cubic(f))
            return f;
    }
}

Mat random_invertible(Rng& rng, std::size_t m) {
    for (;;) {
        Mat l(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                l.at(i, j) = Rat(rng.range(-3, 3));
        if (inverse(l).has_value())
            return l;
    }
}

socle3::IsoWitness random_witness(Rng& rng, std::size_t m, int socle) {
    Mat l = random_invertible(rng, m);
    std::vector<JetElement> images;
    images.reserve(m);
    const auto quads = monomials_of_degree(m, 2);
    for (std::size_t j = 0; j < m; ++j) {
        Poly img(m);
        for (std::size_t i = 0; i < m; ++i)
            img.add_term(MultiIndex(m).plus_var(i), l.at(i, j));
        if (rng.range(0, 1))
            img.add_term(quads[static_cast<std::size_t>(
                             rng.range(0, static_cast<int>(quads.size()) - 1))],
                         Rat(rng.range(-2, 2)));
        images.emplace_back(img, socle);
    }
    Poly up = Poly::constant(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        up.add_term(MultiIndex(m).plus_var(i), Rat(rng.range(-1, 1)));
    return {socle3::AutMap(std::move(images)), JetElement(up, socle)};
}

std::vector<cubics::ModelRow> fixture_rows() {
    auto rows = cubics::model_table();
    for (const Rat& q : {Rat(2), Rat(3), Rat(-1), Rat(5, 2)})
        rows.push_back(cubics::legendre_model(q));
    return rows;
}

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        CheckResult r{name, true, ""};
        try {
            r.detail = body();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("threw: ") + e.what();
        }
        out.push_back(std::move(r));
    };

    run("fixture/model-annihilators", [&]() -> std::string {
        for (const auto& row : fixture_rows()) {
            const DualPoly f = parse_dual(row.dual_generator, row.vars);
            std::vector<Poly> gens;
            for (const auto& t : row.ideal_gens)
                gens.push_back(parse_poly(t, Side::series, row.vars).poly);
            const auto ideal = invsys::annihilator(f);
            if (!invsys::ideal_equal(gens, ideal.min_gens, 3, row.vars))
                return "row " + row.class_name + ": listed ideal differs from the annihilator";
            const std::vector<int> want =
                row.vars == 2 ? std::vector<int>{1, 2, 2, 1} : std::vector<int>{1, 3, 3, 1};
            if (invsys::hilbert_function(f) != want)
                return "row " + row.class_name + ": unexpected hilbert function";
        }
        return "";
    });

    run("fixture/quartic-duals", [&]() -> std::string {
        struct Row {
            const char* f;
            std::vector<const char*> gens;
        };
        const std::vector<Row> rows = {
            {"y1^3*y2", {"x1^4", "x2^2"}},
            {"y1^3*y2 + y2^3", {"x1^4", "x2^2 - x1^3"}},
            {"y1^3*y2 - y1*y2^3", {"x1^2 + x2^2", "x2^4"}},
        };
        const std::vector<int> want = {1, 2, 2, 2, 1};
        for (const auto& row : rows) {
            const DualPoly f = parse_dual(row.f, 2);
            std::vector<Poly> gens;
            for (const char* t : row.gens)
                gens.push_back(parse_poly(t, Side::series, 2).poly);
            if (!invsys::ideal_equal(gens, invsys::annihilator(f).min_gens, 4, 2))
                return std::string(row.f) + ": listed ideal differs from the annihilator";
            if (invsys::hilbert_function(f) != want)
                return std::string(row.f) + ": unexpected hilbert function";
        }
        return "";
    });

    run("fixture/classifier", [&]() -> std::string {
        for (const auto& row : cubics::ternary_models()) {
            const auto got = cubics::classify_ternary_cubic(parse_dual(row.dual_generator, 3));
            if (cubics::to_string(got.cls) != row.class_name)
                return "expected " + row.class_name + ", got " + cubics::to_string(got.cls);
        }
        const auto gen = cubics::classify_ternary_cubic(cubics::legendre_cubic(Rat(2)));
        if (gen.cls != cubics::TernaryCubicClass::EllipticGeneral)
            return "family member at 2 misclassified as " + cubics::to_string(gen.cls);
        if (cubics::classify_binary_cubic(parse_dual("y1^2*y2")) !=
            cubics::BinaryCubicClass::DoublePlusSimple)
            return "y1^2*y2 misclassified";
        if (cubics::classify_binary_cubic(parse_dual("y1^3 - y2^3")) !=
            cubics::BinaryCubicClass::ThreeDistinct)
            return "y1^3 - y2^3 misclassified";
        if (cubics::classify_binary_cubic(parse_dual("y1^3", 2)) !=
            cubics::BinaryCubicClass::PerfectCube)
            return "y1^3 misclassified";
        return "";
    });

    run("calibration/j-invariant", [&]() -> std::string {
        const DualPoly fermat = parse_dual("y1^3 + y2^3 + y3^3");
        const auto inv = cubics::aronhold_invariants(fermat);
        if (inv.s != 0 || inv.t != 5832 || inv.disc != -19683)
            return "unexpected invariants on the diagonal cubic";
        if (cubics::j_invariant(fermat) != 0)
            return "diagonal cubic should have j = 0";
        if (cubics::j_invariant(cubics::legendre_cubic(Rat(-1))) != 1728)
            return "harmonic member should have j = 1728";
        if (cubics::j_invariant(cubics::legendre_cubic(Rat(7) / 3)) != Rat(810448) / 441)
            return "wrong j at parameter 7/3";
        Rng rng(seed + 11);
        for (int t = 0; t < 5; ++t) {
            Rat q;
            do {
                q = Rat(rng.range(-9, 9)) / rng.range(1, 9);
            } while (q == 0 || q == 1);
            const Rat jq = cubics::j_invariant(cubics::legendre_cubic(q));
            for (const Rat& o : cubics::lambda_orbit(q))
                if (cubics::j_invariant(cubics::legendre_cubic(o)) != jq)
                    return "j is not constant on the orbit of " + rat_to_string(q);
        }
        return "";
    });

    run("property/contraction-composition", [&]() -> std::string {
        Rng rng(seed + 21);
        for (int t = 0; t < 25; ++t) {
            const Poly f = random_poly(rng, 3, 2);
            const Poly h = random_poly(rng, 3, 2);
            const DualPoly g(random_poly(rng, 3, 4));
            if (!(contract(f.mul(h), g) == contract(f, contract(h, g))))
                return "composition law failed on case " + std::to_string(t);
        }
        return "";
    });

    run("property/rank-nullity", [&]() -> std::string {
        Rng rng(seed + 31);
        for (int t = 0; t < 20; ++t) {
            const std::size_t m = static_cast<std::size_t>(rng.range(2, 3));
            Poly p;
            do {
                p = random_poly(rng, m, rng.range(2, 4));
            } while (p.degree() < 2);
            const DualPoly f(p);
            const int s = f.degree();
            const std::size_t total = monomial_basis(m, s).size();
            if (invsys::annihilator(f).kbasis.dim() + invsys::derivative_span(f).dim() != total)
                return "rank-nullity failed on case " + std::to_string(t);
        }
        return "";
    });

    run("property/multiplicity", [&]() -> std::string {
        Rng rng(seed + 41);
        for (int t = 0; t < 20; ++t) {
            const std::size_t m = static_cast<std::size_t>(rng.range(2, 3));
            Poly p;
            do {
                p = random_poly(rng, m, rng.range(2, 4));
            } while (p.degree() < 2);
            const DualPoly f(p);
            long long sum = 0;
            for (int h : invsys::hilbert_function(f))
                sum += h;
            if (sum != static_cast<long long>(invsys::derivative_span(f).dim()))
                return "hilbert function sum disagrees with the span on case " + std::to_string(t);
        }
        return "";
    });

    run("property/socle-annihilation", [&]() -> std::string {
        Rng rng(seed + 51);
        for (int t = 0; t < 20; ++t) {
            const std::size_t m = static_cast<std::size_t>(rng.range(2, 3));
            Poly p;
            do {
                p = random_poly(rng, m, rng.range(2, 4));
            } while (p.degree() < 2);
            const DualPoly f(p);
            const auto tops = monomials_of_degree(m, f.degree() + 1);
            const auto& a =
                tops[static_cast<std::size_t>(rng.range(0, static_cast<int>(tops.size()) - 1))];
            if (!contract(Poly::monomial(m, a), f).is_zero())
                return "a monomial above the socle degree failed to annihilate";
        }
        return "";
    });

    run("property/canonical-grading", [&]() -> std::string {
        Rng rng(seed + 61);
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
            const DualPoly f3 = random_nondeg_cubic(rng, n);
            const DualPoly f = f3 + DualPoly(random_homogeneous(rng, n, 2));
            const auto cg = socle3::canonical_grading_witness(f);
            if (!(cg.model == f.top_form()))
                return "model is not the top form on case " + std::to_string(t);
            if (!socle3::verify_iso(f, cg.model, cg.witness))
                return "witness failed on case " + std::to_string(t);
        }
        return "";
    });

    run("property/normal-form", [&]() -> std::string {
        Rng rng(seed + 71);
        for (int t = 0; t < 8; ++t) {
            const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
            const std::size_t m = std::min<std::size_t>(n + static_cast<std::size_t>(rng.range(1, 2)), 5);
            Poly quad(m);
            for (std::size_t i = n; i < m; ++i)
                quad.add_term(MultiIndex(m).plus_var(i, 2), rng.nonzero_coeff());
            for (std::size_t u = 0; u < n; ++u)
                if (rng.range(0, 1))
                    quad.add_term(MultiIndex(m).plus_var(u).plus_var(
                                      static_cast<std::size_t>(rng.range(0, static_cast<int>(m) - 1))),
                                  Rat(rng.range(-3, 3)));
            const DualPoly f0 = random_nondeg_cubic(rng, n).widened(m) + DualPoly(quad);
            const DualPoly f = socle3::dual_transport(random_witness(rng, m, 3), f0);
            const auto nf = socle3::normalize_socle3(f);
            if (nf.essential_vars != n || nf.lambdas.size() != m - n)
                return "wrong split on case " + std::to_string(t);
            for (const Rat& l : nf.lambdas)
                if (l == 0)
                    return "zero quadric coefficient on case " + std::to_string(t);
            if (!socle3::verify_iso(f, nf.normal_form, nf.witness))
                return "witness failed on case " + std::to_string(t);
        }
        return "";
    });

    run("property/print-parse-roundtrip", [&]() -> std::string {
        Rng rng(seed + 81);
        for (int t = 0; t < 20; ++t) {
            const std::size_t m = static_cast<std::size_t>(rng.range(1, 4));
            Poly p(m);
            for (const auto& a : monomial_basis(m, 3))
                if (rng.range(0, 2) == 0)
                    p.add_term(a, Rat(rng.range(-9, 9)) / rng.range(1, 9));
            if (p.is_zero())
                continue;
            const Side side = rng.range(0, 1) ? Side::series : Side::dual;
            if (!(parse_poly(print_poly(p, side), side, m).poly == p))
                return "round trip failed on case " + std::to_string(t);
        }
        return "";
    });

    run("negative/guards", [&]() -> std::string {
        try {
            socle3::canonical_grading_witness(parse_dual("y1^3*y2 + y2^3"));
            return "socle-4 input was accepted by the grading construction";
        } catch (const domain_error&) {
        }
        const auto dec = socle3::iso_socle3(parse_dual("y1^2*y2"), parse_dual("y1^3 - y2^3"));
        if (dec.status != socle3::IsoStatus::not_isomorphic)
            return "the two binary cubic classes were not separated";
        const DualPoly f = parse_dual("y1^3 + y2^3 + y1*y2");
        const auto cg = socle3::canonical_grading_witness(f);
        std::vector<JetElement> images;
        for (std::size_t j = 0; j < cg.witness.vars(); ++j)
            images.push_back(cg.witness.phi.image(j));
        images[0] = JetElement(images[0].poly() + Poly::monomial(2, MultiIndex(2).plus_var(1),
                                                                 Rat(1) / 7),
                               images[0].socle_bound());
        const socle3::IsoWitness bad{socle3::AutMap(std::move(images)), cg.witness.unit};
        if (socle3::verify_iso(f, cg.model, bad))
            return "a perturbed witness still verifies";
        return "";
    });

    return out;
}

// ---- commands ----------------------------------------------------------

int cmd_ann(const std::string& ftext, const std::optional<std::size_t>& vars,
            const std::optional<int>& socle, Fmt fmt) {
    const auto in = read_dual(ftext, vars);
    const auto ideal = invsys::annihilator(in.f, socle);
    Doc d = new_doc("ann");
    d["input"] = print_poly(in.f);
    set_vars(d, in.f.vars(), in.inferred);
    d["socle_bound"] = ideal.socle_bound;
    Doc gens = Doc::array();
    for (const auto& g : ideal.min_gens)
        gens.push_back(print_poly(g, Side::series));
    d["min_generators"] = gens;
    d["ideal_kbasis"] = ideal.kbasis.dim();
    d["quotient_kbasis"] =
        monomial_basis(in.f.vars(), ideal.socle_bound).size() - ideal.kbasis.dim();
    emit(d, fmt);
    return 0;
}

int cmd_hf(const std::string& ftext, const std::optional<std::size_t>& vars, Fmt fmt) {
    const auto in = read_dual(ftext, vars);
    const auto hf = invsys::hilbert_function(in.f);
    long long mult = 0;
    for (int h : hf)
        mult += h;
    Doc d = new_doc("hf");
    d["input"] = print_poly(in.f);
    set_vars(d, in.f.vars(), in.inferred);
    d["hf"] = int_array(hf);
    d["multiplicity"] = mult;
    d["symmetric"] = invsys::symmetric_hf_criterion(in.f);
    emit(d, fmt);
    return 0;
}

int cmd_perp(const std::vector<std::string>& gtexts, int socle,
             const std::optional<std::size_t>& vars_opt, Fmt fmt) {
    std::size_t vars = 0;
    const auto [gens, inferred] = read_gens(gtexts, vars_opt, &vars);
    const Subspace v = invsys::perp(gens, socle, vars);
    Doc d = new_doc("perp");
    Doc gdoc = Doc::array();
    for (const auto& g : gens)
        gdoc.push_back(print_poly(g, Side::series));
    d["generators"] = gdoc;
    set_vars(d, vars, inferred);
    d["socle_bound"] = socle;
    d["dim"] = v.dim();
    Doc basis = Doc::array();
    for (const auto& b : v.basis_polys())
        basis.push_back(print_poly(DualPoly(b)));
    d["basis"] = basis;
    emit(d, fmt);
    return 0;
}

int cmd_gorenstein(const std::vector<std::string>& gtexts, const std::optional<int>& socle,
                   const std::optional<std::string>& dual,
                   const std::optional<std::size_t>& vars_opt, Fmt fmt) {
    Doc d = new_doc("gorenstein");
    invsys::AlgebraPresentation ap;
    if (dual) {
        const auto in = read_dual(*dual, vars_opt);
        ap = invsys::algebra_from_dual(in.f);
        d["input"] = print_poly(in.f);
        set_vars(d, in.f.vars(), in.inferred);
    } else {
        if (!socle)
            throw domain_error("an ideal presentation needs --socle");
        std::size_t vars = 0;
        const auto [gens, inferred] = read_gens(gtexts, vars_opt, &vars);
        ap = invsys::algebra_from_ideal(gens, *socle, vars);
        Doc gdoc = Doc::array();
        for (const auto& g : gens)
            gdoc.push_back(print_poly(g, Side::series));
        d["generators"] = gdoc;
        set_vars(d, vars, inferred);
    }
    d["socle_bound"] = ap.socle_bound;
    d["hf"] = int_array(ap.hf);
    d["multiplicity"] = ap.multiplicity;
    d["gorenstein"] = ap.socle.gorenstein;
    d["socle_dim"] = ap.socle.socle_dim;
    if (ap.socle.dual_generator)
        d["dual_generator"] = print_poly(*ap.socle.dual_generator);
    emit(d, fmt);
    return 0;
}

int cmd_q0(const std::string& ftext, const std::optional<std::size_t>& vars, Fmt fmt) {
    const auto in = read_dual(ftext, vars);
    const auto ap = invsys::top_form_quotient(in.f);
    Doc d = new_doc("q0");
    d["input"] = print_poly(in.f);
    set_vars(d, in.f.vars(), in.inferred);
    d["top_form"] = print_poly(in.f.top_form());
    d["hf"] = int_array(ap.hf);
    d["multiplicity"] = ap.multiplicity;
    d["input_hf"] = int_array(invsys::hilbert_function(in.f));
    d["symmetric"] = invsys::symmetric_hf_criterion(in.f);
    emit(d, fmt);
    return 0;
}

int cmd_delta(const std::string& ftext, const std::optional<std::size_t>& vars, Fmt fmt) {
    const auto in = read_dual(ftext, vars);
    const auto dm = socle3::delta_matrix(in.f);
    Doc d = new_doc("delta");
    d["input"] = print_poly(in.f);
    set_vars(d, in.f.vars(), in.inferred);
    Doc cols = Doc::array();
    for (const auto& a : dm.col_labels)
        cols.push_back(print_poly(DualPoly(Poly::monomial(in.f.vars(), a))));
    d["columns"] = cols;
    Doc rows = Doc::array();
    for (std::size_t i = 0; i < dm.mat.rows(); ++i) {
        Doc row = Doc::array();
        for (std::size_t j = 0; j < dm.mat.cols(); ++j)
            row.push_back(rat_to_string(dm.mat.at(i, j)));
        rows.push_back(row);
    }
    d["matrix"] = rows;
    d["rank"] = dm.rank;
    d["nondegenerate"] = dm.rank == in.f.vars();
    emit(d, fmt);
    return 0;
}

void maybe_write_witness(Doc& d, const std::optional<std::string>& path) {
    if (!path)
        return;
    std::ofstream out(*path);
    if (!out)
        throw domain_error("cannot write witness file: " + *path);
    out << witness_file_text(d["witness"]);
    d["witness_file"] = *path;
}

int cmd_canonical(const std::string& ftext, const std::optional<std::size_t>& vars,
                  const std::optional<std::string>& witness_out, Fmt fmt) {
    const auto in = read_dual(ftext, vars);
    const auto cg = socle3::canonical_grading_witness(in.f);
    Doc d = new_doc("canonical");
    d["input"] = print_poly(in.f);
    set_vars(d, in.f.vars(), in.inferred);
    d["essential_vars"] = cg.essential_vars;
    d["model"] = print_poly(cg.model);
    d["witness"] = witness_doc(cg.witness);
    d["verified"] = socle3::verify_iso(in.f, cg.model, cg.witness);
    maybe_write_witness(d, witness_out);
    emit(d, fmt);
    return 0;
}

int cmd_normalize(const std::string& ftext, const std::optional<std::size_t>& vars,
                  const std::optional<std::string>& witness_out, Fmt fmt) {
    const auto in = read_dual(ftext, vars);
    const auto nf = socle3::normalize_socle3(in.f);
    Doc d = new_doc("normalize");
    d["input"] = print_poly(in.f);
    set_vars(d, in.f.vars(), in.inferred);
    d["essential_vars"] = nf.essential_vars;
    d["cubic_part"] = print_poly(nf.cubic_part);
    Doc lambdas = Doc::array();
    for (const Rat& l : nf.lambdas)
        lambdas.push_back(rat_to_string(l));
    d["lambdas"] = lambdas;
    d["normal_form"] = print_poly(nf.normal_form);
    d["witness"] = witness_doc(nf.witness);
    d["verified"] = socle3::verify_iso(in.f, nf.normal_form, nf.witness);
    maybe_write_witness(d, witness_out);
    emit(d, fmt);
    return 0;
}

int cmd_iso(const std::string& ltext, const std::string& rtext,
            const std::optional<std::size_t>& vars, std::uint64_t seed, Fmt fmt) {
    const auto l = read_dual(ltext, vars);
    const auto r = read_dual(rtext, vars);
    const auto dec = socle3::iso_socle3(l.f, r.f, seed);
    Doc d = new_doc("iso");
    d["left"] = print_poly(l.f);
    d["right"] = print_poly(r.f);
    d["vars_left"] = l.f.vars();
    d["vars_right"] = r.f.vars();
    d["seed"] = seed;
    d["hf_left"] = int_array(dec.hf_left);
    d["hf_right"] = int_array(dec.hf_right);
    d["status"] = socle3::to_string(dec.status);
    d["detail"] = dec.detail;
    emit(d, fmt);
    return 0;
}

int cmd_verify_iso(const std::string& ltext, const std::string& rtext,
                   const std::string& witness_path, Fmt fmt) {
    const auto w = read_witness_file(witness_path);
    const DualPoly f = parse_dual(ltext, w.vars());
    const DualPoly g = parse_dual(rtext, w.vars());
    Doc d = new_doc("verify-iso");
    d["left"] = print_poly(f);
    d["right"] = print_poly(g);
    d["witness_file"] = witness_path;
    d["vars"] = w.vars();
    d["socle_bound"] = w.socle_bound();
    d["verified"] = socle3::verify_iso(f, g, w);
    emit(d, fmt);
    return 0;
}

int cmd_classify(const std::string& ftext, const std::optional<std::size_t>& vars,
                 std::uint64_t seed, Fmt fmt) {
    const auto in = read_dual(ftext, vars);
    Doc d = new_doc("classify");
    d["input"] = print_poly(in.f);
    set_vars(d, in.f.vars(), in.inferred);
    if (in.f.vars() == 2) {
        d["kind"] = "binary";
        d["class"] = cubics::to_string(cubics::classify_binary_cubic(in.f));
        d["discriminant"] = rat_to_string(cubics::binary_cubic_discriminant(in.f));
    } else if (in.f.vars() == 3) {
        d["kind"] = "ternary";
        const auto got = cubics::classify_ternary_cubic(in.f, seed);
        const auto inv = cubics::aronhold_invariants(in.f);
        d["class"] = cubics::to_string(got.cls);
        d["aronhold_s"] = rat_to_string(inv.s);
        d["aronhold_t"] = rat_to_string(inv.t);
        d["discriminant"] = rat_to_string(inv.disc);
        if (got.j)
            d["j"] = rat_to_string(*got.j);
        if (got.profile) {
            Doc p;
            p["colength"] = got.profile->colength;
            p["points"] = got.profile->points;
            d["profile"] = p;
        }
    } else {
        throw domain_error("classification covers binary and ternary cubics; got " +
                           std::to_string(in.f.vars()) + " variables");
    }
    emit(d, fmt);
    return 0;
}

int cmd_jinv(const std::optional<std::string>& ftext, const std::optional<std::string>& lambda,
             const std::optional<std::size_t>& vars, Fmt fmt) {
    Doc d = new_doc("jinv");
    DualPoly f;
    if (lambda) {
        const Rat q = rat_from_string(*lambda);
        f = cubics::legendre_cubic(q);
        d["lambda"] = rat_to_string(q);
        d["cubic"] = print_poly(f);
    } else if (ftext) {
        f = parse_dual(*ftext, vars);
        d["cubic"] = print_poly(f);
    } else {
        throw parse_error("jinv needs a ternary cubic or --lambda", 0);
    }
    const auto inv = cubics::aronhold_invariants(f);
    d["aronhold_s"] = rat_to_string(inv.s);
    d["aronhold_t"] = rat_to_string(inv.t);
    d["discriminant"] = rat_to_string(inv.disc);
    d["j"] = rat_to_string(cubics::j_invariant(f));
    if (lambda) {
        Doc orbit = Doc::array();
        for (const Rat& o : cubics::lambda_orbit(rat_from_string(*lambda)))
            orbit.push_back(rat_to_string(o));
        d["orbit"] = orbit;
    }
    emit(d, fmt);
    return 0;
}

int cmd_models(const std::optional<std::string>& cls, const std::optional<std::string>& lambda,
               Fmt fmt) {
    std::vector<cubics::ModelRow> rows = cubics::model_table();
    std::string known = "EllipticGeneral";
    for (const auto& r : rows)
        known = r.class_name + ", " + known;
    if (cls) {
        if (*cls == "EllipticGeneral") {
            if (!lambda)
                throw domain_error("the EllipticGeneral family is parameterized; pass --lambda");
            rows = {cubics::legendre_model(rat_from_string(*lambda))};
        } else {
            if (lambda)
                throw domain_error("--lambda only applies to the EllipticGeneral family");
            std::vector<cubics::ModelRow> filtered;
            for (const auto& r : rows)
                if (r.class_name == *cls)
                    filtered.push_back(r);
            if (filtered.empty())
                throw domain_error("unknown class '" + *cls + "'; known classes: " + known);
            rows = filtered;
        }
    } else if (lambda) {
        rows.push_back(cubics::legendre_model(rat_from_string(*lambda)));
    }
    Doc d = new_doc("models");
    if (cls)
        d["filter"] = *cls;
    Doc rdoc = Doc::array();
    for (const auto& r : rows) {
        Doc row;
        row["class"] = r.class_name;
        row["geometry"] = r.geometry;
        row["vars"] = r.vars;
        Doc ideal = Doc::array();
        for (const auto& g : r.ideal_gens)
            ideal.push_back(g);
        row["ideal"] = ideal;
        row["dual_generator"] = r.dual_generator;
        rdoc.push_back(row);
    }
    d["rows"] = rdoc;
    emit(d, fmt);
    return 0;
}

int cmd_selftest(std::uint64_t seed, Fmt fmt) {
    const auto results = run_selftest(seed);
    std::size_t passed = 0;
    for (const auto& r : results)
        if (r.pass)
            ++passed;
    Doc d = new_doc("selftest");
    d["seed"] = seed;
    Doc checks = Doc::array();
    for (const auto& r : results) {
        Doc c;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        checks.push_back(c);
    }
    d["checks"] = checks;
    d["passed"] = passed;
    d["failed"] = results.size() - passed;
    emit(d, fmt);
    return passed == results.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact apolarity calculator: annihilators, Hilbert functions, isomorphism "
                 "witnesses and plane cubic invariants over the rationals"};
    app.require_subcommand(1);

    std::string fmt_flag;
    std::optional<std::size_t> vars;
    std::optional<int> socle;
    int socle_req = 0;
    std::uint64_t seed = cubics::kDefaultProfileSeed;
    std::uint64_t selftest_seed = 1;
    std::string f_arg, g_arg, witness_path;
    std::vector<std::string> gens;
    std::optional<std::string> dual, witness_out, cls, lambda, jinv_f;
    int rc = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", fmt_flag,
                        "output format: text or structured (default: APOLAR_FORMAT or text)");
    };
    auto add_vars = [&](CLI::App* sub) {
        sub->add_option("--vars", vars, "variable count override (default: inferred)");
    };

    auto* ann = app.add_subcommand("ann", "annihilator ideal of a dual polynomial");
    ann->add_option("F", f_arg, "dual polynomial (y variables)")->required();
    ann->add_option("--socle", socle, "socle bound (default: deg F)");
    add_vars(ann);
    add_format(ann);
    ann->callback([&] { rc = cmd_ann(f_arg, vars, socle, output_format(fmt_flag)); });

    auto* hf = app.add_subcommand("hf", "Hilbert function of the apolar algebra");
    hf->add_option("F", f_arg, "dual polynomial")->required();
    add_vars(hf);
    add_format(hf);
    hf->callback([&] { rc = cmd_hf(f_arg, vars, output_format(fmt_flag)); });

    auto* perp = app.add_subcommand("perp", "inverse system of an ideal");
    perp->add_option("gens", gens, "ideal generators (x variables)");
    perp->add_option("--socle", socle_req, "socle bound")->required();
    add_vars(perp);
    add_format(perp);
    perp->callback([&] { rc = cmd_perp(gens, socle_req, vars, output_format(fmt_flag)); });

    auto* gor = app.add_subcommand("gorenstein", "Gorenstein test for an Artinian quotient");
    gor->add_option("gens", gens, "ideal generators (x variables)");
    gor->add_option("--socle", socle, "socle bound (ideal presentation)");
    auto* gor_dual = gor->add_option("--dual", dual, "dual generator instead of an ideal");
    gor_dual->excludes("gens");
    gor_dual->excludes("--socle");
    add_vars(gor);
    add_format(gor);
    gor->callback([&] { rc = cmd_gorenstein(gens, socle, dual, vars, output_format(fmt_flag)); });

    auto* q0 = app.add_subcommand("q0", "top-form quotient and symmetry of the Hilbert function");
    q0->add_option("F", f_arg, "dual polynomial")->required();
    add_vars(q0);
    add_format(q0);
    q0->callback([&] { rc = cmd_q0(f_arg, vars, output_format(fmt_flag)); });

    auto* delta = app.add_subcommand("delta", "contraction matrix of a homogeneous cubic");
    delta->add_option("F3", f_arg, "homogeneous cubic (y variables)")->required();
    add_vars(delta);
    add_format(delta);
    delta->callback([&] { rc = cmd_delta(f_arg, vars, output_format(fmt_flag)); });

    auto* canonical = app.add_subcommand(
        "canonical", "grading witness: the algebra of F is isomorphic to that of its top form");
    canonical->add_option("F", f_arg, "dual polynomial, Hilbert function {1,n,n,1}")->required();
    canonical->add_option("--witness-out", witness_out, "write the witness to a file");
    add_vars(canonical);
    add_format(canonical);
    canonical->callback(
        [&] { rc = cmd_canonical(f_arg, vars, witness_out, output_format(fmt_flag)); });

    auto* normalize =
        app.add_subcommand("normalize", "normal form cubic + sum of squares with witness");
    normalize->add_option("F", f_arg, "dual polynomial, Hilbert function {1,m,n,1}")->required();
    normalize->add_option("--witness-out", witness_out, "write the witness to a file");
    add_vars(normalize);
    add_format(normalize);
    normalize->callback(
        [&] { rc = cmd_normalize(f_arg, vars, witness_out, output_format(fmt_flag)); });

    auto* iso = app.add_subcommand("iso", "isomorphism decision for two socle-degree-3 algebras");
    iso->add_option("F", f_arg, "left dual polynomial")->required();
    iso->add_option("G", g_arg, "right dual polynomial")->required();
    iso->add_option("--seed", seed, "seed for the singular-point counter");
    add_vars(iso);
    add_format(iso);
    iso->callback([&] { rc = cmd_iso(f_arg, g_arg, vars, seed, output_format(fmt_flag)); });

    auto* verify = app.add_subcommand("verify-iso", "check a witness file: F = transport of G");
    verify->add_option("F", f_arg, "left dual polynomial")->required();
    verify->add_option("G", g_arg, "right dual polynomial")->required();
    verify->add_option("--witness", witness_path, "witness file")->required();
    add_format(verify);
    verify->callback([&] { rc = cmd_verify_iso(f_arg, g_arg, witness_path, output_format(fmt_flag)); });

    auto* classify = app.add_subcommand("classify", "class of a binary or ternary cubic");
    classify->add_option("F", f_arg, "cubic (y variables)")->required();
    classify->add_option("--seed", seed, "seed for the singular-point counter");
    add_vars(classify);
    add_format(classify);
    classify->callback([&] { rc = cmd_classify(f_arg, vars, seed, output_format(fmt_flag)); });

    auto* jinv = app.add_subcommand("jinv", "Aronhold invariants and j of a smooth ternary cubic");
    auto* jinv_f_opt = jinv->add_option("F", jinv_f, "ternary cubic");
    auto* jinv_l = jinv->add_option("--lambda", lambda, "family parameter instead of a cubic");
    jinv_f_opt->excludes(jinv_l);
    add_vars(jinv);
    add_format(jinv);
    jinv->callback([&] { rc = cmd_jinv(jinv_f, lambda, vars, output_format(fmt_flag)); });

    auto* models = app.add_subcommand("models", "published model rows: ideal and dual generator");
    models->add_option("--class", cls, "only this class");
    models->add_option("--lambda", lambda, "parameter for the EllipticGeneral family");
    add_format(models);
    models->callback([&] { rc = cmd_models(cls, lambda, output_format(fmt_flag)); });

    auto* selftest = app.add_subcommand("selftest", "fixture corpus and property suites");
    selftest->add_option("--seed", selftest_seed, "seed for the property suites");
    add_format(selftest);
    selftest->callback([&] { rc = cmd_selftest(selftest_seed, output_format(fmt_flag)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
