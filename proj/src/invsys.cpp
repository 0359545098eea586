#include "apolar/invsys.hpp"

#include "apolar/errors.hpp"

#include <algorithm>

namespace apolar {
namespace invsys {

namespace {

void require_nonzero(const DualPoly& f, const char* op) {
    if (f.is_zero()) throw domain_error(std::string(op) + " is undefined for the zero polynomial");
}

// rank of the basis matrix restricted to columns whose monomial degree is >= t
std::size_t rank_from_degree(const Subspace& v, int t) {
    const auto& labels = v.labels();
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < labels.size(); ++j)
        if (labels[j].degree() >= t) cols.push_back(j);
    Mat m(v.dim(), cols.size());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = v.basis().at(i, cols[j]);
    return rank(m);
}

} // namespace

Subspace derivative_span(const DualPoly& f) {
    require_nonzero(f, "derivative span");
    const std::size_t m = f.vars();
    const int s = f.degree();
    std::vector<Poly> gens;
    for (const MultiIndex& a : monomial_basis(m, s)) {
        DualPoly d = contract(Poly::monomial(m, a), f);
        if (!d.is_zero()) gens.push_back(d.poly());
    }
    return Subspace::span(m, s, gens);
}

std::vector<int> hilbert_function_of(const Subspace& v) {
    const int s = v.bound();
    std::vector<int> hf;
    std::size_t prev = v.dim(); // rank of columns with degree >= 0
    for (int i = 0; i <= s; ++i) {
        std::size_t next = rank_from_degree(v, i + 1);
        hf.push_back(static_cast<int>(prev - next));
        prev = next;
    }
    while (!hf.empty() && hf.back() == 0) hf.pop_back();
    return hf;
}

std::vector<int> hilbert_function(const DualPoly& f) {
    require_nonzero(f, "Hilbert function");
    return hilbert_function_of(derivative_span(f));
}

Subspace perp(const std::vector<Poly>& gens, int socle_bound, std::size_t vars) {
    for (const Poly& g : gens) {
        if (g.is_zero()) throw domain_error("ideal generators must be nonzero");
        if (g.vars() != vars) throw internal_error("generator arity mismatch");
    }
    const auto dual_basis_list = monomial_basis(vars, socle_bound);
    // One block of rows per generator: row = coefficients of gi . y^b.
    Mat m(0, dual_basis_list.size());
    Subspace coords(vars, socle_bound);
    for (const Poly& g : gens) {
        std::vector<std::vector<Rat>> cols;
        cols.reserve(dual_basis_list.size());
        for (const MultiIndex& b : dual_basis_list) {
            DualPoly image = contract(g, DualPoly(Poly::monomial(vars, b)));
            cols.push_back(coords.coordinates(image.poly()));
        }
        for (std::size_t r = 0; r < dual_basis_list.size(); ++r) {
            std::vector<Rat> row(dual_basis_list.size());
            bool nonzero = false;
            for (std::size_t c = 0; c < dual_basis_list.size(); ++c) {
                row[c] = cols[c][r];
                nonzero = nonzero || row[c] != 0;
            }
            if (nonzero) m.append_row(row);
        }
    }
    Subspace result(vars, socle_bound);
    std::vector<Poly> basis;
    for (const auto& vec : kernel_basis(m)) {
        Poly p(vars);
        for (std::size_t j = 0; j < dual_basis_list.size(); ++j)
            if (vec[j] != 0) p.add_term(dual_basis_list[j], vec[j]);
        basis.push_back(std::move(p));
    }
    return Subspace::span(vars, socle_bound, basis);
}

IdealDescription annihilator(const DualPoly& f, std::optional<int> socle_bound) {
    require_nonzero(f, "annihilator");
    const std::size_t m = f.vars();
    const int s = socle_bound.value_or(f.degree());
    if (s < f.degree())
        throw domain_error("socle bound below the degree of the dual generator");

    const auto series_basis = monomial_basis(m, s);
    Subspace coords(m, s);
    // Column a = coordinates of x^a . F; kernel vectors are annihilators.
    Mat c(coords.labels().size(), series_basis.size());
    for (std::size_t j = 0; j < series_basis.size(); ++j) {
        DualPoly image = contract(Poly::monomial(m, series_basis[j]), f);
        auto col = coords.coordinates(image.poly());
        for (std::size_t i = 0; i < col.size(); ++i) c.at(i, j) = col[i];
    }
    std::vector<Poly> kernel_polys;
    for (const auto& vec : kernel_basis(c)) {
        Poly p(m);
        for (std::size_t j = 0; j < series_basis.size(); ++j)
            if (vec[j] != 0) p.add_term(series_basis[j], vec[j]);
        kernel_polys.push_back(std::move(p));
    }

    IdealDescription ideal;
    ideal.vars = m;
    ideal.socle_bound = s;
    ideal.kbasis = Subspace::span(m, s, kernel_polys);

    // Minimal generators: a basis of I modulo (m I + the implicit tail).
    // m I is spanned by the variable multiples of the kernel basis, truncated.
    std::vector<Poly> shifted;
    for (const Poly& b : ideal.kbasis.basis_polys())
        for (std::size_t j = 0; j < m; ++j) {
            Poly q = b.mul(Poly::variable(m, j), s);
            if (!q.is_zero()) shifted.push_back(q);
        }
    Subspace mi = Subspace::span(m, s, shifted);

    std::vector<std::size_t> order(ideal.kbasis.dim());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ideal.kbasis.poly_of_row(a).degree() < ideal.kbasis.poly_of_row(b).degree();
    });
    Subspace grown = mi;
    for (std::size_t i : order) {
        Poly cand = ideal.kbasis.poly_of_row(i);
        if (grown.contains(cand)) continue;
        grown = grown.extended({cand});
        ideal.min_gens.push_back(std::move(cand));
    }
    return ideal;
}

bool ideal_equal(const std::vector<Poly>& gens1, const std::vector<Poly>& gens2,
                 int socle_bound, std::size_t vars) {
    return perp(gens1, socle_bound, vars) == perp(gens2, socle_bound, vars);
}

bool is_stable_subspace(const Subspace& v) {
    const std::size_t m = v.vars();
    if (v.dim() == 0) return false;
    if (!v.contains(Poly::constant(m, 1))) return false;
    for (std::size_t j = 0; j < m; ++j)
        if (!v.contains(Poly::variable(m, j))) return false;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        DualPoly b(v.poly_of_row(i));
        for (std::size_t j = 0; j < m; ++j)
            if (!v.contains(contract(Poly::variable(m, j), b).poly())) return false;
    }
    return true;
}

GorensteinInfo gorenstein_info(const Subspace& v) {
    const std::size_t m = v.vars();
    std::vector<Poly> derived;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        DualPoly b(v.poly_of_row(i));
        for (std::size_t j = 0; j < m; ++j) {
            DualPoly d = contract(Poly::variable(m, j), b);
            if (!d.is_zero()) derived.push_back(d.poly());
        }
    }
    Subspace contracted = Subspace::span(m, v.bound(), derived);
    GorensteinInfo info;
    info.socle_dim = v.dim() - contracted.dim();
    info.gorenstein = info.socle_dim == 1;
    if (info.gorenstein) {
        // Any element outside m.V generates; take the first RREF row that does.
        for (std::size_t i = 0; i < v.dim(); ++i) {
            Poly cand = v.poly_of_row(i);
            if (!contracted.contains(cand)) {
                info.dual_generator = DualPoly(std::move(cand));
                break;
            }
        }
    }
    return info;
}

namespace {

AlgebraPresentation present(std::size_t vars, int socle_bound, Subspace module) {
    AlgebraPresentation a;
    a.vars = vars;
    a.socle_bound = socle_bound;
    a.hf = hilbert_function_of(module);
    a.multiplicity = module.dim();
    a.embedding_dim = a.hf.size() > 1 ? static_cast<std::size_t>(a.hf[1]) : 0;
    a.socle_degree = static_cast<int>(a.hf.size()) - 1;
    a.socle = gorenstein_info(module);
    a.dual_module = std::move(module);
    return a;
}

} // namespace

AlgebraPresentation algebra_from_dual(const DualPoly& f) {
    require_nonzero(f, "algebra presentation");
    return present(f.vars(), f.degree(), derivative_span(f));
}

AlgebraPresentation algebra_from_ideal(const std::vector<Poly>& gens, int socle_bound,
                                       std::size_t vars) {
    return present(vars, socle_bound, perp(gens, socle_bound, vars));
}

AlgebraPresentation top_form_quotient(const DualPoly& f) {
    require_nonzero(f, "top form quotient");
    return algebra_from_dual(f.top_form());
}

bool symmetric_hf_criterion(const DualPoly& f) {
    std::vector<int> hf = hilbert_function(f);
    std::vector<int> rev(hf.rbegin(), hf.rend());
    return hf == rev;
}

} // namespace invsys
} // namespace apolar
