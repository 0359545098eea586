#include "apolar/socle3.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "apolar/errors.hpp"
#include "apolar/invsys.hpp"

namespace apolar::socle3 {

namespace {

std::size_t basis_index(const std::vector<MultiIndex>& basis, const MultiIndex& a) {
    auto it = std::lower_bound(basis.begin(), basis.end(), a, deglex_less);
    if (it == basis.end() || !(*it == a)) throw internal_error("monomial missing from basis list");
    return static_cast<std::size_t>(it - basis.begin());
}

void require_homogeneous_cubic(const DualPoly& f3, const char* op) {
    if (f3.is_zero() || f3.degree() != 3 || !(f3.poly().homogeneous_part(3) == f3.poly()))
        throw domain_error(std::string(op) + ": expected a nonzero homogeneous cubic");
}

std::string hf_text(const std::vector<int>& hf) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < hf.size(); ++i) os << (i ? "," : "") << hf[i];
    os << "}";
    return os.str();
}

bool touches_leading(const MultiIndex& a, std::size_t n) {
    for (std::size_t i = 0; i < n && i < a.vars(); ++i)
        if (a[i] > 0) return true;
    return false;
}

MultiIndex widen_mi(const MultiIndex& a, std::size_t m) {
    std::vector<int> e = a.exponents();
    e.resize(m, 0);
    return MultiIndex(std::move(e));
}

// Part of a polynomial supported entirely on variables >= n.
Poly trailing_pure_part(const Poly& p, std::size_t n) {
    Poly out(p.vars());
    for (const auto& [a, c] : p.terms())
        if (!touches_leading(a, n)) out.add_term(a, c);
    return out;
}

}  // namespace

DeltaMatrix delta_matrix(const DualPoly& f3) {
    require_homogeneous_cubic(f3, "delta matrix");
    const std::size_t m = f3.vars();
    DeltaMatrix out;
    out.col_labels = monomials_of_degree(m, 2);
    out.mat = Mat(m, out.col_labels.size());
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t c = 0; c < out.col_labels.size(); ++c)
            out.mat.at(j, c) = f3.dual_coeff(out.col_labels[c].plus_var(j));
    out.rank = rank(out.mat);
    return out;
}

bool is_nondegenerate_cubic(const DualPoly& f3) {
    return delta_matrix(f3).rank == f3.vars();
}

Mat essential_frame(const DualPoly& f3) {
    require_homogeneous_cubic(f3, "essential frame");
    const std::size_t m = f3.vars();
    const DeltaMatrix dm = delta_matrix(f3);
    // c is inessential exactly when (sum c_j x_j) kills f3, i.e. c lies in the
    // kernel of the transposed delta matrix.
    const auto kern = kernel_basis(dm.mat.transpose());
    const std::size_t n = m - kern.size();
    if (dm.rank != n) throw internal_error("delta rank disagrees with kernel dimension");

    // Greedily complete the kernel with coordinate vectors; those become the
    // leading columns, so the substituted form lives in the first n variables.
    Mat probe(0, m);
    for (const auto& v : kern) probe.append_row(v);
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < m && picked.size() < n; ++i) {
        std::vector<Rat> e(m, Rat(0));
        e[i] = 1;
        Mat trial = probe;
        trial.append_row(e);
        if (rank(trial) == probe.rows() + 1) {
            probe = trial;
            picked.push_back(i);
        }
    }
    if (picked.size() != n) throw internal_error("kernel completion failed");

    Mat frame(m, m);
    for (std::size_t c = 0; c < n; ++c) frame.at(picked[c], c) = 1;
    for (std::size_t k = 0; k < kern.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) frame.at(i, n + k) = kern[k][i];
    return frame;
}

AutMap::AutMap(std::vector<JetElement> images) : images_(std::move(images)) {
    if (images_.empty()) throw domain_error("substitution needs at least one variable");
    socle_ = images_[0].socle_bound();
    const std::size_t m = images_.size();
    for (const auto& im : images_) {
        if (im.vars() != m) throw domain_error("substitution image has the wrong variable count");
        if (im.socle_bound() != socle_) throw domain_error("substitution images disagree on the socle bound");
        if (!(im.constant_term() == 0)) throw domain_error("substitution image has a constant term");
    }
}

AutMap AutMap::identity(std::size_t vars, int socle_bound) {
    std::vector<JetElement> im;
    im.reserve(vars);
    for (std::size_t j = 0; j < vars; ++j)
        im.emplace_back(Poly::variable(vars, j), socle_bound);
    return AutMap(std::move(im));
}

AutMap AutMap::linear(const Mat& lin, int socle_bound) {
    if (lin.rows() != lin.cols()) throw domain_error("linear substitution needs a square matrix");
    const std::size_t m = lin.rows();
    std::vector<JetElement> im;
    im.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Poly p(m);
        for (std::size_t i = 0; i < m; ++i) p.add_term(MultiIndex(m).plus_var(i), lin.at(i, j));
        im.emplace_back(std::move(p), socle_bound);
    }
    return AutMap(std::move(im));
}

Mat AutMap::linear_part() const {
    const std::size_t m = images_.size();
    Mat lin(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            lin.at(i, j) = images_[j].poly().coeff(MultiIndex(m).plus_var(i));
    return lin;
}

bool AutMap::invertible() const { return apolar::inverse(linear_part()).has_value(); }

JetElement AutMap::apply(const JetElement& g) const {
    if (g.vars() != images_.size() || g.socle_bound() != socle_)
        throw domain_error("substitution applied to an element of the wrong ring");
    return JetElement(apply_truncated(g.poly()), socle_);
}

Poly AutMap::apply_truncated(const Poly& p) const {
    if (p.vars() != images_.size()) throw domain_error("substitution applied to an element of the wrong ring");
    std::vector<Poly> images;
    images.reserve(images_.size());
    for (const auto& im : images_) images.push_back(im.poly());
    return p.substituted(images, socle_);
}

AutMap AutMap::then(const AutMap& next) const {
    if (next.vars() != vars() || next.socle_bound() != socle_)
        throw domain_error("composed substitutions live in different rings");
    std::vector<JetElement> im;
    im.reserve(images_.size());
    for (const auto& g : images_) im.push_back(next.apply(g));
    return AutMap(std::move(im));
}

AutMap AutMap::inverse() const {
    const std::size_t m = images_.size();
    const Mat full = aut_matrix(*this);
    const auto inv = apolar::inverse(full);
    if (!inv) throw domain_error("substitution is not invertible");
    const auto basis = monomial_basis(m, socle_);
    std::vector<JetElement> im;
    im.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t col = basis_index(basis, MultiIndex(m).plus_var(j));
        Poly p(m);
        for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], inv->at(i, col));
        if (!(p.coeff(MultiIndex(m)) == 0)) throw internal_error("inverse substitution grew a constant term");
        im.emplace_back(std::move(p), socle_);
    }
    return AutMap(std::move(im));
}

bool AutMap::operator==(const AutMap& o) const {
    return socle_ == o.socle_ && images_ == o.images_;
}

Mat aut_matrix(const AutMap& phi) {
    const std::size_t m = phi.vars();
    const auto basis = monomial_basis(m, phi.socle_bound());
    Mat out(basis.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const Poly image = phi.apply_truncated(Poly::monomial(m, basis[b]));
        for (std::size_t i = 0; i < basis.size(); ++i) out.at(i, b) = image.coeff(basis[i]);
    }
    return out;
}

Mat unit_matrix(const JetElement& u) {
    // Matrix of g -> u . g in divided-power coordinates: column b holds the
    // coordinates of u applied to the dual basis element at b, which works out
    // to the coefficient of u at b - c.
    const std::size_t m = u.vars();
    const auto basis = monomial_basis(m, u.socle_bound());
    Mat out(basis.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (basis[c].divides(basis[b])) out.at(c, b) = u.poly().coeff(basis[b].minus(basis[c]));
    return out;
}

Subspace transport_subspace(const AutMap& phi, const Subspace& v) {
    if (v.vars() != phi.vars() || v.bound() != phi.socle_bound())
        throw domain_error("subspace transport across different rings");
    std::vector<Poly> images;
    for (const auto& p : v.basis_polys()) images.push_back(phi.apply_truncated(p));
    return Subspace::span(v.vars(), v.bound(), images);
}

IsoWitness identity_witness(std::size_t vars, int socle_bound) {
    return {AutMap::identity(vars, socle_bound), JetElement::one(vars, socle_bound)};
}

IsoWitness compose(const IsoWitness& outer, const IsoWitness& inner) {
    if (outer.vars() != inner.vars() || outer.socle_bound() != inner.socle_bound())
        throw domain_error("composed witnesses live in different rings");
    return {outer.phi.then(inner.phi), inner.phi.apply(outer.unit).mul(inner.unit)};
}

IsoWitness invert(const IsoWitness& w) {
    AutMap phi_inv = w.phi.inverse();
    JetElement unit_inv = phi_inv.apply(w.unit.inverse());
    return {std::move(phi_inv), std::move(unit_inv)};
}

DualPoly dual_transport(const IsoWitness& w, const DualPoly& g) {
    const std::size_t m = w.vars();
    if (g.vars() != m) throw domain_error("transport across different rings");
    if (g.degree() > w.socle_bound()) throw domain_error("transported polynomial exceeds the witness socle bound");
    const auto basis = monomial_basis(m, w.socle_bound());
    std::vector<std::pair<MultiIndex, Rat>> coords;
    for (const auto& a : basis) {
        const JetElement xa(Poly::monomial(m, a), w.socle_bound());
        const Rat c = pairing(w.phi.apply(xa).mul(w.unit).poly(), g);
        if (!(c == 0)) coords.emplace_back(a, c);
    }
    return DualPoly::from_dual_coeffs(m, coords);
}

bool verify_iso(const DualPoly& f, const DualPoly& g, const IsoWitness& w) {
    if (f.vars() != g.vars() || f.degree() != g.degree())
        throw domain_error("isomorphism check needs equal variable counts and equal socle degrees");
    if (w.vars() != f.vars() || w.socle_bound() != f.degree())
        throw domain_error("witness dimensions disagree with the operands");
    if (!w.unit.is_unit() || !w.phi.invertible()) return false;
    if (!(f == dual_transport(w, g))) return false;

    // The dual identity forces the substitution to carry one annihilator onto
    // the other; disagreement here means the transport code is inconsistent.
    const Subspace ideal_f = invsys::annihilator(f).kbasis;
    const Subspace ideal_g = invsys::annihilator(g).kbasis;
    if (!(transport_subspace(w.phi, ideal_f) == ideal_g))
        throw internal_error("witness passed the dual identity but moved the annihilator wrong");
    return true;
}

std::optional<JetElement> find_unit(const DualPoly& from, const DualPoly& to, int socle_bound) {
    if (from.vars() != to.vars()) throw domain_error("unit search across different rings");
    const std::size_t m = from.vars();
    const auto basis = monomial_basis(m, socle_bound);
    Mat sys(basis.size(), basis.size());
    std::vector<Rat> rhs(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t b = 0; b < basis.size(); ++b)
            sys.at(r, b) = from.dual_coeff(basis[r].plus(basis[b]));
        rhs[r] = to.dual_coeff(basis[r]);
    }
    const auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    Poly u(m);
    for (std::size_t b = 0; b < basis.size(); ++b) u.add_term(basis[b], (*sol)[b]);
    JetElement unit(std::move(u), socle_bound);
    if (!unit.is_unit()) return std::nullopt;
    return unit;
}

Reduction reduce_to_quadratic_cubic(const DualPoly& f) {
    if (f.degree() != 3) throw domain_error("reduction expects socle degree three");
    const Poly stripped_poly = f.poly().homogeneous_part(3) + f.poly().homogeneous_part(2);
    const DualPoly stripped(stripped_poly);
    if (!(invsys::derivative_span(stripped) == invsys::derivative_span(f)))
        throw domain_error("no reduction: dropping the low-degree part changes the apolar module");
    auto unit = find_unit(stripped, f, 3);
    if (!unit) throw internal_error("apolar modules agree but no unit maps one generator to the other");
    return {stripped, std::move(*unit)};
}

GradingSystem grading_system(const DualPoly& f3, std::size_t m) {
    require_homogeneous_cubic(f3, "grading system");
    const std::size_t n = f3.vars();
    if (n == 0 || n > m) throw domain_error("grading system needs 1 <= n <= m variables");
    if (!is_nondegenerate_cubic(f3)) throw domain_error("grading system needs a nondegenerate cubic");

    GradingSystem out;
    for (const auto& r : monomials_of_degree(m, 2))
        if (touches_leading(r, n)) out.row_labels.push_back(r);
    const auto quad = monomials_of_degree(n, 2);
    for (std::size_t j = 0; j < m; ++j)
        for (const auto& q : quad) out.col_labels.emplace_back(j, q);

    out.mat = Mat(out.row_labels.size(), out.col_labels.size());
    for (std::size_t r = 0; r < out.row_labels.size(); ++r) {
        // Decompose the row label as e_u + e_v with u <= v.
        std::size_t u = m, v = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (out.row_labels[r][i] == 2) { u = v = i; break; }
            if (out.row_labels[r][i] == 1) { (u == m ? u : v) = i; }
        }
        for (std::size_t c = 0; c < out.col_labels.size(); ++c) {
            const auto& [j, q] = out.col_labels[c];
            Rat val(0);
            if (j == u && v < n) val += f3.dual_coeff(q.plus_var(v));
            if (j == v && u < n) val += f3.dual_coeff(q.plus_var(u));
            out.mat.at(r, c) = val;
        }
    }
    return out;
}

std::optional<AutMap> solve_grading(const DualPoly& f3, const DualPoly& f2) {
    const std::size_t n = f3.vars();
    const std::size_t m = f2.vars();
    if (!f2.is_zero() && !(f2.poly().homogeneous_part(2) == f2.poly()))
        throw domain_error("grading solve expects a homogeneous quadratic target");
    const GradingSystem sys = grading_system(f3, m);

    std::vector<Rat> rhs;
    rhs.reserve(sys.row_labels.size());
    for (const auto& r : sys.row_labels) rhs.push_back(f2.dual_coeff(r));
    const auto sol = solve_linear(sys.mat, rhs);
    if (!sol) return std::nullopt;

    std::vector<JetElement> images;
    images.reserve(m);
    for (std::size_t j = 0; j < m; ++j) images.emplace_back(Poly::variable(m, j), 3);
    std::vector<Poly> polys;
    for (std::size_t j = 0; j < m; ++j) polys.push_back(images[j].poly());
    for (std::size_t c = 0; c < sys.col_labels.size(); ++c) {
        if ((*sol)[c] == 0) continue;
        const auto& [j, q] = sys.col_labels[c];
        polys[j].add_term(widen_mi(q, m), (*sol)[c]);
    }
    std::vector<JetElement> jets;
    jets.reserve(m);
    for (auto& p : polys) jets.emplace_back(std::move(p), 3);
    return AutMap(std::move(jets));
}

CanonicalGrading canonical_grading_witness(const DualPoly& f) {
    const auto hf = invsys::hilbert_function(f);
    const bool shape_ok = hf.size() == 4 && hf[0] == 1 && hf[3] == 1 && hf[1] == hf[2];
    if (!shape_ok)
        throw domain_error("canonical grading needs Hilbert function {1,n,n,1}; got " + hf_text(hf));
    const std::size_t n = static_cast<std::size_t>(hf[1]);
    const std::size_t m = f.vars();

    const DualPoly top = f.top_form();
    const Mat frame = essential_frame(top);
    IsoWitness w1{AutMap::linear(frame, 3), JetElement::one(m, 3)};
    const DualPoly framed = dual_transport(w1, f);
    if (delta_matrix(framed.top_form()).rank != n)
        throw internal_error("frame change missed the essential variable count");
    const DualPoly framed_top = framed.top_form();
    for (const auto& [a, c] : framed_top.poly().terms())
        if (!touches_leading(a, n)) throw internal_error("frame change left the top form in a trailing variable");

    // Trailing variables may still show up linearly. A cubic correction on each
    // such variable cancels that coordinate without touching any other one: the
    // correction pairs to zero against everything of degree two or less.
    const DualPoly f3n(framed_top.poly().narrowed(n));
    MultiIndex gamma(n);
    bool found = false;
    for (const auto& g3 : monomials_of_degree(n, 3))
        if (!(f3n.dual_coeff(g3) == 0)) { gamma = g3; found = true; break; }
    if (!found) throw internal_error("nonzero cubic with no nonzero coefficient");
    const Rat alpha = f3n.dual_coeff(gamma);

    std::vector<JetElement> kill_images;
    for (std::size_t j = 0; j < m; ++j) {
        Poly p = Poly::variable(m, j);
        if (j >= n) {
            const Rat c = framed.dual_coeff(MultiIndex(m).plus_var(j));
            if (!(c == 0)) p.add_term(widen_mi(gamma, m), -c / alpha);
        }
        kill_images.emplace_back(std::move(p), 3);
    }
    IsoWitness wc{AutMap(std::move(kill_images)), JetElement::one(m, 3)};
    const DualPoly cleaned = dual_transport(wc, framed);
    for (std::size_t t = n; t < m; ++t)
        if (!(cleaned.dual_coeff(MultiIndex(m).plus_var(t)) == 0))
            throw internal_error("cubic correction failed to cancel a trailing linear coordinate");

    const Reduction red = reduce_to_quadratic_cubic(cleaned);
    IsoWitness w2{AutMap::identity(m, 3), red.unit};

    const Poly quad = red.reduced.poly().homogeneous_part(2);
    if (!trailing_pure_part(quad, n).is_zero())
        throw internal_error("quadratic part survives on trailing variables despite the Hilbert function");
    auto graded = solve_grading(f3n, DualPoly(quad));
    if (!graded) throw internal_error("grading system unsolvable for a nondegenerate cubic");
    IsoWitness w4{std::move(*graded), JetElement::one(m, 3)};

    IsoWitness witness = compose(compose(compose(compose(invert(w1), invert(wc)), w2), w4), w1);
    CanonicalGrading out{std::move(witness), f.top_form(), n};
    if (!verify_iso(f, out.model, out.witness))
        throw internal_error("canonical witness failed its own verification");
    return out;
}

NormalForm normalize_socle3(const DualPoly& f) {
    const auto hf = invsys::hilbert_function(f);
    const bool shape_ok = hf.size() == 4 && hf[0] == 1 && hf[3] == 1 && hf[1] >= hf[2];
    if (!shape_ok)
        throw domain_error("normalization needs Hilbert function {1,m,n,1} with m >= n; got " + hf_text(hf));
    const std::size_t m = f.vars();
    const std::size_t n = static_cast<std::size_t>(hf[2]);
    if (static_cast<std::size_t>(hf[1]) != m)
        throw domain_error("normalization needs a minimal embedding: variable count must match the Hilbert function in degree one");

    const Mat frame = essential_frame(f.top_form());
    IsoWitness w1{AutMap::linear(frame, 3), JetElement::one(m, 3)};
    const DualPoly framed = dual_transport(w1, f);
    if (delta_matrix(framed.top_form()).rank != n)
        throw internal_error("essential variable count disagrees with the Hilbert function");

    const Reduction red = reduce_to_quadratic_cubic(framed);
    IsoWitness w2{AutMap::identity(m, 3), red.unit};

    const Poly f3_poly = red.reduced.poly().homogeneous_part(3);
    const Poly quad = red.reduced.poly().homogeneous_part(2);
    const Poly tail_quad = trailing_pure_part(quad, n);

    // Diagonalize the trailing quadratic by a congruence, tracked in u_tail.
    const std::size_t d = m - n;
    Mat gram(d, d);
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t)
            gram.at(s, t) = DualPoly(tail_quad).dual_coeff(MultiIndex(m).plus_var(n + s).plus_var(n + t)) / 2;
    Mat u_tail = Mat::identity(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (gram.at(k, k) == 0) {
            std::size_t r = k + 1;
            for (; r < d; ++r)
                if (!(gram.at(r, r) == 0)) break;
            if (r < d) {
                for (std::size_t i = 0; i < d; ++i) std::swap(gram.at(i, k), gram.at(i, r));
                for (std::size_t i = 0; i < d; ++i) std::swap(gram.at(k, i), gram.at(r, i));
                for (std::size_t i = 0; i < d; ++i) std::swap(u_tail.at(i, k), u_tail.at(i, r));
            } else {
                for (r = k + 1; r < d; ++r)
                    if (!(gram.at(k, r) == 0)) break;
                if (r == d)
                    throw internal_error("trailing quadratic is singular despite the Hilbert function");
                for (std::size_t i = 0; i < d; ++i) gram.at(i, k) += gram.at(i, r);
                for (std::size_t i = 0; i < d; ++i) gram.at(k, i) += gram.at(r, i);
                for (std::size_t i = 0; i < d; ++i) u_tail.at(i, k) += u_tail.at(i, r);
            }
        }
        const Rat pivot = gram.at(k, k);
        for (std::size_t r = k + 1; r < d; ++r) {
            const Rat factor = gram.at(k, r) / pivot;
            if (factor == 0) continue;
            for (std::size_t i = 0; i < d; ++i) gram.at(i, r) -= factor * gram.at(i, k);
            for (std::size_t i = 0; i < d; ++i) gram.at(r, i) -= factor * gram.at(k, i);
            for (std::size_t i = 0; i < d; ++i) u_tail.at(i, r) -= factor * u_tail.at(i, k);
        }
    }
    std::vector<Rat> lambdas;
    for (std::size_t k = 0; k < d; ++k) {
        if (gram.at(k, k) == 0) throw internal_error("diagonalization produced a zero square coefficient");
        lambdas.push_back(gram.at(k, k));
    }

    Mat block = Mat::identity(m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) block.at(n + i, n + j) = u_tail.at(i, j);
    IsoWitness w3{AutMap::linear(block, 3), JetElement::one(m, 3)};
    const DualPoly diag = dual_transport(w3, red.reduced);

    Poly squares(m);
    for (std::size_t k = 0; k < d; ++k) squares.add_term(MultiIndex(m).plus_var(n + k, 2), lambdas[k]);
    const Poly diag_quad = diag.poly().homogeneous_part(2);
    if (!(trailing_pure_part(diag_quad, n) == squares))
        throw internal_error("congruence step missed the diagonal shape");
    if (!(diag.poly().homogeneous_part(3) == f3_poly))
        throw internal_error("congruence step disturbed the top form");

    const DualPoly f3n(f3_poly.narrowed(n));
    auto graded = solve_grading(f3n, DualPoly(diag_quad - squares));
    if (!graded) throw internal_error("grading system unsolvable for a nondegenerate cubic");
    IsoWitness w4{std::move(*graded), JetElement::one(m, 3)};

    NormalForm out;
    out.essential_vars = n;
    out.cubic_part = f3n;
    out.lambdas = std::move(lambdas);
    out.normal_form = DualPoly(f3_poly + squares);
    out.witness = compose(compose(compose(invert(w1), w2), invert(w3)), w4);
    if (!verify_iso(f, out.normal_form, out.witness))
        throw internal_error("normal form witness failed its own verification");
    return out;
}

std::string to_string(IsoStatus s) {
    switch (s) {
        case IsoStatus::isomorphic: return "Isomorphic";
        case IsoStatus::not_isomorphic: return "NotIsomorphic";
        case IsoStatus::undecided: return "Undecided";
    }
    throw internal_error("unknown isomorphism status");
}

namespace {

// Essential top form rewritten in its own n variables.
DualPoly essential_top(const DualPoly& f, std::size_t n) {
    const DualPoly top = f.top_form();
    const Mat frame = essential_frame(top);
    std::vector<Poly> images;
    images.reserve(f.vars());
    for (std::size_t j = 0; j < f.vars(); ++j) {
        Poly row(f.vars());
        for (std::size_t i = 0; i < f.vars(); ++i) row.add_term(MultiIndex(f.vars()).plus_var(i), frame.at(j, i));
        images.push_back(std::move(row));
    }
    const Poly moved = top.poly().substituted(images);
    return DualPoly(moved.narrowed(n));
}

}  // namespace

IsoDecision iso_socle3(const DualPoly& f, const DualPoly& g, std::uint64_t seed) {
    if (f.degree() != 3 || g.degree() != 3)
        throw domain_error("isomorphism test expects socle degree three on both sides");
    IsoDecision out;
    out.hf_left = invsys::hilbert_function(f);
    out.hf_right = invsys::hilbert_function(g);
    for (const auto* hf : {&out.hf_left, &out.hf_right}) {
        const bool shape_ok = hf->size() == 4 && (*hf)[0] == 1 && (*hf)[3] == 1 && (*hf)[1] >= (*hf)[2];
        if (!shape_ok)
            throw domain_error("isomorphism test needs Hilbert functions of shape {1,m,n,1}; got " + hf_text(*hf));
    }
    if (out.hf_left != out.hf_right) {
        out.status = IsoStatus::not_isomorphic;
        out.detail = "Hilbert functions differ: " + hf_text(out.hf_left) + " vs " + hf_text(out.hf_right);
        return out;
    }

    const std::size_t n = static_cast<std::size_t>(out.hf_left[2]);
    if (n <= 1) {
        out.status = IsoStatus::isomorphic;
        out.detail = n == 0 ? "no cubic part on either side" : "a single essential variable leaves one cubic class";
        return out;
    }

    const DualPoly el = essential_top(f, n);
    const DualPoly er = essential_top(g, n);
    if (n == 2) {
        const auto cl = cubics::classify_binary_cubic(el);
        const auto cr = cubics::classify_binary_cubic(er);
        out.status = cl == cr ? IsoStatus::isomorphic : IsoStatus::not_isomorphic;
        out.detail = "binary cubic classes " + cubics::to_string(cl) + " vs " + cubics::to_string(cr);
        return out;
    }
    if (n == 3) {
        const auto cl = cubics::classify_ternary_cubic(el, seed);
        const auto cr = cubics::classify_ternary_cubic(er, seed);
        if (cl.cls != cr.cls) {
            out.status = IsoStatus::not_isomorphic;
            out.detail = "ternary cubic classes " + cubics::to_string(cl.cls) + " vs " + cubics::to_string(cr.cls);
            return out;
        }
        if (cl.cls == cubics::TernaryCubicClass::EllipticGeneral) {
            const bool same_j = cl.j && cr.j && *cl.j == *cr.j;
            out.status = same_j ? IsoStatus::isomorphic : IsoStatus::not_isomorphic;
            out.detail = "smooth cubics with j invariants " + (cl.j ? rat_to_string(*cl.j) : std::string("?")) +
                         " vs " + (cr.j ? rat_to_string(*cr.j) : std::string("?"));
            return out;
        }
        out.status = IsoStatus::isomorphic;
        out.detail = "both ternary cubics classify as " + cubics::to_string(cl.cls);
        return out;
    }
    out.status = IsoStatus::undecided;
    out.detail = "Hilbert functions agree but " + std::to_string(n) +
                 " essential variables exceed the classified range (handled up to three)";
    return out;
}

}  // namespace apolar::socle3
