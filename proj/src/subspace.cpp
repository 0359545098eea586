#include "apolar/subspace.hpp"

#include "apolar/errors.hpp"

namespace apolar {

Subspace::Subspace(std::size_t vars, int bound)
    : vars_(vars), bound_(bound), labels_(monomial_basis(vars, bound)),
      basis_(0, labels_.size()) {}

std::vector<Rat> Subspace::coordinates(const Poly& p) const {
    if (p.vars() != vars_) throw internal_error("subspace coordinate arity mismatch");
    if (p.degree() > bound_) throw domain_error("polynomial exceeds the subspace degree bound");
    std::vector<Rat> v(labels_.size(), Rat(0));
    for (std::size_t j = 0; j < labels_.size(); ++j) {
        Rat c = p.coeff(labels_[j]);
        if (c != 0) v[j] = c;
    }
    return v;
}

Subspace Subspace::span(std::size_t vars, int bound, const std::vector<Poly>& gens) {
    Subspace s(vars, bound);
    Mat m(0, s.labels_.size());
    for (const Poly& g : gens) m.append_row(s.coordinates(g));
    s.basis_ = rref(std::move(m)).mat;
    return s;
}

Poly Subspace::poly_of_row(std::size_t i) const {
    Poly p(vars_);
    for (std::size_t j = 0; j < labels_.size(); ++j)
        if (basis_.at(i, j) != 0) p.add_term(labels_[j], basis_.at(i, j));
    return p;
}

std::vector<Poly> Subspace::basis_polys() const {
    std::vector<Poly> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(poly_of_row(i));
    return out;
}

bool Subspace::contains(const Poly& p) const {
    if (p.degree() > bound_) return false;
    Mat m = basis_;
    m.append_row(coordinates(p));
    return rank(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.vars_ != vars_ || other.bound_ != bound_)
        throw internal_error("subspace containment arity mismatch");
    if (other.dim() > dim()) return false;
    Mat m = basis_;
    for (std::size_t i = 0; i < other.dim(); ++i) m.append_row(other.basis_.row(i));
    return rank(m) == dim();
}

bool Subspace::operator==(const Subspace& other) const {
    return vars_ == other.vars_ && bound_ == other.bound_ && basis_ == other.basis_;
}

Subspace Subspace::extended(const std::vector<Poly>& more) const {
    Subspace s(vars_, bound_);
    Mat m = basis_;
    for (const Poly& g : more) m.append_row(s.coordinates(g));
    s.basis_ = rref(std::move(m)).mat;
    return s;
}

} // namespace apolar
