#pragma once

#include "apolar/linalg.hpp"
#include "apolar/multiindex.hpp"
#include "apolar/poly.hpp"

#include <vector>

namespace apolar {

// A subspace of the degree-<=bound slice of a polynomial ring, stored as an
// RREF basis over the full monomial coordinate list in basis-list order.
// The RREF makes representations canonical: equal subspaces compare equal.
class Subspace {
public:
    Subspace() : vars_(0), bound_(0) {}
    Subspace(std::size_t vars, int bound);

    static Subspace span(std::size_t vars, int bound, const std::vector<Poly>& gens);

    std::size_t vars() const { return vars_; }
    int bound() const { return bound_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<MultiIndex>& labels() const { return labels_; }

    std::vector<Rat> coordinates(const Poly& p) const;
    Poly poly_of_row(std::size_t i) const;
    std::vector<Poly> basis_polys() const;

    bool contains(const Poly& p) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

    // Span of this basis together with additional vectors.
    Subspace extended(const std::vector<Poly>& more) const;

private:
    std::size_t vars_;
    int bound_;
    std::vector<MultiIndex> labels_;
    Mat basis_; // RREF, rank rows
};

} // namespace apolar
