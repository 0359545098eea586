#pragma once

#include "apolar/rational.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace apolar {

// Exponent vector of a monomial in a fixed number of variables.
// The ambient variable count is carried by the containing object
// (polynomial, basis list, matrix labels), not by the index itself.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t vars) : e_(vars, 0) {}
    explicit MultiIndex(std::vector<int> exps);

    std::size_t vars() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    int degree() const;

    bool divides(const MultiIndex& other) const; // componentwise <=
    MultiIndex plus(const MultiIndex& other) const;
    MultiIndex minus(const MultiIndex& other) const; // requires divides
    MultiIndex plus_var(std::size_t j, int k = 1) const;

    bool operator==(const MultiIndex& other) const { return e_ == other.e_; }

    const std::vector<int>& exponents() const { return e_; }

private:
    std::vector<int> e_;
};

// Basis-list order: total degree first; within a degree the variable-1-heavy
// monomial comes first, so for two variables the degree-2 run is
// x1^2, x1*x2, x2^2. All matrix row/column labelings use this order.
bool deglex_less(const MultiIndex& a, const MultiIndex& b);

struct DegLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return deglex_less(a, b);
    }
};

// All monomials of total degree exactly d, in basis-list order.
std::vector<MultiIndex> monomials_of_degree(std::size_t vars, int d);

// All monomials of total degree <= bound, in basis-list order; the list for
// (vars=2, bound=1) is [1, x1, x2] and its length is binom(vars+bound, bound).
std::vector<MultiIndex> monomial_basis(std::size_t vars, int bound);

// alpha! = prod_i alpha_i!
Int mi_factorial(const MultiIndex& a);

// Falling-factorial coefficient of differentiation: beta!/(beta-alpha)!.
Int mi_falling(const MultiIndex& beta, const MultiIndex& alpha);

} // namespace apolar
