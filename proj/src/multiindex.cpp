#include "apolar/multiindex.hpp"

#include "apolar/errors.hpp"

#include <numeric>

namespace apolar {

MultiIndex::MultiIndex(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_)
        if (v < 0) throw internal_error("negative exponent in multi-index");
}

int MultiIndex::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool MultiIndex::divides(const MultiIndex& other) const {
    if (vars() != other.vars()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    MultiIndex r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
    return r;
}

MultiIndex MultiIndex::minus(const MultiIndex& other) const {
    MultiIndex r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= other.e_[i];
        if (r.e_[i] < 0) throw internal_error("multi-index subtraction underflow");
    }
    return r;
}

MultiIndex MultiIndex::plus_var(std::size_t j, int k) const {
    MultiIndex r(*this);
    r.e_[j] += k;
    return r;
}

bool deglex_less(const MultiIndex& a, const MultiIndex& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.vars() && i < b.vars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::vector<MultiIndex> monomials_of_degree(std::size_t vars, int d) {
    std::vector<MultiIndex> out;
    if (d < 0) return out;
    MultiIndex cur(vars);
    // Recursive enumeration emits variable-1-heavy monomials first.
    auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
        if (pos + 1 == vars) {
            cur[pos] = rem;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, rem - k);
        }
        cur[pos] = 0;
    };
    if (vars == 0) {
        if (d == 0) out.push_back(MultiIndex(std::size_t{0}));
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::vector<MultiIndex> monomial_basis(std::size_t vars, int bound) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= bound; ++d) {
        auto layer = monomials_of_degree(vars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Int mi_factorial(const MultiIndex& a) {
    Int r = 1;
    for (std::size_t i = 0; i < a.vars(); ++i) r *= factorial(static_cast<unsigned>(a[i]));
    return r;
}

Int mi_falling(const MultiIndex& beta, const MultiIndex& alpha) {
    Int r = 1;
    for (std::size_t i = 0; i < beta.vars(); ++i) {
        int b = beta[i];
        int a = alpha[i];
        if (a > b) return 0;
        for (int v = b; v > b - a; --v) r *= v;
    }
    return r;
}

} // namespace apolar
