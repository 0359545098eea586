#pragma once

#include "apolar/cubics.hpp"
#include "apolar/errors.hpp"
#include "apolar/invsys.hpp"
#include "apolar/linalg.hpp"
#include "apolar/multiindex.hpp"
#include "apolar/poly.hpp"
#include "apolar/socle3.hpp"
#include "apolar/subspace.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace apolar;

// deterministic source for seeded cases
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat coeff(int bound = 9) { return Rat(range(-bound, bound)); }
    Rat nonzero(int bound = 9) {
        int c = 0;
        while (c == 0) c = range(-bound, bound);
        return Rat(c);
    }
};

inline MultiIndex mi(std::vector<int> exps) { return MultiIndex(std::move(exps)); }

inline DualPoly dp(const std::string& text, std::optional<std::size_t> vars = std::nullopt) {
    return parse_dual(text, vars);
}

inline Poly xp(const std::string& text, std::optional<std::size_t> vars = std::nullopt) {
    return parse_poly(text, Side::series, vars).poly;
}

inline std::vector<Poly> xps(const std::vector<std::string>& texts, std::size_t vars) {
    std::vector<Poly> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_poly(t, Side::series, vars).poly);
    return out;
}

inline Poly random_poly(Rng& rng, std::size_t vars, int maxdeg, int bound = 9) {
    Poly p(vars);
    for (const auto& a : monomial_basis(vars, maxdeg))
        if (rng.range(0, 2) != 0) p.add_term(a, rng.coeff(bound));
    return p;
}

inline Poly random_homogeneous(Rng& rng, std::size_t vars, int d, int bound = 9) {
    Poly p(vars);
    for (const auto& a : monomials_of_degree(vars, d)) p.add_term(a, rng.coeff(bound));
    return p;
}

inline DualPoly random_nonzero_dual(Rng& rng, std::size_t vars, int maxdeg, int bound = 9) {
    for (;;) {
        DualPoly f(random_poly(rng, vars, maxdeg, bound));
        if (!f.is_zero()) return f;
    }
}

inline DualPoly random_nondeg_cubic(Rng& rng, std::size_t n, int bound = 9) {
    for (;;) {
        DualPoly f(random_homogeneous(rng, n, 3, bound));
        if (!f.is_zero() && socle3::is_nondegenerate_cubic(f)) return f;
    }
}

inline Mat random_invertible(Rng& rng, std::size_t m, int bound = 3) {
    for (;;) {
        Mat l(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) l.at(i, j) = rng.coeff(bound);
        if (inverse(l).has_value()) return l;
    }
}

// substitution with invertible linear part, an occasional quadratic tail,
// and a unit with random linear part
inline socle3::IsoWitness random_witness(Rng& rng, std::size_t m, int socle_bound = 3) {
    const Mat l = random_invertible(rng, m);
    const auto quads = monomials_of_degree(m, 2);
    std::vector<JetElement> images;
    images.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Poly img(m);
        for (std::size_t i = 0; i < m; ++i)
            img.add_term(MultiIndex(m).plus_var(i), l.at(i, j));
        if (rng.range(0, 1) == 1)
            img.add_term(quads[static_cast<std::size_t>(rng.range(0, static_cast<int>(quads.size()) - 1))],
                         Rat(rng.range(-2, 2)));
        images.emplace_back(img, socle_bound);
    }
    Poly up = Poly::constant(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        up.add_term(MultiIndex(m).plus_var(i), Rat(rng.range(-1, 1)));
    return {socle3::AutMap(std::move(images)), JetElement(up, socle_bound)};
}

// y_j -> sum_i l(i, j) y_i on the dual side
inline DualPoly linear_sub(const DualPoly& f, const Mat& l) {
    const std::size_t m = f.vars();
    std::vector<Poly> images;
    images.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Poly img(m);
        for (std::size_t i = 0; i < m; ++i) img.add_term(MultiIndex(m).plus_var(i), l.at(i, j));
        images.push_back(std::move(img));
    }
    return DualPoly(f.poly().substituted(images));
}

// y-side form re-read as an x-side polynomial (same exponents and coefficients)
inline Poly as_series(const DualPoly& f) {
    Poly p(f.vars());
    for (const auto& [a, c] : f.poly().terms()) p.add_term(a, c);
    return p;
}

inline Rat det3(const Mat& m) {
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

} // namespace testutil
