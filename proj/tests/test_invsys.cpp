#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "util.hpp"

using namespace apolar;
using namespace apolar::invsys;
using namespace testutil;

TEST_CASE("derivative span dimensions") {
    CHECK(derivative_span(dp("y1")).dim() == 2);       // {1, y1}
    CHECK(derivative_span(dp("y1^2*y2")).dim() == 6);  // 1, y1, y2, y1^2, y1 y2, y1^2 y2
    CHECK(derivative_span(dp("y1^3*y2 + y2^3")).dim() == 8);
    CHECK(derivative_span(dp("5", 1)).dim() == 1);
}

TEST_CASE("hilbert function fixtures") {
    CHECK(hilbert_function(dp("y1^3*y2 + y2^3")) == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(hilbert_function(dp("y1*y2*y3")) == std::vector<int>{1, 3, 3, 1});
    CHECK(hilbert_function(dp("y1^3 + y2^3 + y1*y2")) == std::vector<int>{1, 2, 2, 1});
    CHECK(hilbert_function(dp("y1^3 + y2^2", 2)) == std::vector<int>{1, 2, 1, 1});
    CHECK(hilbert_function(dp("7", 1)) == std::vector<int>{1});
    CHECK_THROWS_AS(hilbert_function(DualPoly(Poly(2))), domain_error);
}

TEST_CASE("annihilators match the published ideals") {
    struct Row {
        const char* f;
        std::vector<std::string> gens;
        std::size_t vars;
        int bound;
    };
    const std::vector<Row> rows = {
        {"y1^2*y2", {"x1^3", "x2^2"}, 2, 3},
        {"y1^3 - y2^3", {"x1*x2", "x1^3 + x2^3"}, 2, 3},
        {"y1*y2*y3", {"x1^2", "x2^2", "x3^2"}, 3, 3},
        {"y1^3*y2 + y2^3", {"x1^4", "x2^2 - x1^3"}, 2, 4},
        {"y1^3*y2 - y1*y2^3", {"x1^2 + x2^2", "x2^4"}, 2, 4},
    };
    for (const auto& row : rows) {
        const auto ideal = annihilator(dp(row.f, row.vars));
        CHECK(ideal.vars == row.vars);
        CHECK(ideal.socle_bound == row.bound);
        CHECK(ideal_equal(ideal.min_gens, xps(row.gens, row.vars), row.bound, row.vars));
    }
}

TEST_CASE("annihilator of a constant") {
    // at the natural bound 0 nothing of the ideal is visible
    const auto tight = annihilator(dp("3", 1));
    CHECK(tight.socle_bound == 0);
    CHECK(tight.kbasis.dim() == 0);
    CHECK(hilbert_function_of(perp(tight.min_gens, 0, 1)) == std::vector<int>{1});

    // a wider bound exposes the maximal ideal
    const auto wide = annihilator(dp("3", 1), 2);
    CHECK(ideal_equal(wide.min_gens, xps({"x1"}, 1), 2, 1));
}

TEST_CASE("perp computes truncated inverse systems") {
    CHECK(perp({}, 4, 2).dim() == 15); // the whole degree-<=4 slice
    CHECK(perp(xps({"x1^4", "x2^2"}, 2), 4, 2) == derivative_span(dp("y1^3*y2")));
    CHECK(perp(xps({"x1^2 + x2^2", "x2^4"}, 2), 4, 2) == derivative_span(dp("y1^3*y2 - y1*y2^3")));
    CHECK_THROWS_AS(perp({Poly(2)}, 3, 2), domain_error); // zero generator
}

TEST_CASE("gorenstein detection") {
    const auto one_gen = gorenstein_info(derivative_span(dp("y1^3 - y2^3")));
    CHECK(one_gen.gorenstein);
    CHECK(one_gen.socle_dim == 1);
    REQUIRE(one_gen.dual_generator.has_value());
    CHECK(derivative_span(*one_gen.dual_generator) == derivative_span(dp("y1^3 - y2^3")));

    // two independent socle elements: V = <1, y1, y2> is stable but not cyclic
    const auto wide = gorenstein_info(Subspace::span(2, 1, {xp("1", 2), xp("x1", 2), xp("x2", 2)}));
    CHECK_FALSE(wide.gorenstein);
    CHECK(wide.socle_dim == 2);
    CHECK_FALSE(wide.dual_generator.has_value());

    const auto point = gorenstein_info(Subspace::span(1, 0, {xp("1", 1)}));
    CHECK(point.gorenstein);
    CHECK(point.socle_dim == 1);
}

TEST_CASE("algebra presentations agree across the duality") {
    const auto from_dual = algebra_from_dual(dp("y1^3*y2 + y2^3"));
    const auto from_ideal = algebra_from_ideal(xps({"x1^4", "x2^2 - x1^3"}, 2), 4, 2);
    CHECK(from_dual.hf == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(from_dual.hf == from_ideal.hf);
    CHECK(from_dual.dual_module == from_ideal.dual_module);
    CHECK(from_dual.multiplicity == 8);
    CHECK(from_dual.embedding_dim == 2);
    CHECK(from_dual.socle_degree == 4);
    CHECK(from_dual.socle.gorenstein);
    CHECK(from_ideal.socle.gorenstein);
}

TEST_CASE("top form quotient is the degree-graded slice") {
    const auto q = top_form_quotient(dp("y1^3 - y2^3 + y1^2"));
    CHECK(q.hf == std::vector<int>{1, 2, 2, 1});
    CHECK(q.dual_module == derivative_span(dp("y1^3 - y2^3")));

    CHECK(top_form_quotient(dp("y1^3 + y2^2", 2)).hf == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("palindrome criterion") {
    CHECK(symmetric_hf_criterion(dp("y1^3 - y2^3 + y1^2")));
    CHECK(symmetric_hf_criterion(dp("y1*y2*y3")));
    CHECK(symmetric_hf_criterion(dp("y1^2 + y2", 2)));          // {1,1,1}
    CHECK_FALSE(symmetric_hf_criterion(dp("y1^3 + y2^2", 2)));  // {1,2,1,1}
    CHECK_FALSE(symmetric_hf_criterion(dp("y1^4 + y2^3", 2)));  // {1,2,2,1,1}
}

TEST_CASE("ideal_equal distinguishes ideals") {
    CHECK(ideal_equal(xps({"x1"}, 2), xps({"2*x1", "x1^2"}, 2), 3, 2));
    CHECK_FALSE(ideal_equal(xps({"x1"}, 2), xps({"x2"}, 2), 3, 2));
    CHECK_FALSE(ideal_equal(xps({"x1^2"}, 2), xps({"x1"}, 2), 3, 2));
}

TEST_CASE("stability of subspaces") {
    CHECK(is_stable_subspace(derivative_span(dp("y1^3 - y2^3 + y1^2"))));
    CHECK(is_stable_subspace(perp({}, 2, 2)));
    // misses the constants and is not derivative-closed
    CHECK_FALSE(is_stable_subspace(Subspace::span(1, 2, {xp("x1^2", 1)})));
    // derivative-closed but misses a variable: <1, y1> inside two variables
    CHECK_FALSE(is_stable_subspace(Subspace::span(2, 1, {xp("1", 2), xp("x1", 2)})));
}

TEST_CASE("perp of the annihilator recovers the span") {
    Rng rng(201);
    for (int it = 0; it < 25; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const DualPoly f = random_nonzero_dual(rng, m, rng.range(1, 4), 9);
        const auto ideal = annihilator(f);
        CHECK(perp(ideal.min_gens, ideal.socle_bound, m) == derivative_span(f));
        CHECK(perp(ideal.kbasis.basis_polys(), ideal.socle_bound, m) == derivative_span(f));
    }
}

TEST_CASE("rank-nullity across the pairing") {
    Rng rng(202);
    for (int it = 0; it < 20; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const DualPoly f = random_nonzero_dual(rng, m, rng.range(1, 4), 9);
        const auto ideal = annihilator(f);
        const std::size_t total =
            static_cast<std::size_t>(binomial(static_cast<unsigned>(m + ideal.socle_bound),
                                              static_cast<unsigned>(m)).get_ui());
        CHECK(ideal.kbasis.dim() + derivative_span(f).dim() == total);
    }
}

TEST_CASE("multiplicity equals the hilbert function total") {
    Rng rng(203);
    for (int it = 0; it < 20; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const DualPoly f = random_nonzero_dual(rng, m, rng.range(1, 4), 9);
        const auto alg = algebra_from_dual(f);
        int total = 0;
        for (int h : alg.hf) total += h;
        CHECK(alg.multiplicity == static_cast<std::size_t>(total));
        CHECK(alg.multiplicity == derivative_span(f).dim());
        CHECK(alg.hf.front() == 1);
        CHECK(alg.hf.back() >= 1);
        CHECK(alg.socle_degree == f.degree());
    }
}

TEST_CASE("unit contraction preserves the hilbert function") {
    Rng rng(204);
    for (int it = 0; it < 20; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const DualPoly f = random_nonzero_dual(rng, m, 3, 9);
        Poly up = Poly::constant(m, rng.nonzero(3));
        up = up + random_poly(rng, m, 2, 2).mul(Poly::variable(m, 0));
        const JetElement u(up.truncated(f.degree() < 0 ? 0 : f.degree()), f.degree());
        const DualPoly uf = contract(u, f);
        CHECK(hilbert_function(uf) == hilbert_function(f));
        CHECK(derivative_span(uf) == derivative_span(f));
    }
}

TEST_CASE("annihilator kbasis is an ideal slice") {
    Rng rng(205);
    for (int it = 0; it < 12; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const DualPoly f = random_nonzero_dual(rng, m, rng.range(1, 3), 9);
        const auto ideal = annihilator(f);
        for (std::size_t r = 0; r < ideal.kbasis.dim(); ++r) {
            const Poly p = ideal.kbasis.poly_of_row(r);
            CHECK(contract(p, f).is_zero());
            for (std::size_t j = 0; j < m; ++j) {
                const Poly xp_j = p.mul(Poly::variable(m, j)).truncated(ideal.socle_bound);
                CHECK(ideal.kbasis.contains(xp_j));
            }
        }
    }
}

TEST_CASE("min_gens generate and are minimal") {
    Rng rng(206);
    for (int it = 0; it < 10; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const DualPoly f = random_nonzero_dual(rng, m, rng.range(1, 3), 9);
        const auto ideal = annihilator(f);
        CHECK(ideal_equal(ideal.min_gens, ideal.kbasis.basis_polys(), ideal.socle_bound, m));
        for (std::size_t skip = 0; skip < ideal.min_gens.size(); ++skip) {
            std::vector<Poly> fewer;
            for (std::size_t i = 0; i < ideal.min_gens.size(); ++i)
                if (i != skip) fewer.push_back(ideal.min_gens[i]);
            CHECK_FALSE(ideal_equal(fewer, ideal.min_gens, ideal.socle_bound, m));
        }
    }
}

TEST_CASE("perp is monotone and stable below the square of the maximal ideal") {
    Rng rng(207);
    for (int it = 0; it < 10; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const int bound = rng.range(2, 4);
        // generators without constant or linear part keep 1 and the
        // variables inside the perp, so stability is testable
        Poly g1 = random_poly(rng, m, 3, 5);
        g1 = g1 - g1.parts_below(2);
        if (g1.is_zero()) g1 = xp("x1^2", m);
        Poly g2 = random_poly(rng, m, 3, 5);
        g2 = g2 - g2.parts_below(2);
        if (g2.is_zero()) g2 = xp("x1^3", m);
        const auto v12 = perp({g1, g2}, bound, m);
        CHECK(perp({g1}, bound, m).contains(v12));
        CHECK(is_stable_subspace(v12));
        const auto hf = hilbert_function_of(v12);
        std::size_t total = 0;
        for (int h : hf) total += static_cast<std::size_t>(h);
        CHECK(total == v12.dim());
    }
}
