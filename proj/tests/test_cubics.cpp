#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "util.hpp"

using namespace apolar;
using namespace apolar::cubics;
using namespace testutil;

namespace {

DualPoly product_of_lines(const std::vector<std::vector<Rat>>& lines, std::size_t vars) {
    Poly acc = Poly::constant(vars, 1);
    for (const auto& l : lines) {
        Poly lin(vars);
        for (std::size_t i = 0; i < vars; ++i) lin.add_term(MultiIndex(vars).plus_var(i), l[i]);
        acc = acc.mul(lin);
    }
    return DualPoly(acc);
}

} // namespace

TEST_CASE("binary cubic discriminant and classes") {
    CHECK(binary_cubic_discriminant(dp("y1^3 - y2^3")) == -27);
    CHECK(binary_cubic_discriminant(dp("y1^2*y2")) == 0);
    CHECK(binary_cubic_discriminant(dp("y1*y2*y1 + y2^3")) == -4); // b = 1, d = 1

    CHECK(classify_binary_cubic(dp("y1^3", 2)) == BinaryCubicClass::PerfectCube);
    CHECK(classify_binary_cubic(dp("y1^2*y2")) == BinaryCubicClass::DoublePlusSimple);
    CHECK(classify_binary_cubic(dp("y1^3 - y2^3")) == BinaryCubicClass::ThreeDistinct);
    CHECK(classify_binary_cubic(dp("y1*y2^2 + y2^3")) == BinaryCubicClass::DoublePlusSimple);

    CHECK(to_string(BinaryCubicClass::ThreeDistinct) == "ThreeDistinct");
    CHECK(to_string(BinaryCubicClass::DoublePlusSimple) == "DoublePlusSimple");
    CHECK(to_string(BinaryCubicClass::PerfectCube) == "PerfectCube");

    CHECK_THROWS_AS(classify_binary_cubic(dp("y1*y2*y3")), domain_error);
    CHECK_THROWS_AS(classify_binary_cubic(dp("y1^2", 2)), domain_error);
    CHECK_THROWS_AS(binary_cubic_discriminant(dp("y1^3 + y1", 2)), domain_error);
}

TEST_CASE("binary classes by root structure") {
    Rng rng(401);
    int three_distinct = 0;
    for (int it = 0; it < 30; ++it) {
        std::vector<std::vector<Rat>> lines;
        for (int k = 0; k < 3; ++k) {
            std::vector<Rat> l = {rng.coeff(4), rng.coeff(4)};
            if (l[0] == 0 && l[1] == 0) l[0] = 1;
            lines.push_back(l);
        }
        const DualPoly f = product_of_lines(lines, 2);
        auto proportional = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
            return a[0] * b[1] - a[1] * b[0] == 0;
        };
        const bool ab = proportional(lines[0], lines[1]);
        const bool ac = proportional(lines[0], lines[2]);
        const bool bc = proportional(lines[1], lines[2]);
        const auto cls = classify_binary_cubic(f);
        if (ab && ac && bc) {
            CHECK(cls == BinaryCubicClass::PerfectCube);
        } else if (ab || ac || bc) {
            CHECK(cls == BinaryCubicClass::DoublePlusSimple);
            CHECK(binary_cubic_discriminant(f) == 0);
        } else {
            CHECK(cls == BinaryCubicClass::ThreeDistinct);
            CHECK(binary_cubic_discriminant(f) != 0);
            ++three_distinct;
        }
    }
    CHECK(three_distinct > 5); // the generic branch actually ran
}

TEST_CASE("aronhold invariants: calibration points") {
    const auto fermat = aronhold_invariants(dp("y1^3 + y2^3 + y3^3"));
    CHECK(fermat.s == 0);
    CHECK(fermat.t == 5832);
    CHECK(fermat.disc == -19683);

    const auto cusp = aronhold_invariants(dp("y2^2*y3 - y1^3"));
    CHECK(cusp.s == 0);
    CHECK(cusp.t == 0);
    CHECK(cusp.disc == 0);

    const auto triangle = aronhold_invariants(dp("y1*y2*y3"));
    CHECK(triangle.s == 1);
    CHECK(triangle.t == -1);
    CHECK(triangle.disc == 0);

    // one-parameter family: S = 16 (q^2 - q + 1), disc = 16 q^2 (q - 1)^2
    Rng rng(402);
    for (int it = 0; it < 12; ++it) {
        Rat q = Rat(rng.range(-9, 9)) / Rat(1 + rng.range(0, 4));
        if (q == 0 || q == 1) q = Rat(7, 3);
        const auto inv = aronhold_invariants(legendre_cubic(q));
        CHECK(inv.s == 16 * (q * q - q + 1));
        CHECK(inv.disc == 16 * q * q * (q - 1) * (q - 1));
    }
}

TEST_CASE("aronhold invariants scale by det^4 and det^6") {
    Rng rng(403);
    for (int it = 0; it < 10; ++it) {
        const DualPoly f(random_homogeneous(rng, 3, 3, 4));
        if (f.is_zero()) continue;
        const Mat m = random_invertible(rng, 3, 3);
        const Rat d = det3(m);
        const auto before = aronhold_invariants(f);
        const auto after = aronhold_invariants(linear_sub(f, m));
        CHECK(after.s == rat_pow(d, 4) * before.s);
        CHECK(after.t == rat_pow(d, 6) * before.t);
        CHECK(after.disc == rat_pow(d, 12) * before.disc);
    }
}

TEST_CASE("j invariant: values and orbit constancy") {
    CHECK(j_invariant(dp("y1^3 + y2^3 + y3^3")) == 0);
    CHECK(j_invariant(legendre_cubic(Rat(-1))) == 1728);
    CHECK(j_invariant(legendre_cubic(Rat(2))) == 1728);
    CHECK(j_invariant(legendre_cubic(Rat(1, 2))) == 1728);
    CHECK(j_invariant(legendre_cubic(Rat(7, 3))) == Rat(810448, 441));
    CHECK(j_invariant(legendre_cubic(Rat(5, 2))) == Rat(438976, 225));
    CHECK_THROWS_AS(j_invariant(dp("y1*y2*y3")), domain_error);

    Rng rng(404);
    for (int it = 0; it < 10; ++it) {
        Rat q = Rat(rng.range(-9, 9)) / Rat(1 + rng.range(0, 3));
        if (q == 0 || q == 1) q = Rat(-2);
        const Rat expect =
            256 * rat_pow(q * q - q + 1, 3) / (q * q * rat_pow(q - 1, 2));
        CHECK(j_invariant(legendre_cubic(q)) == expect);
        for (const Rat& p : lambda_orbit(q)) CHECK(j_invariant(legendre_cubic(p)) == expect);
    }
}

TEST_CASE("lambda orbit") {
    const auto orbit = lambda_orbit(Rat(5, 2));
    const std::vector<Rat> expect = {Rat(5, 2), Rat(2, 5), Rat(-3, 2),
                                     Rat(-2, 3), Rat(5, 3),  Rat(3, 5)};
    CHECK(orbit == expect);

    // -1 is one of the values with a small orbit; repeats are kept
    const auto half = lambda_orbit(Rat(-1));
    CHECK(half == std::vector<Rat>{Rat(-1), Rat(-1), Rat(2), Rat(1, 2), Rat(1, 2), Rat(2)});

    CHECK_THROWS_AS(lambda_orbit(Rat(0)), domain_error);
    CHECK_THROWS_AS(lambda_orbit(Rat(1)), domain_error);
}

TEST_CASE("legendre pencil: exact expansions and guard") {
    CHECK(legendre_cubic(Rat(-1)) == dp("y2^2*y3 - y1^3 + y1*y3^2"));
    CHECK(legendre_cubic(Rat(2)) == dp("y2^2*y3 - y1^3 + 3*y1^2*y3 - 2*y1*y3^2"));
    CHECK(legendre_cubic(Rat(1, 2)) ==
          dp("-y1^3 + 3/2*y1^2*y3 - 1/2*y1*y3^2 + y2^2*y3"));
    CHECK_THROWS_AS(legendre_cubic(Rat(0)), domain_error);
    CHECK_THROWS_AS(legendre_cubic(Rat(1)), domain_error);
}

TEST_CASE("jacobian scheme profiles") {
    CHECK(jacobian_scheme_profile(dp("y1*y2*y3")).colength == 3);
    CHECK(jacobian_scheme_profile(dp("y1*y2*y3")).points == 3);

    const auto tangent = jacobian_scheme_profile(dp("y1*y2^2 - y2*y3^2"));
    CHECK(tangent.colength == 3);
    CHECK(tangent.points == 1);

    const auto transversal = jacobian_scheme_profile(dp("y1*y2*y3 - y3^3"));
    CHECK(transversal.colength == 2);
    CHECK(transversal.points == 2);

    const auto node = jacobian_scheme_profile(dp("y2^2*y3 - y1^3 - y1^2*y3"));
    CHECK(node.colength == 1);
    CHECK(node.points == 1);

    const auto cusp = jacobian_scheme_profile(dp("y2^2*y3 - y1^3"));
    CHECK(cusp.colength == 2);
    CHECK(cusp.points == 1);

    CHECK_THROWS_AS(jacobian_scheme_profile(dp("y1^3 + y2^3 + y3^3")), domain_error); // smooth
    CHECK_THROWS_AS(jacobian_scheme_profile(dp("y1^3", 3)), domain_error);            // degenerate

    // seed independence
    for (const std::uint64_t seed : {std::uint64_t(1), std::uint64_t(99), std::uint64_t(4242)}) {
        const auto p = jacobian_scheme_profile(dp("y1*y2^2 - y2*y3^2"), seed);
        CHECK(p.colength == 3);
        CHECK(p.points == 1);
    }
}

TEST_CASE("colength agrees with the stabilized graded perp dimension") {
    for (const char* text : {"y1*y2*y3", "y1*y2^2 - y2*y3^2", "y1*y2*y3 - y3^3",
                             "y2^2*y3 - y1^3 - y1^2*y3", "y2^2*y3 - y1^3"}) {
        const DualPoly f = dp(text, 3);
        std::vector<Poly> partials;
        for (std::size_t j = 0; j < 3; ++j)
            partials.push_back(as_series(contract(Poly::variable(3, j), f)));
        const auto hf = invsys::hilbert_function_of(invsys::perp(partials, 10, 3));
        REQUIRE(hf.size() == 11);
        CHECK(hf[9] == hf[10]); // plateau reached
        CHECK(jacobian_scheme_profile(f).colength == hf[10]);
    }
}

TEST_CASE("smoothness matches the complete intersection oracle") {
    // disc != 0 exactly when the partials cut out hilbert function {1,3,3,1}
    // with nothing left in degree four; the truncation must reach degree four,
    // since a nodal cubic still shows {1,3,3,1} below that
    Rng rng(405);
    int smooth_seen = 0, singular_seen = 0;
    for (int it = 0; it < 14; ++it) {
        DualPoly f(random_homogeneous(rng, 3, 3, 3));
        if (it % 3 == 0) {
            // plant a singular one: random substitution of a nodal form
            f = linear_sub(dp("y2^2*y3 - y1^3 - y1^2*y3"), random_invertible(rng, 3, 2));
        }
        if (f.is_zero() || !socle3::is_nondegenerate_cubic(f)) continue;
        std::vector<Poly> partials;
        for (std::size_t j = 0; j < 3; ++j)
            partials.push_back(as_series(contract(Poly::variable(3, j), f)));
        const auto alg = invsys::algebra_from_ideal(partials, 4, 3);
        // trailing zeros are trimmed, so a smooth member reads {1,3,3,1}
        // even at bound four, while any singular one keeps a degree-4 entry
        const bool milnor_pointlike = alg.hf == std::vector<int>{1, 3, 3, 1};
        const bool smooth = aronhold_invariants(f).disc != 0;
        CHECK(smooth == milnor_pointlike);
        if (smooth) CHECK(alg.multiplicity == 8);
        (smooth ? smooth_seen : singular_seen)++;
    }
    CHECK(smooth_seen > 0);
    CHECK(singular_seen > 0);
}

TEST_CASE("ternary classification fixtures") {
    auto cls = [](const char* text) { return classify_ternary_cubic(dp(text, 3)); };

    CHECK(cls("y1*y2*y3").cls == TernaryCubicClass::ThreeLines);
    CHECK(cls("y1*y2^2 - y2*y3^2").cls == TernaryCubicClass::ConicTangentLine);
    CHECK(cls("y1*y2*y3 - y3^3").cls == TernaryCubicClass::ConicTransversalLine);
    CHECK(cls("y2^2*y3 - y1^3 - y1^2*y3").cls == TernaryCubicClass::NodalIrreducible);
    CHECK(cls("y2^2*y3 - y1^3").cls == TernaryCubicClass::CuspidalIrreducible);
    CHECK(cls("y1^3 + y2^3 + y3^3").cls == TernaryCubicClass::EllipticFermat);

    const auto general = classify_ternary_cubic(legendre_cubic(Rat(7, 3)));
    CHECK(general.cls == TernaryCubicClass::EllipticGeneral);
    REQUIRE(general.j.has_value());
    CHECK(*general.j == Rat(810448, 441));
    CHECK_FALSE(general.profile.has_value());

    const auto lines = cls("y1*y2*y3");
    CHECK_FALSE(lines.j.has_value());
    REQUIRE(lines.profile.has_value());
    CHECK(lines.profile->colength == 3);
    CHECK(lines.profile->points == 3);

    // j = 0 smooth members that are not the diagonal form still land in EllipticFermat
    const DualPoly fermat_moved =
        linear_sub(dp("y1^3 + y2^3 + y3^3"), Mat::from_rows({{Rat(1), Rat(1), Rat(0)},
                                                             {Rat(0), Rat(1), Rat(0)},
                                                             {Rat(1), Rat(0), Rat(1)}}));
    CHECK(classify_ternary_cubic(fermat_moved).cls == TernaryCubicClass::EllipticFermat);

    CHECK_THROWS_AS(cls("y1^3 + y2^3"), domain_error);      // only two variables essential
    CHECK_THROWS_AS(cls("y1^2*y2 + y1*y2^2"), domain_error); // y1 y2 (y1 + y2), still a binary form
}

TEST_CASE("classification is invariant under invertible substitutions") {
    const std::vector<std::pair<std::string, TernaryCubicClass>> forms = {
        {"y1*y2*y3", TernaryCubicClass::ThreeLines},
        {"y1*y2^2 - y2*y3^2", TernaryCubicClass::ConicTangentLine},
        {"y1*y2*y3 - y3^3", TernaryCubicClass::ConicTransversalLine},
        {"y2^2*y3 - y1^3 - y1^2*y3", TernaryCubicClass::NodalIrreducible},
        {"y2^2*y3 - y1^3", TernaryCubicClass::CuspidalIrreducible},
        {"y1^3 + y2^3 + y3^3", TernaryCubicClass::EllipticFermat},
    };
    Rng rng(406);
    for (const auto& [text, expect] : forms) {
        const DualPoly f = dp(text, 3);
        for (int it = 0; it < 5; ++it) {
            const DualPoly g = linear_sub(f, random_invertible(rng, 3, 2));
            const auto got = classify_ternary_cubic(g);
            CHECK(got.cls == expect);
        }
    }
    const DualPoly fam = legendre_cubic(Rat(5, 2));
    for (int it = 0; it < 5; ++it) {
        const auto got = classify_ternary_cubic(linear_sub(fam, random_invertible(rng, 3, 2)));
        CHECK(got.cls == TernaryCubicClass::EllipticGeneral);
        REQUIRE(got.j.has_value());
        CHECK(*got.j == Rat(438976, 225));
    }
}

TEST_CASE("model table rows annihilate their duals") {
    for (const auto& row : model_table()) {
        const DualPoly f = dp(row.dual_generator, row.vars);
        const auto ideal = invsys::annihilator(f);
        CHECK(invsys::ideal_equal(xps(row.ideal_gens, row.vars), ideal.min_gens,
                                  ideal.socle_bound, row.vars));
        const auto hf = invsys::hilbert_function(f);
        if (row.vars == 2) CHECK(hf == std::vector<int>{1, 2, 2, 1});
        if (row.vars == 3) CHECK(hf == std::vector<int>{1, 3, 3, 1});
    }
    CHECK(binary_models().size() == 2);
    CHECK(ternary_models().size() == 6);
    CHECK(model_table().size() == 8);
}

TEST_CASE("legendre model row matches the closed form at q = 2") {
    const auto row = legendre_model(Rat(2));
    CHECK(row.class_name == "EllipticGeneral");
    CHECK(row.vars == 3);
    REQUIRE(row.ideal_gens.size() == 3);
    CHECK(xp(row.ideal_gens[0], 3) == xp("x1*x2", 3));
    CHECK(xp(row.ideal_gens[1], 3) == xp("4*x1^2 + 6*x1*x3 + 3*x3^2", 3));
    CHECK(xp(row.ideal_gens[2], 3) == xp("4*x2^2 + 2*x1*x3 + 3*x3^2", 3));
    CHECK(dp(row.dual_generator, 3) == legendre_cubic(Rat(2)));

    // and the row is an honest annihilator pair
    const auto ideal = invsys::annihilator(legendre_cubic(Rat(2)));
    CHECK(invsys::ideal_equal(xps(row.ideal_gens, 3), ideal.min_gens, 3, 3));
}

TEST_CASE("legendre model rows pair across the pencil") {
    Rng rng(407);
    for (int it = 0; it < 6; ++it) {
        Rat q = Rat(rng.range(-6, 6)) / Rat(1 + rng.range(0, 2));
        if (q == 0 || q == 1) q = Rat(3);
        const auto row = legendre_model(q);
        const auto ideal = invsys::annihilator(legendre_cubic(q));
        CHECK(invsys::ideal_equal(xps(row.ideal_gens, 3), ideal.min_gens, 3, 3));
        CHECK(invsys::hilbert_function(legendre_cubic(q)) == std::vector<int>{1, 3, 3, 1});
    }
}

TEST_CASE("each fixed model row classifies as its own class") {
    for (const auto& row : model_table()) {
        const DualPoly f = dp(row.dual_generator, row.vars);
        if (row.vars == 2) {
            CHECK(to_string(classify_binary_cubic(f)) == row.class_name);
        } else {
            CHECK(to_string(classify_ternary_cubic(f).cls) == row.class_name);
        }
    }
}
