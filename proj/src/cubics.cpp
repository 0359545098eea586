#include "apolar/cubics.hpp"

#include "apolar/errors.hpp"
#include "apolar/multiindex.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>

namespace apolar {
namespace cubics {

namespace {

void require_cubic(const DualPoly& f, std::size_t vars, const char* who) {
    if (f.vars() != vars)
        throw domain_error(std::string(who) + ": expected a form in " +
                           std::to_string(vars) + " variables, got " +
                           std::to_string(f.vars()));
    if (f.is_zero()) throw domain_error(std::string(who) + ": zero form");
    if (!(f.poly() == f.poly().homogeneous_part(3)))
        throw domain_error(std::string(who) + ": expected a homogeneous cubic");
}

Poly partial(const Poly& p, std::size_t i) {
    Poly out(p.vars());
    for (const auto& [a, c] : p.terms()) {
        if (a[i] > 0) out.add_term(a.plus_var(i, -1), c * a[i]);
    }
    return out;
}

// rank of the coefficient matrix of the first partials; < vars means some
// linear change of coordinates removes a variable
std::size_t partials_rank(const DualPoly& f) {
    auto cols = monomials_of_degree(f.vars(), f.degree() - 1);
    std::map<MultiIndex, std::size_t, DegLexLess> ix;
    for (std::size_t j = 0; j < cols.size(); ++j) ix.emplace(cols[j], j);
    Mat m(f.vars(), cols.size());
    for (std::size_t i = 0; i < f.vars(); ++i) {
        Poly gi = partial(f.poly(), i);
        for (const auto& [a, c] : gi.terms()) m.at(i, ix.at(a)) = c;
    }
    return rank(m);
}

struct Triple {
    int a, b, c, sign;
};

// the six nonzero entries of the Levi-Civita symbol on {0,1,2}
constexpr Triple kEps[6] = {
    {0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1},
    {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1},
};

using Tensor = std::array<std::array<std::array<Rat, 3>, 3>, 3>;

// C[i][j][k] = (1/6) d_i d_j d_k f, the symmetric trilinear form of the cubic
Tensor trilinear_tensor(const DualPoly& f) {
    Tensor t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                MultiIndex a(3);
                a[i] += 1;
                a[j] += 1;
                a[k] += 1;
                t[i][j][k] = Rat(f.dual_coeff(a)) / 6;
            }
    return t;
}

// epsilon contraction with bracket pattern (abc)(abd)(acd)(bcd): four letters
// a,b,c,d, each a copy of the tensor, each bracket contracting one slot of
// three different letters
Rat s_contraction(const Tensor& C) {
    Rat acc(0);
    for (const Triple& e1 : kEps)
        for (const Triple& e2 : kEps) {
            for (const Triple& e3 : kEps)
                for (const Triple& e4 : kEps) {
                    // a = (e1.a, e2.a, e3.a)   b = (e1.b, e2.b, e4.a)
                    // c = (e1.c, e3.b, e4.b)   d = (e2.c, e3.c, e4.c)
                    const Rat& ca = C[e1.a][e2.a][e3.a];
                    if (ca == 0) continue;
                    const Rat& cb = C[e1.b][e2.b][e4.a];
                    if (cb == 0) continue;
                    const Rat& cc = C[e1.c][e3.b][e4.b];
                    if (cc == 0) continue;
                    const Rat& cd = C[e2.c][e3.c][e4.c];
                    if (cd == 0) continue;
                    acc += Rat(e1.sign * e2.sign * e3.sign * e4.sign) * ca * cb * cc * cd;
                }
        }
    return acc;
}

// six-letter pattern (abc)(abd)(ace)(bdf)(cef)(def)
Rat t_contraction(const Tensor& C) {
    Rat acc(0);
    for (const Triple& e1 : kEps)
        for (const Triple& e2 : kEps)
            for (const Triple& e3 : kEps) {
                // a = (e1.a, e2.a, e3.a)   b = (e1.b, e2.b, e4.a)
                // c = (e1.c, e3.b, e5.a)   d = (e2.c, e4.b, e6.a)
                // e = (e3.c, e5.b, e6.b)   f = (e4.c, e5.c, e6.c)
                const Rat& ca = C[e1.a][e2.a][e3.a];
                if (ca == 0) continue;
                for (const Triple& e4 : kEps) {
                    const Rat& cb = C[e1.b][e2.b][e4.a];
                    if (cb == 0) continue;
                    Rat pre = Rat(e1.sign * e2.sign * e3.sign * e4.sign) * ca * cb;
                    for (const Triple& e5 : kEps) {
                        const Rat& cc = C[e1.c][e3.b][e5.a];
                        if (cc == 0) continue;
                        for (const Triple& e6 : kEps) {
                            const Rat& cd = C[e2.c][e4.b][e6.a];
                            if (cd == 0) continue;
                            const Rat& ce = C[e3.c][e5.b][e6.b];
                            if (ce == 0) continue;
                            const Rat& cf = C[e4.c][e5.c][e6.c];
                            if (cf == 0) continue;
                            acc += Rat(e5.sign * e6.sign) * pre * cc * cd * ce * cf;
                        }
                    }
                }
            }
    return acc;
}

// calibration of the two contractions, fixed by requiring
// S(legendre_cubic(q)) = 16(q^2-q+1) and T(legendre_cubic(q)) =
// 32(q+1)(2q-1)(q-2); frozen from solving those conditions exactly
const Rat kSigma = Rat(54);
const Rat kTau = Rat(-972);

// ---- univariate utilities for the point count --------------------------

// coefficient list, index = power, normalized so the back is nonzero
using UPoly = std::vector<Rat>;

void utrim(UPoly& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly uderiv(const UPoly& u) {
    UPoly d;
    for (std::size_t k = 1; k < u.size(); ++k) d.push_back(u[k] * static_cast<int>(k));
    utrim(d);
    return d;
}

UPoly umod(UPoly a, const UPoly& b) {
    utrim(a);
    while (udeg(a) >= udeg(b)) {
        Rat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
        a.pop_back();
        utrim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = umod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

// number of distinct roots in the algebraic closure
int distinct_root_count(const UPoly& u) {
    int d = udeg(u);
    if (d <= 0) return 0;
    UPoly g = ugcd(u, uderiv(u));
    return d - udeg(g);
}

// binary form split as y1^e1 y2^e2 core with core coprime to y1 y2,
// core dehomogenized at y2 = 1
struct BinarySplit {
    int e1 = 0, e2 = 0;
    UPoly core;
};

BinarySplit split_binary_form(const Poly& g) {
    BinarySplit s;
    if (g.is_zero()) throw internal_error("zero form in binary split");
    s.e1 = s.e2 = 1 << 20;
    for (const auto& [a, c] : g.terms()) {
        s.e1 = std::min(s.e1, a[0]);
        s.e2 = std::min(s.e2, a[1]);
    }
    s.core.assign(static_cast<std::size_t>(g.degree()) + 1, Rat(0));
    for (const auto& [a, c] : g.terms()) s.core[a[0] - s.e1] += c;
    utrim(s.core);
    return s;
}

int distinct_projective_roots(const BinarySplit& s) {
    return distinct_root_count(s.core) + (s.e1 > 0 ? 1 : 0) + (s.e2 > 0 ? 1 : 0);
}

// ---- resultant elimination ---------------------------------------------

// coefficients by power of y3, entries keep three variables with y3 unused
std::vector<Poly> coeffs_in_var3(const Poly& f) {
    int d = 0;
    for (const auto& [a, c] : f.terms()) d = std::max(d, a[2]);
    std::vector<Poly> out(static_cast<std::size_t>(d) + 1, Poly(3));
    for (const auto& [a, c] : f.terms()) {
        MultiIndex b = a;
        int k = b[2];
        b[2] = 0;
        out[k].add_term(b, c);
    }
    return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc(m[0][0].vars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly cof = m[0][j].mul(poly_det(minor));
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

// Sylvester resultant with respect to y3; zero when the forms share a factor
Poly resultant_var3(const Poly& a, const Poly& b) {
    auto ac = coeffs_in_var3(a);
    auto bc = coeffs_in_var3(b);
    std::size_t da = ac.size() - 1, db = bc.size() - 1;
    if (da == 0 || db == 0) throw internal_error("resultant needs positive degree");
    std::size_t n = da + db;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(3)));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t k = 0; k <= da; ++k) m[r][r + k] = ac[da - k];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t k = 0; k <= db; ++k) m[db + r][r + k] = bc[db - k];
    return poly_det(m);
}

// ---- Jacobian scheme ----------------------------------------------------

std::array<Poly, 3> jacobian_generators(const DualPoly& f) {
    return {partial(f.poly(), 0), partial(f.poly(), 1), partial(f.poly(), 2)};
}

int graded_colength(const std::array<Poly, 3>& gens, int d) {
    auto cols = monomials_of_degree(3, d);
    std::map<MultiIndex, std::size_t, DegLexLess> ix;
    for (std::size_t j = 0; j < cols.size(); ++j) ix.emplace(cols[j], j);
    Mat m(0, cols.size());
    for (const Poly& g : gens)
        for (const MultiIndex& a : monomials_of_degree(3, d - 2)) {
            Poly p = g.mul(Poly::monomial(3, a));
            std::vector<Rat> row(cols.size(), Rat(0));
            for (const auto& [b, c] : p.terms()) row[ix.at(b)] = c;
            m.append_row(row);
        }
    return static_cast<int>(cols.size() - rank(m));
}

// stabilized value of the graded colength; two consecutive equal values of an
// ideal generated by three conics stay constant forever (its regularity is
// well below the scan window), so the first plateau is the answer
int stable_colength(const std::array<Poly, 3>& gens) {
    int prev = graded_colength(gens, 2);
    for (int d = 3; d <= 10; ++d) {
        int cur = graded_colength(gens, d);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw internal_error("Jacobian colength did not stabilize");
}

int point_count(const DualPoly& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto det3 = [](const Mat& m) -> Rat {
        return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    };

    int last = -1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Random coordinate frame. Two distinct singular points collide under
        // the (y1:y2) projection only when the center (0:0:1) sits on the line
        // through them, and a line through two singular points meets the cubic
        // with multiplicity four, so it is a component. Keeping the center off
        // the cubic (nonzero y3^3 coefficient after the frame change) therefore
        // rules every collision out.
        Mat m(3, 3);
        Poly moved(3);
        do {
            do {
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        m.at(i, j) = rnd(0, 1) ? rnd(1, 4) : -rnd(1, 4);
            } while (det3(m) == 0);
            std::vector<Poly> images;
            for (std::size_t i = 0; i < 3; ++i) {
                Poly im(3);
                for (std::size_t j = 0; j < 3; ++j)
                    im.add_term(MultiIndex(3).plus_var(j), m.at(i, j));
                images.push_back(im);
            }
            moved = f.poly().substituted(images);
        } while (moved.coeff(MultiIndex({0, 0, 3})) == 0);
        auto gens = jacobian_generators(DualPoly(moved));

        // three resultants of random members of the net; the common zeros of
        // the net project into the roots of every one of them, while the
        // spurious Bezout intersections of each pair vary with the pair
        bool bad = false;
        std::vector<BinarySplit> splits;
        for (int k = 0; k < 3 && !bad; ++k) {
            bool ok = false;
            for (int trial = 0; trial < 24 && !ok; ++trial) {
                Poly u(3), v(3);
                for (int i = 0; i < 3; ++i) {
                    u = u + gens[i].scaled(Rat(rnd(-3, 3)));
                    v = v + gens[i].scaled(Rat(rnd(-3, 3)));
                }
                if (u.coeff(MultiIndex({0, 0, 2})) == 0 || v.coeff(MultiIndex({0, 0, 2})) == 0)
                    continue;
                Poly r = resultant_var3(u, v);
                if (r.is_zero()) continue;
                splits.push_back(split_binary_form(r.narrowed(2)));
                ok = true;
            }
            if (!ok) bad = true;
        }
        if (bad) continue;

        BinarySplit acc = splits[0];
        for (int k = 1; k < 3; ++k) {
            acc.e1 = std::min(acc.e1, splits[k].e1);
            acc.e2 = std::min(acc.e2, splits[k].e2);
            acc.core = ugcd(acc.core, splits[k].core);
        }
        int p = distinct_projective_roots(acc);
        if (p == 0) continue; // a singular cubic has common zeros; projection was unlucky
        if (p == last) return p;
        last = p;
    }
    throw internal_error("singular point count did not stabilize");
}

} // namespace

// ---- binary cubics ----------------------------------------------------

std::string to_string(BinaryCubicClass c) {
    switch (c) {
    case BinaryCubicClass::PerfectCube: return "PerfectCube";
    case BinaryCubicClass::ThreeDistinct: return "ThreeDistinct";
    case BinaryCubicClass::DoublePlusSimple: return "DoublePlusSimple";
    }
    throw internal_error("unknown binary class");
}

Rat binary_cubic_discriminant(const DualPoly& f) {
    require_cubic(f, 2, "binary discriminant");
    Rat a = f.coeff(MultiIndex({3, 0}));
    Rat b = f.coeff(MultiIndex({2, 1}));
    Rat c = f.coeff(MultiIndex({1, 2}));
    Rat d = f.coeff(MultiIndex({0, 3}));
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

BinaryCubicClass classify_binary_cubic(const DualPoly& f) {
    require_cubic(f, 2, "binary classification");
    if (partials_rank(f) <= 1) return BinaryCubicClass::PerfectCube;
    if (binary_cubic_discriminant(f) != 0) return BinaryCubicClass::ThreeDistinct;
    return BinaryCubicClass::DoublePlusSimple;
}

// ---- ternary cubics ---------------------------------------------------

std::string to_string(TernaryCubicClass c) {
    switch (c) {
    case TernaryCubicClass::ThreeLines: return "ThreeLines";
    case TernaryCubicClass::ConicTangentLine: return "ConicTangentLine";
    case TernaryCubicClass::ConicTransversalLine: return "ConicTransversalLine";
    case TernaryCubicClass::NodalIrreducible: return "NodalIrreducible";
    case TernaryCubicClass::CuspidalIrreducible: return "CuspidalIrreducible";
    case TernaryCubicClass::EllipticFermat: return "EllipticFermat";
    case TernaryCubicClass::EllipticGeneral: return "EllipticGeneral";
    }
    throw internal_error("unknown ternary class");
}

AronholdInvariants aronhold_invariants(const DualPoly& f) {
    require_cubic(f, 3, "invariants");
    Tensor c = trilinear_tensor(f);
    AronholdInvariants out;
    out.s = kSigma * s_contraction(c);
    out.t = kTau * t_contraction(c);
    out.disc = (out.s * out.s * out.s - out.t * out.t) / 1728;
    return out;
}

Rat j_invariant(const DualPoly& f) {
    AronholdInvariants inv = aronhold_invariants(f);
    if (inv.disc == 0) throw domain_error("j-invariant requires a smooth cubic");
    return inv.s * inv.s * inv.s / inv.disc;
}

DualPoly legendre_cubic(const Rat& q) {
    if (q == 0 || q == 1)
        throw domain_error("family parameter must avoid 0 and 1 (singular member)");
    Poly p(3);
    p.add_term(MultiIndex({0, 2, 1}), Rat(1));
    p.add_term(MultiIndex({3, 0, 0}), Rat(-1));
    p.add_term(MultiIndex({2, 0, 1}), 1 + q);
    p.add_term(MultiIndex({1, 0, 2}), -q);
    return DualPoly(p);
}

std::vector<Rat> lambda_orbit(const Rat& q) {
    if (q == 0 || q == 1) throw domain_error("orbit parameter must avoid 0 and 1");
    return {q,          Rat(1) / q,  1 - q,
            Rat(1) / (1 - q), q / (q - 1), (q - 1) / q};
}

JacobianProfile jacobian_scheme_profile(const DualPoly& f, std::uint64_t seed) {
    require_cubic(f, 3, "Jacobian profile");
    if (partials_rank(f) < 3)
        throw domain_error("Jacobian profile requires all three variables essential");
    if (aronhold_invariants(f).disc != 0)
        throw domain_error("smooth cubic has an empty singular scheme");
    JacobianProfile out;
    out.colength = stable_colength(jacobian_generators(f));
    out.points = point_count(f, seed);
    return out;
}

TernaryClassification classify_ternary_cubic(const DualPoly& f, std::uint64_t seed) {
    require_cubic(f, 3, "ternary classification");
    if (partials_rank(f) < 3)
        throw domain_error("degenerate ternary cubic: fewer than three essential "
                           "variables; rewrite in fewer variables and classify there");
    AronholdInvariants inv = aronhold_invariants(f);
    TernaryClassification out;
    if (inv.disc != 0) {
        out.cls = inv.s == 0 ? TernaryCubicClass::EllipticFermat
                             : TernaryCubicClass::EllipticGeneral;
        out.j = inv.s * inv.s * inv.s / inv.disc;
        return out;
    }
    JacobianProfile pr;
    pr.colength = stable_colength(jacobian_generators(f));
    pr.points = point_count(f, seed);
    out.profile = pr;
    if (pr.colength == 1)
        out.cls = TernaryCubicClass::NodalIrreducible;
    else if (pr.colength == 2 && pr.points == 1)
        out.cls = TernaryCubicClass::CuspidalIrreducible;
    else if (pr.colength == 2 && pr.points == 2)
        out.cls = TernaryCubicClass::ConicTransversalLine;
    else if (pr.colength == 3 && pr.points == 1)
        out.cls = TernaryCubicClass::ConicTangentLine;
    else if (pr.colength == 3 && pr.points == 3)
        out.cls = TernaryCubicClass::ThreeLines;
    else
        throw internal_error("unrecognized singular profile (" +
                             std::to_string(pr.colength) + ", " +
                             std::to_string(pr.points) + ")");
    return out;
}

// ---- model table ------------------------------------------------------

std::vector<ModelRow> binary_models() {
    return {
        {"DoublePlusSimple",
         "Double point plus a simple point",
         2,
         {"x1^3", "x2^2"},
         "y1^2*y2"},
        // the three-point ideal needs x1^3 + x2^3: the difference pairs with
        // the generator to 12, so the often-printed x1^3 - x2^3 is a typo
        {"ThreeDistinct",
         "Three distinct points",
         2,
         {"x1*x2", "x1^3 + x2^3"},
         "y1^3 - y2^3"},
    };
}

std::vector<ModelRow> ternary_models() {
    return {
        {"ThreeLines",
         "Three independent lines",
         3,
         {"x1^2", "x2^2", "x3^2"},
         "y1*y2*y3"},
        {"ConicTangentLine",
         "Conic and a tangent line",
         3,
         {"x1^2", "x1*x3", "x3*x2^2", "x2^3", "x3^2 + x1*x2"},
         "y1*y2^2 - y2*y3^2"},
        {"ConicTransversalLine",
         "Conic and a non-tangent line",
         3,
         {"x1^2", "x2^2", "x3^2 + 6*x1*x2"},
         "y1*y2*y3 - y3^3"},
        {"NodalIrreducible",
         "Irreducible nodal cubic",
         3,
         {"x3^2", "x1*x2", "x1^2 + x2^2 - 3*x1*x3"},
         "y2^2*y3 - y1^3 - y1^2*y3"},
        {"CuspidalIrreducible",
         "Irreducible cuspidal cubic",
         3,
         {"x3^2", "x1*x2", "x1*x3", "x2^3", "x1^3 + 3*x2^2*x3"},
         "y2^2*y3 - y1^3"},
        {"EllipticFermat",
         "Elliptic Fermat curve",
         3,
         {"x2*x3", "x1*x3", "x1*x2", "x2^3 - x3^3", "x1^3 - x3^3"},
         "y1^3 + y2^3 + y3^3"},
    };
}

ModelRow legendre_model(const Rat& q) {
    ModelRow row;
    row.class_name = "EllipticGeneral";
    row.geometry = "Elliptic non Fermat curve";
    row.vars = 3;
    Poly h1(3);
    h1.add_term(MultiIndex({2, 0, 0}), q * q);
    h1.add_term(MultiIndex({1, 0, 1}), q * (1 + q));
    h1.add_term(MultiIndex({0, 0, 2}), q * q - q + 1);
    Poly h2(3);
    h2.add_term(MultiIndex({0, 2, 0}), q * q);
    h2.add_term(MultiIndex({1, 0, 1}), q);
    h2.add_term(MultiIndex({0, 0, 2}), 1 + q);
    row.ideal_gens = {"x1*x2", print_poly(h1, Side::series), print_poly(h2, Side::series)};
    row.dual_generator = print_poly(legendre_cubic(q));
    return row;
}

std::vector<ModelRow> model_table() {
    std::vector<ModelRow> all = binary_models();
    auto t = ternary_models();
    all.insert(all.end(), t.begin(), t.end());
    return all;
}

} // namespace cubics
} // namespace apolar
