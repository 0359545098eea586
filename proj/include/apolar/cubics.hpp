#pragma once

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apolar {
namespace cubics {

// ---- binary cubics ----------------------------------------------------

enum class BinaryCubicClass {
    PerfectCube,      // rank-one contraction matrix; Hessian vanishes
    ThreeDistinct,    // nonzero discriminant
    DoublePlusSimple, // discriminant zero, not a cube
};

std::string to_string(BinaryCubicClass c);

// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 for a y1^3 + b y1^2 y2 + c y1 y2^2 + d y2^3.
Rat binary_cubic_discriminant(const DualPoly& f);

BinaryCubicClass classify_binary_cubic(const DualPoly& f);

// ---- ternary cubics ---------------------------------------------------

enum class TernaryCubicClass {
    ThreeLines,
    ConicTangentLine,
    ConicTransversalLine,
    NodalIrreducible,
    CuspidalIrreducible,
    EllipticFermat,  // smooth, j = 0
    EllipticGeneral, // smooth, j != 0
};

std::string to_string(TernaryCubicClass c);

// Degree-4 and degree-6 invariants of a ternary cubic and the degree-12
// discriminant combination (S^3 - T^2)/1728. Normalization is frozen by two
// calibration constraints: on the one-parameter cubic family below,
// S = 16(q^2-q+1) and disc = 16 q^2 (q-1)^2, so j = S^3/disc matches
// 2^8 (q^2-q+1)^3 / (q^2 (q-1)^2). Under y -> M y, S and T scale by
// det(M)^4 and det(M)^6.
struct AronholdInvariants {
    Rat s;
    Rat t;
    Rat disc;
};

AronholdInvariants aronhold_invariants(const DualPoly& f);

// j = S^3/disc; rejects singular cubics (disc = 0).
Rat j_invariant(const DualPoly& f);

// y2^2 y3 - y1 (y1 - y3)(y1 - q y3), the pencil covering every smooth
// plane cubic up to projective equivalence; singular exactly at q in {0,1}.
DualPoly legendre_cubic(const Rat& q);

// The six fractional-linear images {q, 1/q, 1-q, 1/(1-q), q/(q-1), (q-1)/q}
// sharing one j value. Requires q not in {0,1}.
std::vector<Rat> lambda_orbit(const Rat& q);

// (c, p) for a singular nondegenerate cubic: c = stabilized graded colength
// of the partial-derivative ideal, p = number of distinct singular points.
// The point count projects to a binary form by a seeded random frame and
// counts distinct roots of the squarefree part; unlucky frames are detected
// (vanishing resultant, missing leading term, disagreement between frames)
// and retried.
struct JacobianProfile {
    int colength = 0;
    int points = 0;
};

inline constexpr std::uint64_t kDefaultProfileSeed = 0x5eed5eedULL;

JacobianProfile jacobian_scheme_profile(const DualPoly& f,
                                        std::uint64_t seed = kDefaultProfileSeed);

struct TernaryClassification {
    TernaryCubicClass cls;
    std::optional<Rat> j;                    // present on smooth cubics
    std::optional<JacobianProfile> profile;  // present on singular cubics
};

// Full decision tree: discriminant splits smooth from singular; S splits the
// smooth classes; the Jacobian profile splits the singular ones. Requires a
// nondegenerate form (all three variables essential).
TernaryClassification classify_ternary_cubic(const DualPoly& f,
                                             std::uint64_t seed = kDefaultProfileSeed);

// ---- model table ------------------------------------------------------

// Apolarity models: an ideal given by generators and the dual cubic it
// annihilates, one row per classification class.
struct ModelRow {
    std::string class_name;
    std::string geometry;
    std::size_t vars;
    std::vector<std::string> ideal_gens; // x-side polynomial texts
    std::string dual_generator;          // y-side polynomial text
};

std::vector<ModelRow> binary_models();
std::vector<ModelRow> ternary_models(); // fixed rows; the j != 0 family is below
ModelRow legendre_model(const Rat& q);  // EllipticGeneral member at parameter q
std::vector<ModelRow> model_table();    // all fixed rows

} // namespace cubics
} // namespace apolar
