#pragma once

#include "apolar/poly.hpp"
#include "apolar/subspace.hpp"

#include <optional>
#include <vector>

namespace apolar {
namespace invsys {

// Span of F and all its iterated contractions x^a . F, the finite-dimensional
// module the quotient algebra is dual to. dim = multiplicity of R/Ann(F).
Subspace derivative_span(const DualPoly& f);

// Hilbert function of R/Ann(F) read off the filtration of the span by
// degree: HF(i) = dim (V cap P_<=i + P_<i) / P_<i with V the span.
// Index runs 0..deg F; HF(0) = 1 for F != 0.
std::vector<int> hilbert_function(const DualPoly& f);

// Same filtration count for an arbitrary stable subspace (used for
// ideal-presented algebras, where V = perp of the ideal).
std::vector<int> hilbert_function_of(const Subspace& v);

// Ann_R(F) truncated at degree <= socle_bound. The ideal implicitly contains
// every polynomial of degree > socle_bound; kbasis lists only the part that
// is visible below the bound, and min_gens is a minimal generating set of
// the ideal modulo that implicit tail.
struct IdealDescription {
    std::size_t vars = 0;
    int socle_bound = 0;
    Subspace kbasis;             // x-side subspace: all f, deg f <= bound, f.F = 0
    std::vector<Poly> min_gens;  // basis of I/(m I + tail), deterministic representatives
};

IdealDescription annihilator(const DualPoly& f, std::optional<int> socle_bound = std::nullopt);

// perp(gens) = { g of degree <= socle_bound : gi . g = 0 for all i }.
// Checking only the listed generators suffices: (h gi) . g = h . (gi . g).
Subspace perp(const std::vector<Poly>& gens, int socle_bound, std::size_t vars);

// Equality of the two generated ideals, both taken together with the
// implicit degree > socle_bound tail: compared via their perps.
bool ideal_equal(const std::vector<Poly>& gens1, const std::vector<Poly>& gens2,
                 int socle_bound, std::size_t vars);

// V is an inverse system iff it is closed under all partial contractions.
bool is_stable_subspace(const Subspace& v);

struct GorensteinInfo {
    bool gorenstein = false;
    std::size_t socle_dim = 0;              // dim (0 : m) of the quotient
    std::optional<DualPoly> dual_generator; // cyclic generator when Gorenstein
};

// Socle of the algebra dual to the stable subspace v.
GorensteinInfo gorenstein_info(const Subspace& v);

// Cached view of one Artinian quotient, constructible from either side of
// the duality. socle_bound caps every truncation.
struct AlgebraPresentation {
    std::size_t vars = 0;
    int socle_bound = 0;
    Subspace dual_module; // perp of the ideal / derivative span of F
    std::vector<int> hf;
    std::size_t multiplicity = 0;
    std::size_t embedding_dim = 0; // HF(1)
    int socle_degree = 0;          // largest i with HF(i) > 0
    GorensteinInfo socle;
};

AlgebraPresentation algebra_from_dual(const DualPoly& f);
AlgebraPresentation algebra_from_ideal(const std::vector<Poly>& gens, int socle_bound,
                                       std::size_t vars);

// Associated-graded degree-0 slice: the subalgebra presented by the top form
// of F. For socle degree 3 this is the quotient the isomorphism tests use.
AlgebraPresentation top_form_quotient(const DualPoly& f);

// True iff the Hilbert function of R/Ann(F) is a palindrome; equivalent to
// the quotient being isomorphic to its associated graded algebra.
bool symmetric_hf_criterion(const DualPoly& f);

} // namespace invsys
} // namespace apolar
