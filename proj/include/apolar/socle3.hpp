#pragma once

#include "apolar/cubics.hpp"
#include "apolar/invsys.hpp"
#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"
#include "apolar/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apolar {
namespace socle3 {

// ---- contraction matrix of a cubic --------------------------------------

// Rows = variables, columns = degree-two monomials in basis-list order;
// entry (j, i) is the dual coefficient of f at i + e_j, i.e. the coordinate
// matrix of the map (linear forms) -> (x_j . f). Rank counts the essential
// variables of the cubic.
struct DeltaMatrix {
    std::vector<MultiIndex> col_labels;
    Mat mat;
    std::size_t rank = 0;
};

DeltaMatrix delta_matrix(const DualPoly& f3);

// all variables essential: rank equals the variable count
bool is_nondegenerate_cubic(const DualPoly& f3);

// Invertible frame A such that f3(A y) involves only the first rank(delta)
// variables; the trailing columns span the kernel of c -> (sum c_j x_j) . f3
// and the leading ones are unit vectors completing them, chosen greedily in
// index order.
Mat essential_frame(const DualPoly& f3);

// ---- substitution maps ---------------------------------------------------

// Endomorphism of R/M^(s+1) sending x_j to a polynomial with zero constant
// term; an automorphism iff the degree-one coefficient matrix is invertible.
class AutMap {
public:
    AutMap() = default;
    explicit AutMap(std::vector<JetElement> images);

    static AutMap identity(std::size_t vars, int socle_bound);
    // x_j -> sum_i lin(i, j) x_i
    static AutMap linear(const Mat& lin, int socle_bound);

    std::size_t vars() const { return images_.size(); }
    int socle_bound() const { return socle_; }
    const JetElement& image(std::size_t j) const { return images_[j]; }

    Mat linear_part() const;
    bool invertible() const;

    JetElement apply(const JetElement& g) const;
    Poly apply_truncated(const Poly& p) const; // substitution, cut at the bound

    // composite map g -> next(this(g))
    AutMap then(const AutMap& next) const;
    AutMap inverse() const;

    bool operator==(const AutMap& o) const;

private:
    std::vector<JetElement> images_;
    int socle_ = 0;
};

// matrix of phi on the monomial basis of R/M^(s+1): column a holds the
// coefficients of phi(x^a)
Mat aut_matrix(const AutMap& phi);

// matrix of g -> u . g on the dual in divided-power coordinates
Mat unit_matrix(const JetElement& u);

// image of a truncated ideal (or any x-side subspace) under the substitution
Subspace transport_subspace(const AutMap& phi, const Subspace& v);

// ---- isomorphism witnesses -----------------------------------------------

// Certificate for an isomorphism of apolar algebras: the pair acts on dual
// elements by g -> phi^*(unit . g), and "w certifies f == transport of g"
// is exactly what verify_iso checks. On the x side the same data transports
// Ann(f) onto Ann(g) through phi.
struct IsoWitness {
    AutMap phi;
    JetElement unit;

    std::size_t vars() const { return unit.vars(); }
    int socle_bound() const { return unit.socle_bound(); }
};

IsoWitness identity_witness(std::size_t vars, int socle_bound);

// transport(compose(a, b), g) = transport(a, transport(b, g))
IsoWitness compose(const IsoWitness& outer, const IsoWitness& inner);
IsoWitness invert(const IsoWitness& w);

DualPoly dual_transport(const IsoWitness& w, const DualPoly& g);

// checks f == transport(w, g), then cross-checks that phi carries Ann(f)
// onto Ann(g) (the two conditions are equivalent up to unit choice; a
// passing first check with a failing second indicates internal breakage)
bool verify_iso(const DualPoly& f, const DualPoly& g, const IsoWitness& w);

// unit u with u . from == to, when the two generate the same module
std::optional<JetElement> find_unit(const DualPoly& from, const DualPoly& to,
                                    int socle_bound);

// ---- reduction and grading ------------------------------------------------

// Strips the linear and constant part: reduced = f - f_1 - f_0 together with
// the unit certifying unit . reduced = f. A nondegenerate top form guarantees
// the stripped polynomial spans the same contraction module; the span
// equality is checked anyway and "no reduction" is raised when it fails.
struct Reduction {
    DualPoly reduced;
    JetElement unit;
};

Reduction reduce_to_quadratic_cubic(const DualPoly& f);

// Linear system expressing, for a substitution x_j -> x_j + q_j with q_j
// quadratic in the first n variables (n = variable count of f3, j running
// over all m ambient variables), the degree-two dual coordinates of
// phi^*(f3) - f3 (the correction is linear in the q coefficients and exact).
// Rows: degree-two monomials in m variables touching the first n, basis-list
// order. Columns: unknowns a^j_i indexed by (j, i) = (variable receiving the
// correction, quadratic monomial in the first n variables), j-major.
// Entry at row e_u + e_v, column (j, i):
//   [j == u] alpha(i + e_v) + [j == v] alpha(i + e_u),
// alpha = dual coefficients of f3; for u == v == j the two terms add up.
// Nondegenerate f3 makes the rank full: binom(n+1,2) + n(m-n) rows.
struct GradingSystem {
    std::vector<MultiIndex> row_labels;
    std::vector<std::pair<std::size_t, MultiIndex>> col_labels;
    Mat mat;
};

GradingSystem grading_system(const DualPoly& f3, std::size_t m);

// Substitution phi on f2.vars() variables solving phi^*(f3 + f2') = f3 + f2
// exactly, where f2' is the part of f2 not touching the first n variables;
// free coefficients are set to zero. Nullopt when the system is incompatible
// (never for nondegenerate f3).
std::optional<AutMap> solve_grading(const DualPoly& f3, const DualPoly& f2);

// ---- canonical grading -----------------------------------------------------

// For HF {1,n,n,1}: witness certifying f == transport(w, model) where model
// is the cubic top form of f itself. Such an algebra is canonically graded:
// the witness exhibits the isomorphism with its associated graded algebra.
// When every variable is essential the substitution has the special shape
// x_j + (quadratic correction); extra variables add frame and tail factors.
struct CanonicalGrading {
    IsoWitness witness;
    DualPoly model;
    std::size_t essential_vars = 0;
};

CanonicalGrading canonical_grading_witness(const DualPoly& f);

// ---- normal form, Hilbert function {1,m,n,1} -------------------------------

// f is carried to g3 + sum_i lambda_i y_{n+i}^2 with g3 a nondegenerate
// cubic in the first n variables and every lambda nonzero; the witness
// certifies f == transport(w, normal_form). Over the rationals the lambdas
// are determined up to squares, so they are kept as found rather than
// scaled to one.
struct NormalForm {
    std::size_t essential_vars = 0; // n
    DualPoly cubic_part;            // g3, written in its n essential variables
    std::vector<Rat> lambdas;       // m - n nonzero square-class coefficients
    DualPoly normal_form;           // g3 + sum lambda_i y_{n+i}^2, m variables
    IsoWitness witness;
};

NormalForm normalize_socle3(const DualPoly& f);

// ---- isomorphism decision ---------------------------------------------------

enum class IsoStatus { isomorphic, not_isomorphic, undecided };

std::string to_string(IsoStatus s);

struct IsoDecision {
    IsoStatus status = IsoStatus::undecided;
    std::vector<int> hf_left, hf_right;
    std::string detail; // invariants the decision rests on
};

// Decides isomorphism of the two apolar algebras after extension to the
// algebraic closure. Hilbert functions must match; for cubic essential rank
// n <= 3 the class (and j) of the essential top form decides, for n >= 4
// the answer is undecided and the detail reports the comparable invariants.
IsoDecision iso_socle3(const DualPoly& f, const DualPoly& g,
                       std::uint64_t seed = cubics::kDefaultProfileSeed);

} // namespace socle3
} // namespace apolar
