#pragma once

#include "apolar/multiindex.hpp"
#include "apolar/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

// Which polynomial ring a text or value lives in: the series side acts by
// differentiation (variables x1..x9), the dual side is acted upon
// (variables y1..y9).
enum class Side { series, dual };

// Sparse polynomial over Rat with a fixed variable count. Zero coefficients
// are never stored. Used for both sides; DualPoly/JetElement below add the
// side-specific invariants.
class Poly {
public:
    using Terms = std::map<MultiIndex, Rat, DegLexLess>;

    Poly() : vars_(0) {}
    explicit Poly(std::size_t vars) : vars_(vars) {}

    static Poly monomial(std::size_t vars, const MultiIndex& a, const Rat& c = 1);
    static Poly constant(std::size_t vars, const Rat& c);
    static Poly variable(std::size_t vars, std::size_t j);

    std::size_t vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for the zero polynomial
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const MultiIndex& a) const;
    void add_term(const MultiIndex& a, const Rat& c); // accumulates, drops zeros

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    Poly mul(const Poly& o, int degree_cap = -1) const; // cap < 0: no truncation

    Poly homogeneous_part(int d) const;
    Poly parts_below(int d) const; // all terms of degree < d
    Poly truncated(int degree_cap) const;

    // Renumbers into a ring with more variables (same exponents, zeros added).
    Poly widened(std::size_t vars) const;
    // Drops trailing variables; requires that none of them occur.
    Poly narrowed(std::size_t vars) const;

    // y_j -> sum_i images[j], an arbitrary substitution. The degree cap, when
    // nonnegative, truncates the result (used for jet substitution).
    Poly substituted(const std::vector<Poly>& images, int degree_cap = -1) const;

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

private:
    std::size_t vars_;
    Terms terms_;
};

// Element of the dual polynomial space (y side), plain monomial-basis
// storage. The divided-power (dual-basis) coordinates are a view:
// dual_coeff(b) = b! * coeff(b).
class DualPoly {
public:
    DualPoly() = default;
    explicit DualPoly(Poly p) : p_(std::move(p)) {}

    std::size_t vars() const { return p_.vars(); }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.degree(); }

    Rat coeff(const MultiIndex& b) const { return p_.coeff(b); }
    Rat dual_coeff(const MultiIndex& b) const;
    static DualPoly from_dual_coeffs(std::size_t vars,
                                     const std::vector<std::pair<MultiIndex, Rat>>& coeffs);

    DualPoly top_form() const; // highest homogeneous part
    DualPoly homogeneous_part(int d) const { return DualPoly(p_.homogeneous_part(d)); }
    DualPoly widened(std::size_t vars) const { return DualPoly(p_.widened(vars)); }

    DualPoly operator+(const DualPoly& o) const { return DualPoly(p_ + o.p_); }
    DualPoly operator-(const DualPoly& o) const { return DualPoly(p_ - o.p_); }
    DualPoly scaled(const Rat& c) const { return DualPoly(p_.scaled(c)); }
    bool operator==(const DualPoly& o) const { return p_ == o.p_; }

private:
    Poly p_;
};

// Element of R/M^(s+1) (x side): a polynomial of degree <= socle_bound,
// multiplication truncates above the bound.
class JetElement {
public:
    JetElement() : socle_(0) {}
    JetElement(Poly p, int socle_bound);

    static JetElement one(std::size_t vars, int socle_bound);

    std::size_t vars() const { return p_.vars(); }
    int socle_bound() const { return socle_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.degree(); }
    Rat constant_term() const { return p_.coeff(MultiIndex(p_.vars())); }
    bool is_unit() const { return constant_term() != 0; }

    JetElement operator+(const JetElement& o) const;
    JetElement operator-(const JetElement& o) const;
    JetElement scaled(const Rat& c) const { return JetElement(p_.scaled(c), socle_); }
    JetElement mul(const JetElement& o) const;

    // Multiplicative inverse in R/M^(s+1); requires a unit.
    JetElement inverse() const;

    JetElement widened(std::size_t vars) const { return JetElement(p_.widened(vars), socle_); }

    bool operator==(const JetElement& o) const { return socle_ == o.socle_ && p_ == o.p_; }

private:
    Poly p_;
    int socle_;
};

// Contraction action of the series side on the dual side: on monomials
// x^a . y^b = (b!/(b-a)!) y^(b-a) when a <= b componentwise, else 0;
// extended bilinearly. This is differentiation: f . g = f(d/dy1,...)(g).
DualPoly contract(const Poly& f, const DualPoly& g);
DualPoly contract(const JetElement& f, const DualPoly& g);

// <f, g> = (f . g)(0).
Rat pairing(const Poly& f, const DualPoly& g);

// ---- text grammar ----------------------------------------------------
//
//   poly   := [sign] term (('+'|'-') term)*
//   term   := coeff ['*' factors] | factors
//   coeff  := int ['/' int]
//   factors:= var ['^' int] ('*' var ['^' int])*
//   var    := ('x'|'y') [1-9]     (bare x/y mean x1/y1)
//
// Whitespace is ignored; '*' between factors may be omitted. The variable
// letter must match the requested side.

struct ParsedPoly {
    Poly poly;
    std::size_t vars_seen; // highest variable index that occurred
};

// Parses with the ring inferred from the highest-indexed variable, unless
// vars_override fixes a (not smaller) count. Throws parse_error.
ParsedPoly parse_poly(const std::string& text, Side side,
                      std::optional<std::size_t> vars_override = std::nullopt);

DualPoly parse_dual(const std::string& text,
                    std::optional<std::size_t> vars_override = std::nullopt);
JetElement parse_jet(const std::string& text, int socle_bound,
                     std::optional<std::size_t> vars_override = std::nullopt);

// Canonical rendering: terms by descending degree (basis-list order inside a
// degree), exact coefficients, explicit '*', e.g. "y1^3 - y2^3 + 1/2*y1^2".
std::string print_poly(const Poly& p, Side side);
std::string print_poly(const DualPoly& p);
std::string print_poly(const JetElement& p);

} // namespace apolar
