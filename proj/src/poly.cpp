#include "apolar/poly.hpp"

#include "apolar/errors.hpp"

#include <algorithm>

namespace apolar {

Poly Poly::monomial(std::size_t vars, const MultiIndex& a, const Rat& c) {
    Poly p(vars);
    p.add_term(a, c);
    return p;
}

Poly Poly::constant(std::size_t vars, const Rat& c) {
    return monomial(vars, MultiIndex(vars), c);
}

Poly Poly::variable(std::size_t vars, std::size_t j) {
    if (j >= vars) throw internal_error("variable index out of range");
    return monomial(vars, MultiIndex(vars).plus_var(j), 1);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
}

Rat Poly::coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const MultiIndex& a, const Rat& c) {
    if (c == 0) return;
    if (a.vars() != vars_) throw internal_error("term arity mismatch");
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (vars_ != o.vars_) throw internal_error("polynomial arity mismatch");
    Poly r(*this);
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (vars_ != o.vars_) throw internal_error("polynomial arity mismatch");
    Poly r(*this);
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

Poly Poly::operator-() const {
    return scaled(Rat(-1));
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [a, v] : terms_) r.terms_.emplace(a, v * c);
    return r;
}

Poly Poly::mul(const Poly& o, int degree_cap) const {
    if (vars_ != o.vars_) throw internal_error("polynomial arity mismatch");
    Poly r(vars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            if (degree_cap >= 0 && a.degree() + b.degree() > degree_cap) continue;
            r.add_term(a.plus(b), ca * cb);
        }
    return r;
}

Poly Poly::homogeneous_part(int d) const {
    Poly r(vars_);
    for (const auto& [a, c] : terms_)
        if (a.degree() == d) r.add_term(a, c);
    return r;
}

Poly Poly::parts_below(int d) const {
    Poly r(vars_);
    for (const auto& [a, c] : terms_)
        if (a.degree() < d) r.add_term(a, c);
    return r;
}

Poly Poly::truncated(int degree_cap) const {
    Poly r(vars_);
    for (const auto& [a, c] : terms_)
        if (a.degree() <= degree_cap) r.add_term(a, c);
    return r;
}

Poly Poly::widened(std::size_t vars) const {
    if (vars < vars_) throw internal_error("widened to fewer variables");
    Poly r(vars);
    for (const auto& [a, c] : terms_) {
        std::vector<int> e = a.exponents();
        e.resize(vars, 0);
        r.add_term(MultiIndex(std::move(e)), c);
    }
    return r;
}

Poly Poly::narrowed(std::size_t vars) const {
    if (vars > vars_) throw internal_error("narrowed to more variables");
    Poly r(vars);
    for (const auto& [a, c] : terms_) {
        for (std::size_t i = vars; i < vars_; ++i)
            if (a[i] != 0) throw internal_error("narrowed polynomial uses a dropped variable");
        std::vector<int> e(a.exponents().begin(), a.exponents().begin() + vars);
        r.add_term(MultiIndex(std::move(e)), c);
    }
    return r;
}

Poly Poly::substituted(const std::vector<Poly>& images, int degree_cap) const {
    if (images.size() != vars_) throw internal_error("substitution image count mismatch");
    const std::size_t out_vars = images.empty() ? vars_ : images[0].vars();
    // Power cache: images[j]^k for the exponents that actually occur.
    std::vector<std::vector<Poly>> powers(vars_);
    for (std::size_t j = 0; j < vars_; ++j)
        powers[j].push_back(Poly::constant(out_vars, 1));
    auto power = [&](std::size_t j, int k) -> const Poly& {
        while (static_cast<int>(powers[j].size()) <= k)
            powers[j].push_back(powers[j].back().mul(images[j], degree_cap));
        return powers[j][k];
    };
    Poly r(out_vars);
    for (const auto& [a, c] : terms_) {
        Poly term = Poly::constant(out_vars, c);
        for (std::size_t j = 0; j < vars_; ++j)
            if (a[j] != 0) term = term.mul(power(j, a[j]), degree_cap);
        r = r + term;
    }
    return r;
}

Rat DualPoly::dual_coeff(const MultiIndex& b) const {
    return coeff(b) * Rat(mi_factorial(b));
}

DualPoly DualPoly::from_dual_coeffs(std::size_t vars,
                                    const std::vector<std::pair<MultiIndex, Rat>>& coeffs) {
    Poly p(vars);
    for (const auto& [b, c] : coeffs) p.add_term(b, c / Rat(mi_factorial(b)));
    return DualPoly(std::move(p));
}

DualPoly DualPoly::top_form() const {
    return DualPoly(p_.homogeneous_part(p_.degree()));
}

JetElement::JetElement(Poly p, int socle_bound) : p_(std::move(p)), socle_(socle_bound) {
    if (socle_ < 0) throw internal_error("negative socle bound");
    if (p_.degree() > socle_) throw domain_error("jet exceeds its socle bound");
}

JetElement JetElement::one(std::size_t vars, int socle_bound) {
    return JetElement(Poly::constant(vars, 1), socle_bound);
}

JetElement JetElement::operator+(const JetElement& o) const {
    if (socle_ != o.socle_) throw internal_error("jet socle bound mismatch");
    return JetElement(p_ + o.p_, socle_);
}

JetElement JetElement::operator-(const JetElement& o) const {
    if (socle_ != o.socle_) throw internal_error("jet socle bound mismatch");
    return JetElement(p_ - o.p_, socle_);
}

JetElement JetElement::mul(const JetElement& o) const {
    if (socle_ != o.socle_) throw internal_error("jet socle bound mismatch");
    return JetElement(p_.mul(o.p_, socle_), socle_);
}

JetElement JetElement::inverse() const {
    const Rat c0 = constant_term();
    if (c0 == 0) throw domain_error("inverse of a non-unit jet");
    // u = c0 (1 + v), u^-1 = c0^-1 (1 - v + v^2 - ...), nilpotency bounds the sum.
    Poly v = p_.scaled(1 / c0);
    v.add_term(MultiIndex(p_.vars()), Rat(-1)); // v = u/c0 - 1
    Poly acc = Poly::constant(p_.vars(), 1);
    Poly pow = Poly::constant(p_.vars(), 1);
    for (int k = 1; k <= socle_; ++k) {
        pow = pow.mul(v, socle_);
        if (pow.is_zero()) break;
        acc = (k % 2 == 1) ? acc - pow : acc + pow;
    }
    return JetElement(acc.scaled(1 / c0), socle_);
}

DualPoly contract(const Poly& f, const DualPoly& g) {
    if (f.vars() != g.vars()) throw internal_error("contraction arity mismatch");
    Poly r(g.vars());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.poly().terms()) {
            if (!a.divides(b)) continue;
            r.add_term(b.minus(a), ca * cb * Rat(mi_falling(b, a)));
        }
    return DualPoly(std::move(r));
}

DualPoly contract(const JetElement& f, const DualPoly& g) {
    return contract(f.poly(), g);
}

Rat pairing(const Poly& f, const DualPoly& g) {
    return contract(f, g).coeff(MultiIndex(g.vars()));
}

// ---- parsing ----------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
};

Int parse_uint(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.i;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
    if (cur.i == start) throw parse_error("expected a number", start);
    return Int(cur.s.substr(start, cur.i - start));
}

Rat parse_coeff(Cursor& cur) {
    Int num = parse_uint(cur);
    if (cur.eat('/')) {
        std::size_t den_pos = cur.i;
        Int den = parse_uint(cur);
        if (den == 0) throw parse_error("zero denominator", den_pos);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    return Rat(num);
}

// Returns the 0-based variable index, updating the highest index seen.
std::size_t parse_var(Cursor& cur, Side side, std::size_t& max_var) {
    cur.skip_ws();
    const std::size_t pos = cur.i;
    const char want = side == Side::series ? 'x' : 'y';
    const char other = side == Side::series ? 'y' : 'x';
    char c = cur.peek();
    if (c == other)
        throw parse_error(std::string("variable '") + other + "' on the wrong side, expected '" +
                              want + "'",
                          pos);
    if (c != want) throw parse_error(std::string("expected variable '") + want + "'", pos);
    ++cur.i;
    std::size_t idx = 1;
    if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        char d = cur.s[cur.i];
        if (d == '0') throw parse_error("variable indices run from 1 to 9", cur.i);
        idx = static_cast<std::size_t>(d - '0');
        ++cur.i;
    }
    max_var = std::max(max_var, idx);
    return idx - 1;
}

int parse_exponent(Cursor& cur) {
    if (!cur.eat('^')) return 1;
    std::size_t pos = cur.i;
    Int e = parse_uint(cur);
    if (e > 64) throw parse_error("exponent too large", pos);
    return static_cast<int>(e.get_si());
}

bool at_var(Cursor& cur) {
    char c = cur.peek();
    return c == 'x' || c == 'y';
}

} // namespace

ParsedPoly parse_poly(const std::string& text, Side side,
                      std::optional<std::size_t> vars_override) {
    Cursor cur{text};
    std::size_t max_var = 0;
    // Terms are collected with exponent lists at the maximal arity 9 and
    // narrowed afterwards, so the variable count can be inferred in one pass.
    constexpr std::size_t kMaxVars = 9;
    Poly acc(kMaxVars);

    bool first = true;
    while (true) {
        if (cur.done()) {
            if (first) throw parse_error("empty polynomial", cur.i);
            break;
        }
        int sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (cur.eat('+')) {
            if (first) {
                // leading plus is fine
            }
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms", cur.i);
        }
        first = false;

        cur.skip_ws();
        Rat coeff = sign;
        bool have_coeff = false;
        if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
            coeff = parse_coeff(cur) * sign;
            have_coeff = true;
        }
        MultiIndex mono{kMaxVars};
        bool have_var = false;
        if (have_coeff) {
            bool star = cur.eat('*');
            if (star || at_var(cur)) {
                if (star && !at_var(cur)) throw parse_error("expected a variable after '*'", cur.i);
                have_var = true;
            }
        } else {
            if (!at_var(cur)) throw parse_error("expected a coefficient or a variable", cur.i);
            have_var = true;
        }
        if (have_var) {
            while (true) {
                std::size_t j = parse_var(cur, side, max_var);
                int e = parse_exponent(cur);
                mono[j] += e;
                bool star = cur.eat('*');
                if (star) {
                    if (!at_var(cur)) throw parse_error("expected a variable after '*'", cur.i);
                    continue;
                }
                if (at_var(cur)) continue; // juxtaposition
                break;
            }
        }
        acc.add_term(mono, coeff);
    }

    std::size_t vars = max_var;
    if (vars_override) {
        if (*vars_override < max_var)
            throw parse_error("variable override smaller than a used variable index", 0);
        if (*vars_override > kMaxVars)
            throw parse_error("at most 9 variables are supported", 0);
        vars = *vars_override;
    }
    if (vars == 0) vars = 1; // constants live in one variable by default
    return ParsedPoly{acc.narrowed(vars), max_var};
}

DualPoly parse_dual(const std::string& text, std::optional<std::size_t> vars_override) {
    return DualPoly(parse_poly(text, Side::dual, vars_override).poly);
}

JetElement parse_jet(const std::string& text, int socle_bound,
                     std::optional<std::size_t> vars_override) {
    Poly p = parse_poly(text, Side::series, vars_override).poly;
    if (p.degree() > socle_bound)
        throw domain_error("polynomial of degree " + std::to_string(p.degree()) +
                           " exceeds socle bound " + std::to_string(socle_bound));
    return JetElement(std::move(p), socle_bound);
}

// ---- printing ---------------------------------------------------------

std::string print_poly(const Poly& p, Side side) {
    if (p.is_zero()) return "0";
    // Descending degree; basis-list order inside a degree.
    std::vector<std::pair<MultiIndex, Rat>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
        return deglex_less(a.first, b.first);
    });
    const char letter = side == Side::series ? 'x' : 'y';
    std::string out;
    bool first = true;
    for (const auto& [a, c] : terms) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool is_const = a.degree() == 0;
        if (abs != 1 || is_const) {
            out += rat_to_string(abs);
            if (!is_const) out += "*";
        }
        bool first_factor = true;
        for (std::size_t j = 0; j < a.vars(); ++j) {
            if (a[j] == 0) continue;
            if (!first_factor) out += "*";
            first_factor = false;
            out += letter;
            out += static_cast<char>('1' + j);
            if (a[j] > 1) {
                out += "^";
                out += std::to_string(a[j]);
            }
        }
    }
    return out;
}

std::string print_poly(const DualPoly& p) {
    return print_poly(p.poly(), Side::dual);
}

std::string print_poly(const JetElement& p) {
    return print_poly(p.poly(), Side::series);
}

} // namespace apolar
