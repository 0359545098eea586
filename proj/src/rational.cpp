#include "apolar/rational.hpp"

#include "apolar/errors.hpp"

#include <cctype>

namespace apolar {

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r = 1;
    Rat b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw parse_error("empty number", 0);
    std::size_t i = 0;
    auto expect_digits = [&](std::size_t from) {
        std::size_t j = from;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j])))
            throw parse_error("expected digits", j);
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    i = expect_digits(0);
    if (i < text.size()) {
        if (text[i] != '/') throw parse_error("unexpected character in number", i);
        i = expect_digits(i + 1);
        if (i != text.size()) throw parse_error("trailing characters after number", i);
    }
    Rat q;
    if (q.set_str(text, 10) != 0) throw parse_error("malformed number", 0);
    if (q.get_den() == 0) throw parse_error("zero denominator", text.find('/') + 1);
    q.canonicalize();
    return q;
}

} // namespace apolar
