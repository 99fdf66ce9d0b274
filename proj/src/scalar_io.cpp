#include "cartanlab/scalar_io.hpp"

#include <cctype>
#include <cstdlib>

namespace cartanlab {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
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

    std::string digits() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected digits", start);
        return std::string(s.substr(start, i - start));
    }

    long long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        const std::size_t at = i;
        const std::string d = digits();
        errno = 0;
        const long long v = std::strtoll(d.c_str(), nullptr, 10);
        if (errno != 0) throw ParseError("integer out of range", at);
        return neg ? -v : v;
    }
};

} // namespace

Rational parse_rational(std::string_view text) {
    Cursor c{text};
    bool neg = c.eat('-');
    mpz_class num(c.digits());
    mpz_class den(1);
    if (c.eat('/')) den = mpz_class(c.digits());
    if (!c.done()) throw ParseError("trailing characters after rational", c.i);
    if (den == 0) throw ParseError("zero denominator", 0);
    if (neg) num = -num;
    return Rational(num, den);
}

LaurentPoly parse_laurent(std::string_view text, std::uint64_t p) {
    Cursor c{text};
    LaurentPoly out(p);
    bool first = true;
    while (true) {
        c.skip_ws();
        bool neg = false;
        if (c.peek() == '+' || c.peek() == '-') {
            neg = c.eat('-');
            if (!neg) c.eat('+');
        } else if (!first) {
            break;
        }
        first = false;

        std::uint64_t coeff = 1;
        bool saw_coeff = false;
        c.skip_ws();
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            const std::size_t at = c.i;
            const std::string d = c.digits();
            errno = 0;
            coeff = std::strtoull(d.c_str(), nullptr, 10);
            if (errno != 0) throw ParseError("coefficient out of range", at);
            if (coeff >= p) throw ParseError("coefficient not in [0, " + std::to_string(p) + ")", at);
            saw_coeff = true;
            c.eat('*');
        }

        long long exp = 0;
        if (c.eat('t')) {
            exp = 1;
            if (c.eat('^')) exp = c.integer();
        } else if (!saw_coeff) {
            throw ParseError("expected term", c.i);
        }

        if (neg) coeff = (p - coeff % p) % p;
        out = out + LaurentPoly::monomial(p, coeff, exp);

        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '+' && c.peek() != '-') {
            throw ParseError("expected '+' or '-' between terms", c.i);
        }
    }
    if (!c.done()) throw ParseError("trailing characters after laurent polynomial", c.i);
    return out;
}

} // namespace cartanlab
