#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cartanlab/field.hpp"
#include "cartanlab/rational.hpp"
#include "cartanlab/sampling.hpp"
#include "cartanlab/scalar_io.hpp"

using namespace cartanlab;

TEST_CASE("field descriptors check primality") {
    CHECK(FieldDescriptor::padic(2).p == 2);
    CHECK(FieldDescriptor::laurent(7).nonarchimedean());
    CHECK_THROWS_AS(FieldDescriptor::padic(4), DomainMismatchError);
    CHECK_THROWS_AS(FieldDescriptor::laurent(1), DomainMismatchError);
    CHECK(!FieldDescriptor::real().nonarchimedean());
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(91));
}

TEST_CASE("valuation examples") {
    CHECK(Rational(12).valuation(2) == Valuation::of(2)); // 12 = 4 * 3
    CHECK(Rational(3, 4).valuation(2) == Valuation::of(-2));
    CHECK(Rational(0).valuation(5).is_infinite());

    const LaurentPoly x = parse_laurent("t^-3 + t^-1", 2);
    CHECK(x.valuation() == Valuation::of(-3));
    CHECK(LaurentPoly(3).valuation().is_infinite());
}

TEST_CASE("rational arithmetic examples and canonical form") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(2, 4)).str() == "1/2");
    CHECK((Rational(3, -6)).str() == "-1/2");
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DivisionByZeroError);
}

TEST_CASE("laurent arithmetic examples") {
    const LaurentPoly a = parse_laurent("t^-1 + 1", 2);
    CHECK(a * a == parse_laurent("t^-2 + 1", 2)); // char-2 square
    CHECK(LaurentPoly::monomial(2, 1, -1) * LaurentPoly::monomial(2, 1, 1) == LaurentPoly::constant(2, 1));

    const LaurentPoly unit = LaurentPoly::monomial(3, 2, 5);
    CHECK((a + a).is_zero()); // char 2
    CHECK((unit / unit).is_one());
    CHECK_THROWS_AS(unit / LaurentPoly(3), DivisionByZeroError);
    CHECK_THROWS_AS(parse_laurent("1 + t", 3) / parse_laurent("1 + t", 3), NonInvertibleError);
    CHECK_THROWS_AS(parse_laurent("1", 2) + parse_laurent("1", 3), DomainMismatchError);
}

TEST_CASE("parse examples") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational(" -12 / 8 ") == Rational(-3, 2));
    CHECK(parse_rational("0") == Rational(0));

    const LaurentPoly x = parse_laurent("t^-2 + 1", 2);
    CHECK(x.terms().size() == 2);
    CHECK(x.terms().at(-2) == 1);
    CHECK(x.terms().at(0) == 1);
    CHECK(parse_laurent("0", 5).is_zero());
    CHECK(parse_laurent("2*t^3", 5) == LaurentPoly::monomial(5, 2, 3));
    CHECK(parse_laurent("t", 5) == LaurentPoly::monomial(5, 1, 1));
    CHECK(parse_laurent("1 - t", 3) == parse_laurent("1 + 2*t", 3));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_rational("3/"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2 junk"), ParseError);
    CHECK_THROWS_AS(parse_laurent("7*t", 5), ParseError); // coefficient out of F_5 range
    CHECK_THROWS_AS(parse_laurent("t^", 2), ParseError);
    CHECK_THROWS_AS(parse_laurent("", 2), ParseError);
    try {
        parse_rational("12x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("valuation is a homomorphism and ultrametric (10^4 random pairs)") {
    Rng rng(101);
    const std::uint64_t p = 2;
    for (int i = 0; i < 5000; ++i) {
        const Rational a = random_rational(rng, 200, 200);
        const Rational b = random_rational(rng, 200, 200);
        const Valuation va = a.valuation(p), vb = b.valuation(p);
        CHECK((a * b).valuation(p) == va + vb);
        const Rational s = a + b;
        if (!s.is_zero()) {
            CHECK(!(s.valuation(p) < min(va, vb)));
            if (!(va == vb)) CHECK(s.valuation(p) == min(va, vb)); // ultrametric equality case
        }
    }
    for (int i = 0; i < 5000; ++i) {
        const LaurentPoly a = random_laurent(rng, 3, -5, 5, 4);
        const LaurentPoly b = random_laurent(rng, 3, -5, 5, 4);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        const LaurentPoly s = a + b;
        if (!s.is_zero()) {
            CHECK(!(s.valuation() < min(a.valuation(), b.valuation())));
            if (!(a.valuation() == b.valuation())) CHECK(s.valuation() == min(a.valuation(), b.valuation()));
        }
    }
}

TEST_CASE("rational arithmetic matches an independent big-integer route") {
    // cross-check against explicit num/den formulas with manual gcd reduction
    Rng rng(202);
    auto reduce = [](mpz_class n, mpz_class d) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 0) {
            n /= g;
            d /= g;
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return std::pair{n, d};
    };
    for (int i = 0; i < 1000; ++i) {
        const Rational a = random_rational(rng, 500, 500);
        const Rational b = random_rational(rng, 500, 500);
        const Rational c = random_rational(rng, 500, 500);

        const auto [sn, sd] = reduce(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                                     a.denominator() * b.denominator());
        const Rational sum = a + b;
        CHECK(sum.numerator() == sn);
        CHECK(sum.denominator() == sd);

        const auto [pn, pd] = reduce(a.numerator() * b.numerator(), a.denominator() * b.denominator());
        const Rational prod = a * b;
        CHECK(prod.numerator() == pn);
        CHECK(prod.denominator() == pd);

        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("parse then format is the identity on random scalars") {
    Rng rng(303);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = random_rational(rng, 100000, 100000);
        CHECK(parse_rational(format_scalar(a)) == a);
    }
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t p = (i % 3 == 0) ? 2 : (i % 3 == 1 ? 3 : 5);
        const LaurentPoly a = random_laurent(rng, p, -8, 8, 5);
        CHECK(parse_laurent(format_scalar(a), p) == a);
    }
    CHECK(format_scalar(Rational(0)) == "0");
    CHECK(format_scalar(LaurentPoly(2)) == "0");
}

TEST_CASE("field-checked valuation rejects mismatches") {
    CHECK(Rational(12).valuation(FieldDescriptor::padic(2)) == Valuation::of(2));
    CHECK_THROWS_AS(Rational(12).valuation(FieldDescriptor::laurent(2)), DomainMismatchError);
    CHECK_THROWS_AS(Rational(12).valuation(FieldDescriptor::real()), DomainMismatchError);
    const LaurentPoly x = parse_laurent("t^-3 + t^-1", 2);
    CHECK(x.valuation(FieldDescriptor::laurent(2)) == Valuation::of(-3));
    CHECK_THROWS_AS(x.valuation(FieldDescriptor::laurent(3)), DomainMismatchError);
    CHECK_THROWS_AS(x.valuation(FieldDescriptor::padic(2)), DomainMismatchError);
}
