#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanlab/ball.hpp"
#include "cartanlab/pair_element.hpp"
#include "cartanlab/properness.hpp"
#include "cartanlab/sampling.hpp"
#include "cartanlab/scalar_io.hpp"

using namespace cartanlab;

namespace {

std::size_t free_rank2_ball(int radius) {
    // 2 * 3^L - 1 elements in the radius-L ball of a rank-2 free group
    std::size_t s = 2;
    for (int i = 0; i < radius; ++i) s *= 3;
    return s - 1;
}

} // namespace

TEST_CASE("sanov balls have free-group counts with unique keys") {
    const auto gens = sanov_generator_set();
    for (int radius = 0; radius <= 5; ++radius) {
        const auto ball = generate_ball(gens, EnumConfig{radius, 1000000, true});
        CHECK(ball.size() == free_rank2_ball(radius));
        std::set<std::string> keys;
        for (const auto& e : ball.entries()) keys.insert(e.key);
        CHECK(keys.size() == ball.size());
    }
}

TEST_CASE("ball invariants: identity, stored words, closure under inverse, monotone growth") {
    const auto gens = sanov_generator_set();
    const auto ball = generate_ball(gens, EnumConfig{4, 1000000, true});

    CHECK(ball.entries().front().length == 0);
    CHECK(ball.entries().front().word == GroupWord::empty());
    CHECK(ball.entries().front().element == MatrixQ::identity(2, Rational::zero()));

    std::size_t prev = 0;
    std::map<int, std::size_t> by_len;
    for (const auto& e : ball.entries()) {
        CHECK(e.length <= 4);
        CHECK(e.word.length() == e.length);
        CHECK(evaluate_word(e.word, gens) == e.element);
        CHECK(ball.contains(e.element.inverse()));
        ++by_len[e.length];
    }
    // free group: 4 * 3^(L-1) new elements at each length L >= 1
    CHECK(by_len[0] == 1);
    CHECK(by_len[1] == 4);
    CHECK(by_len[2] == 12);
    CHECK(by_len[3] == 36);
    CHECK(by_len[4] == 108);
    for (int radius = 0; radius <= 4; ++radius) {
        const auto b = generate_ball(gens, EnumConfig{radius, 1000000, false});
        CHECK(b.size() >= prev);
        prev = b.size();
    }
}

TEST_CASE("dedup is sound: equal keys iff equal matrices") {
    Rng rng(31);
    for (int i = 0; i < 500; ++i) {
        const MatrixQ a = random_sl_rational(rng, 2, 4);
        const MatrixQ b = random_sl_rational(rng, 2, 4);
        CHECK((a.key() == b.key()) == (a == b));
    }
}

TEST_CASE("commuting involution pairs collapse: |B_2| = 4") {
    const auto gens = torsion_pair_group(2, standard_torsion_pairs({1}));
    const auto ball = generate_ball(gens, EnumConfig{2, 100000, true});
    CHECK(ball.size() == 4); // 1, a, b, ab in (Z/2)^2
    const auto big = generate_ball(gens, EnumConfig{6, 100000, true});
    CHECK(big.size() == 4); // group exhausted
}

TEST_CASE("parallel and serial enumeration are bit-identical") {
    const auto sanov = sanov_generator_set();
    const auto a = generate_ball(sanov, EnumConfig{5, 1000000, true});
    const auto b = generate_ball_serial(sanov, EnumConfig{5, 1000000, false});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.entries()[i].key == b.entries()[i].key);
        CHECK(a.entries()[i].word == b.entries()[i].word);
        CHECK(a.entries()[i].length == b.entries()[i].length);
    }

    const auto pairs = torsion_pair_group(2, standard_torsion_pairs({1, 2, 3}));
    const auto c = generate_ball(pairs, EnumConfig{3, 100000, true});
    const auto d = generate_ball_serial(pairs, EnumConfig{3, 100000, false});
    REQUIRE(c.size() == d.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c.entries()[i].key == d.entries()[i].key);
        CHECK(c.entries()[i].word == d.entries()[i].word);
    }
}

TEST_CASE("element cap raises a partial-result error") {
    const auto gens = sanov_generator_set();
    try {
        generate_ball(gens, EnumConfig{5, 100, true});
        FAIL("expected BallCapError");
    } catch (const BallCapError<MatrixQ>& e) {
        CHECK(e.completed_radius == 3); // |B_3| = 53 fits the cap of 100, |B_4| = 161 does not
        CHECK(e.partial_ball.size() == free_rank2_ball(e.completed_radius));
        CHECK(e.partial_ball.radius() == e.completed_radius);
    }
}

TEST_CASE("element order examples") {
    MatrixL g1(2, LaurentPoly(2));
    g1.at(0, 0) = parse_laurent("1", 2);
    g1.at(0, 1) = parse_laurent("t^-1", 2);
    g1.at(1, 1) = parse_laurent("1", 2);
    CHECK(element_order(g1) == 2);
    CHECK(element_order(MatrixL::identity_like(g1)) == 1);

    MatrixL d(2, LaurentPoly(2));
    d.at(0, 0) = parse_laurent("t^-1", 2);
    d.at(1, 1) = parse_laurent("t", 2);
    CHECK(!element_order(d).has_value()); // infinite order -> UNKNOWN

    const auto ball = generate_ball(torsion_pair_group(2, standard_torsion_pairs({1, 2})),
                                    EnumConfig{4, 100000, true});
    for (const auto& e : ball.entries()) {
        if (e.length == 0) continue;
        CHECK(element_order(e.element) == 2);
    }
}

TEST_CASE("pair group examples") {
    const auto sanov = sanov_generator_set();
    GeneratorSet<MatrixQ> trivial{sanov.field, 2,
                                  {MatrixQ::identity(2, Rational::zero()), MatrixQ::identity(2, Rational::zero())},
                                  {"e", "e"}};
    const auto graph = pair_group(sanov, trivial);
    CHECK(graph.generators.size() == 2);
    for (const auto& g : graph.generators) {
        CHECK(g.right == MatrixQ::identity(2, Rational::zero()));
    }

    const auto diag = pair_group(sanov, sanov);
    const auto field = FieldDescriptor::padic(2);
    for (const auto& g : diag.generators) {
        const PairWeyl pw = mu_element(g, field);
        CHECK(pw.left == pw.right);
    }
}

TEST_CASE("enumeration caps are validated") {
    const auto gens = sanov_generator_set();
    CHECK_THROWS_AS(generate_ball(gens, EnumConfig{-1, 100, true}), Error);
    CHECK_THROWS_AS(generate_ball(gens, EnumConfig{2, 0, true}), Error);
}
