#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanlab/group_spec.hpp"
#include "cartanlab/properness.hpp"
#include "cartanlab/report_io.hpp"
#include "cartanlab/sampling.hpp"

using namespace cartanlab;

TEST_CASE("csv quoting follows rfc 4180") {
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("a b^-1") == "a b^-1");
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_quote("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("group spec round trip (single, rational)") {
    const auto sanov = sanov_generator_set(FieldDescriptor::padic(2));
    const std::string text = save_group_spec_text(sanov);
    const LoadedGroup g = load_group_spec_text(text);
    CHECK(!g.is_pair);
    CHECK(g.field == sanov.field);
    CHECK(g.n == 2);
    const auto& gens = std::get<GeneratorSet<MatrixQ>>(g.gens);
    REQUIRE(gens.generators.size() == 2);
    CHECK(gens.generators[0] == sanov.generators[0]);
    CHECK(gens.generators[1] == sanov.generators[1]);
    CHECK(gens.labels == sanov.labels);
}

TEST_CASE("group spec round trip (pair, laurent)") {
    const auto pairs = torsion_pair_group(3, standard_torsion_pairs({1, 2}));
    const std::string text = save_group_spec_text(pairs);
    const LoadedGroup g = load_group_spec_text(text);
    CHECK(g.is_pair);
    CHECK(g.field == FieldDescriptor::laurent(3));
    const auto& gens = std::get<GeneratorSet<PairElem<LaurentPoly>>>(g.gens);
    REQUIRE(gens.generators.size() == pairs.generators.size());
    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
        CHECK(gens.generators[i] == pairs.generators[i]);
    }
}

TEST_CASE("group spec validation errors") {
    CHECK_THROWS_AS(load_group_spec_text("{"), ParseError);
    CHECK_THROWS_AS(load_group_spec_text("{\"n\": 2}"), ParseError);
    CHECK_THROWS_AS(load_group_spec_text(R"({"field": {"kind": "padic", "p": 2}, "n": 2,
        "generators": [[["1","0"],["0","2"]]]})"),
                    DeterminantError);
    CHECK_THROWS_AS(load_group_spec_text(R"({"field": {"kind": "padic", "p": 4}, "n": 2,
        "generators": [[["1","0"],["0","1"]]]})"),
                    DomainMismatchError);
    CHECK_THROWS_AS(load_group_spec_text(R"({"field": {"kind": "padic", "p": 2}, "n": 2,
        "generators": [[["1","0"],["0","1"]]], "labels": ["a","b"]})"),
                    ParseError);
}

TEST_CASE("matrix spec accepts matrix or generators") {
    const LoadedMatrix a = load_matrix_spec_text(
        R"({"field": {"kind": "laurent", "p": 2}, "n": 2, "matrix": [["1","t^-1"],["0","1"]]})");
    CHECK(a.field == FieldDescriptor::laurent(2));
    const auto& m = std::get<MatrixL>(a.matrix);
    CHECK(m.at(0, 1) == LaurentPoly::monomial(2, 1, -1));

    const LoadedMatrix b = load_matrix_spec_text(
        R"({"field": {"kind": "real"}, "n": 2, "generators": [[["1","2"],["0","1"]]]})");
    CHECK(std::get<MatrixQ>(b.matrix).at(0, 1) == Rational(2));
}

TEST_CASE("report serialization is deterministic and carries the schema") {
    const auto demo = torsion_demo(2, standard_torsion_pairs({1, 2}), 3, 100000, true, {});
    const std::string csv1 = margin_report_csv(demo.report);
    const std::string csv2 = margin_report_csv(demo.report);
    CHECK(csv1 == csv2);
    CHECK(csv1.rfind("word,length,mu,norm,margin,label\n", 0) == 0);
    CHECK(csv1.find("OnWall") != std::string::npos);
    CHECK(csv1.find("|") != std::string::npos); // two factors in the mu column

    const std::string js = margin_report_summary_json(demo.report);
    CHECK(js.find("\"verdict\": \"VIOLATION\"") != std::string::npos);
    CHECK(js.find("\"census\"") != std::string::npos);
    CHECK(js.find("\"discrepancy\"") != std::string::npos);

    const std::string svg = margin_report_svg(demo.report);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("left scalar") != std::string::npos);

    const std::string ts = torsion_demo_summary_json(demo);
    CHECK(ts.find("\"discrepancy_flag\": true") != std::string::npos);
}

TEST_CASE("graph check serialization") {
    const auto sanov = sanov_generator_set();
    const auto ball = generate_ball(sanov, EnumConfig{3, 100000, true});
    const MatrixQ id = MatrixQ::identity(2, Rational::zero());
    const auto res = graph_admissibility(ball, {id, id}, FieldDescriptor::real(), {0.0, 1.0});
    const auto rows = graph_pair_rows(ball, {id, id}, FieldDescriptor::real());
    const auto t12 = single_component_check(rows, Scenario::double_rank_one());
    const std::string csv = graph_check_csv(res);
    CHECK(csv.rfind("R,violations,max_violation_length,confined\n", 0) == 0);
    const std::string js = graph_check_summary_json(res, &t12);
    CHECK(js.find("\"admissible_at_scale\": true") != std::string::npos);
    CHECK(js.find("\"component\": \"C_minus\"") != std::string::npos);
}

TEST_CASE("sl3 scatter draws chamber rays") {
    Rng rng(51);
    GeneratorSet<MatrixQ> gens{FieldDescriptor::padic(2), 3,
                               {random_sl_rational(rng, 3, 4), random_sl_rational(rng, 3, 4)},
                               {"a", "b"}};
    const auto ball = generate_ball(gens, EnumConfig{2, 100000, true});
    const auto rep = properness_report(ball, Scenario::sl_mod_sl(3), gens.field, {});
    const std::string svg = margin_report_svg(rep);
    CHECK(svg.find("stroke-dasharray") != std::string::npos); // the wall ray
    CHECK(svg.find("chamber projection") != std::string::npos);
}

TEST_CASE("summary json embeds the component check") {
    const auto demo = torsion_demo(2, standard_torsion_pairs({1, 2}), 3, 100000, true, {});
    const std::string js = margin_report_summary_json(demo.report);
    CHECK(js.find("\"component_check\"") != std::string::npos);
    CHECK(js.find("\"exception_norm_budget\"") != std::string::npos);
}
