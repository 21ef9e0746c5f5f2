#include <doctest.h>

#include <fstream>
#include <sstream>

#include "burniat/hodge_engine.hpp"
#include "burniat/scenario_registry.hpp"

using namespace burniat;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(BURNIAT_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Every derived output the rest of the pipeline consumes.
void check_same_derived(const Scenario& a, const Scenario& b) {
    CHECK(a.order() == b.order());
    REQUIRE(a.group.elements().size() == b.group.elements().size());
    for (std::size_t i = 0; i < a.order(); ++i) CHECK(a.group.element(i) == b.group.element(i));
    CHECK(a.one_forms == b.one_forms);
    CHECK(a.sections == b.sections);
    CHECK(a.status == b.status);
    CHECK(a.divisor_selfint == b.divisor_selfint);
    const HodgeSummary ha = hodge_Y(a), hb = hodge_Y(b);
    CHECK(ha.fix_Y == hb.fix_Y);
    CHECK(ha.var_Y == hb.var_Y);
    CHECK(ha.trace_H2var == hb.trace_H2var);
    CHECK(ha.chi_A == hb.chi_A);
}

}  // namespace

TEST_CASE("built-in names") {
    const auto& names = builtin_names();
    CHECK(names.size() == 17);
    CHECK(names.front() == "S1");
    CHECK(names.back() == "sicilian");
    CHECK(burniat_family_names().size() == 16);
}

TEST_CASE("builtin lookup") {
    SUBCASE("S5") {
        const Scenario s = builtin("S5");
        CHECK(s.generators == std::vector<std::string>{"i1 i3 i13", "i3 i123", "i3 i23"});
        CHECK(s.divisor_selfint == 48);
        CHECK(s.kind == ScenarioKind::burniat);
        CHECK(s.order() == 8);
    }
    SUBCASE("lower case and whitespace") { CHECK(builtin("s5").name == "S5"); }
    SUBCASE("sicilian") {
        const Scenario s = builtin("sicilian");
        CHECK(s.rank() == 2);
        REQUIRE(s.one_forms.size() == 3);
        CHECK(s.one_forms[0].is_trivial());
        CHECK(s.one_forms[1].str() == "(-+)");
        CHECK(s.one_forms[2].str() == "(-+)");
        CHECK(s.sections.total() == 4);
        for (const auto& c : all_characters(2)) CHECK(s.sections.count(c) == 1);
        CHECK(s.divisor_selfint == 24);
        CHECK(s.has_opaque_factor());
        for (std::size_t i = 1; i < s.order(); ++i) CHECK(s.status[i] == ElementStatus::free_on_A);
    }
    SUBCASE("unknown") { CHECK_THROWS_AS(builtin("S17"), ValidationError); }
}

TEST_CASE("element status") {
    for (const auto& name : burniat_family_names()) {
        CAPTURE(name);
        const Scenario s = builtin(name);
        REQUIRE(s.status.size() == 8);
        CHECK(s.status[0] == ElementStatus::identity);
        int isolated = 0;
        for (std::size_t i = 1; i < 8; ++i) isolated += s.status[i] == ElementStatus::isolated_fixed_points ? 1 : 0;
        CHECK(isolated == (name == "S1" || name == "S2" ? 1 : 0));
    }
}

TEST_CASE("custom scenarios") {
    SUBCASE("S5 re-entered as custom") {
        const Scenario c = parse_scenario(read_data("custom_s5.json"));
        CHECK(c.kind == ScenarioKind::custom);
        check_same_derived(c, builtin("S5"));
    }
    SUBCASE("Sicilian re-entered as custom") {
        check_same_derived(parse_scenario(read_data("custom_sicilian.json")), builtin("sicilian"));
    }
    SUBCASE("render and parse round trip for every built-in") {
        for (const auto& name : builtin_names()) {
            CAPTURE(name);
            const Scenario s = builtin(name);
            const std::string text = render_scenario(s);
            const Scenario back = parse_scenario(text);
            check_same_derived(back, s);
            CHECK(render_scenario(back) == text);
        }
    }
    SUBCASE("positive-dimensional fixed locus") {
        try {
            parse_scenario(read_data("corrupted_fixed_curve.json"));
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("element i1 has fixed points on A") != std::string::npos);
        }
    }
    SUBCASE("truncated file") { CHECK_THROWS_AS(parse_scenario(read_data("corrupted_truncated.json")), ParseError); }
    SUBCASE("non-commuting lifts on one factor") {
        // Translations by 1/2 and tau/2 on a single factor: the degree-2 pairing is -1.
        const char* text = R"j({"name":"toy","kind":"custom","factors":[{"kind":"elliptic"}],
                               "generators":["+10","+01"],"divisor_selfint":12})j";
        try {
            parse_scenario(text);
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("g1 and g2") != std::string::npos);
            CHECK(msg.find("-1") != std::string::npos);
        }
    }
    SUBCASE("schema problems") {
        CHECK_THROWS_AS(parse_scenario(R"j({"name":"x","kind":"custom","generators":["i1 i3 i13"],"divisor_selfint":48,"extra":1})j"),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario(R"j({"name":"x","kind":"custom","divisor_selfint":48})j"), ParseError);
        CHECK_THROWS_AS(parse_scenario(R"j({"name":"x","kind":"weird","generators":[],"divisor_selfint":48})j"), ParseError);
        CHECK_THROWS_AS(parse_scenario(R"j({"name":"x","kind":"custom","generators":["i1 i3 i13"],"divisor_selfint":48,"schema":"2"})j"),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario("[1, 2]"), ParseError);
    }
    SUBCASE("mathematical problems") {
        CHECK_THROWS_AS(parse_scenario(R"j({"name":"x","kind":"custom","generators":["i1 i3 i13","i3 i123","i3 i23"],"divisor_selfint":47})j"),
                        ValidationError);
        CHECK_THROWS_AS(parse_scenario(R"j({"name":"x","kind":"custom","generators":["i1 i3 i13","i1 i3 i13","i3 i23"],"divisor_selfint":48})j"),
                        ValidationError);
        // chi0 must occur in the section space: S2's sections miss (++-).
        CHECK_THROWS_AS(parse_scenario(R"j({"name":"x","kind":"custom","generators":["i1 i3 i23","i3 i13","i2 i23"],"divisor_selfint":48,"chi0":"(++-)"})j"),
                        ValidationError);
    }
    SUBCASE("an explicit admissible chi0 is kept") {
        const Scenario s = parse_scenario(R"j({"name":"x","kind":"custom","generators":["i1 i3 i13","i3 i123","i3 i23"],"divisor_selfint":48,"chi0":"(++-)"})j");
        REQUIRE(s.chi0.has_value());
        CHECK(s.chi0->str() == "(++-)");
        CHECK(hodge_Y(s).chi0.str() == "(++-)");
    }
}
