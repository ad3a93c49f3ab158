#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace ultraspec;
namespace tt = ultraspec::testing;

TEST_CASE("problem round-trip for every fixture") {
    for (const auto& [name, problem] : builtin_fixtures()) {
        CAPTURE(name);
        const Json j = serialize_problem(problem);
        CHECK(parse_problem(j) == problem);
        CHECK(serialize_problem(parse_problem(j)).dump() == j.dump());
    }
}

TEST_CASE("all named fixtures exist and build") {
    const auto& fixtures = builtin_fixtures();
    for (const char* name : {"all-ones", "jordan-3", "structured-diag", "diag-ab-condition", "example-final-i",
                             "example-final-ii", "example-final-iii"}) {
        CAPTURE(name);
        REQUIRE(fixtures.count(name) == 1);
        CHECK_NOTHROW(make_family(fixtures.at(name)));
        CHECK_NOTHROW(fixture_probe_lambda(name));
    }
}

TEST_CASE("parse diagnostics") {
    Json good = serialize_problem(builtin_fixtures().at("all-ones"));

    Json j = good;
    j["family"] = "nonsense";
    CHECK_THROWS_AS(parse_problem(j), ParseError);

    j = good;
    j["prime"] = 6;
    CHECK_THROWS_AS(parse_problem(j), ParseError);

    j = good;
    j["epsilon"] = "0";
    CHECK_THROWS_AS(parse_problem(j), ParseError);

    j = good;
    j["A"][0][0] = "not-a-number";
    CHECK_THROWS_AS(parse_problem(j), ParseError);

    j = good;
    j["A"] = Json::array({Json::array({"1", "2", "3"})});
    CHECK_THROWS_AS(parse_problem(j), ParseError);

    j = good;
    j.erase("A");
    CHECK_THROWS_AS(parse_problem(j), ParseError);

    j = good;
    j["dimension"] = 40;
    CHECK_THROWS_AS(parse_problem(j), ParseError);
}

TEST_CASE("reports are byte-stable") {
    const ProblemFile problem = builtin_fixtures().at("structured-diag");
    const Family family = make_family(problem);
    auto build = [&]() {
        const MembershipVerdict v = member(family, PadicScalar(10, 3), problem_epsilon(problem));
        Json results;
        results["lambda"] = "10";
        results["verdict"] = verdict_to_json(v);
        return make_report("member", problem, std::move(results)).dump(2);
    };
    CHECK(build() == build());
    CHECK(input_digest(problem) == input_digest(problem));
    CHECK(input_digest(problem).substr(0, 6) == "fnv1a:");
    // campaigns with a fixed seed serialize identically
    std::vector<PadicScalar> grid{PadicScalar(10, 3), PadicScalar(4, 3)};
    const Json u1 = union_report_to_json(union_equality_campaign(family, grid, problem_epsilon(problem), 42));
    const Json u2 = union_report_to_json(union_equality_campaign(family, grid, problem_epsilon(problem), 42));
    CHECK(u1.dump() == u2.dump());
}

TEST_CASE("spectrum serialization carries exact strings") {
    const ProblemFile problem = builtin_fixtures().at("example-final-i");
    const Family family = make_family(problem);
    const Json j = spectrum_to_json(spectrum(family.a(), family.m()));
    REQUIRE(j["rational_points"].size() == 2);
    CHECK(j["rational_points"][0]["value"] == "1/2");
    CHECK(j["rational_points"][1]["value"] == "1");
    CHECK(j["infinite_eigenvalue"] == false);
}

TEST_CASE("region serialization shape") {
    const Family f = tt::fixture_family("example-final-iii");
    const RegionTree tree = explore(f, Ball{PadicScalar::one(2), 1}, Epsilon(make_rational(1, 4)), 2);
    const Json j = region_to_json(tree);
    CHECK(j["tree"]["center"] == "1");
    CHECK(j["tree"]["radius_exp"] == 1);
    CHECK(j["tree"]["class"] == "split");
    REQUIRE(j["tree"]["children"].size() == 2);
}

TEST_CASE("magnitude serialization") {
    CHECK(magnitude_to_json(PMagnitude::zero())["kind"] == "zero");
    CHECK(magnitude_to_json(PMagnitude::infinite())["kind"] == "infinite");
    const Json f = magnitude_to_json(PMagnitude::finite(-3));
    CHECK(f["kind"] == "finite");
    CHECK(f["exponent"] == -3);
}
