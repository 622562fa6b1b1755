#include "motives/io.hpp"

#include "motives/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <vector>

using namespace motives;

namespace {

GradedMotiveSeries sample_series() {
    GradedMotiveSeries s;
    s.add_term(MotiveMonomial::l_power(2), 1);
    s.add_term(MotiveMonomial(1, {1}), Rational(-3, 2));
    s.add_term(MotiveMonomial(0, {0, 2}), 1);
    s.add_term(MotiveMonomial::l_power(-1), -1);
    return s;
}

}  // namespace

TEST_CASE("monomial rendering") {
    CHECK(monomial_to_text(MotiveMonomial::unit()) == "1");
    CHECK(monomial_to_text(MotiveMonomial::l_power(1)) == "L");
    CHECK(monomial_to_text(MotiveMonomial::l_power(-3)) == "L^-3");
    CHECK(monomial_to_text(MotiveMonomial::curve_symbol(2)) == "a2");
    CHECK(monomial_to_text(MotiveMonomial(2, {1, 3})) == "a1 a2^3 L^2");
    CHECK(monomial_to_text(MotiveMonomial(0, {0, 1})) == "a2");
}

TEST_CASE("series rendering") {
    CHECK(series_to_text(GradedMotiveSeries::zero()) == "0");
    CHECK(series_to_text(GradedMotiveSeries::one()) == "1");
    CHECK(series_to_text(GradedMotiveSeries::constant(Rational(-5, 3))) == "-5/3");
    // ordering: a2^2 has dimension 4, a1 L has dimension 2, L^2 ties at l
    CHECK(series_to_text(sample_series()) == "a2^2 + L^2 - 3/2 a1 L - L^-1");
    GradedMotiveSeries floored = sample_series();
    floored.truncate_below(0);
    CHECK(series_to_text(floored) == "a2^2 + L^2 - 3/2 a1 L + O(dim<0)");
    GradedMotiveSeries empty;
    empty.set_floor(5);
    CHECK(series_to_text(empty) == "O(dim<5)");
}

TEST_CASE("closed rendering") {
    CHECK(closed_to_text(ClosedMotive::one()) == "1");
    CHECK(closed_to_text(ClosedMotive::constant(0)) == "0");
    CHECK(closed_to_text(ClosedMotive::constant(Rational(7, 2))) == "7/2");
    ClosedMotive x(Rational(1, 3), GradedMotiveSeries::l_power(2),
                   {one_minus_l_inv(2), l_pow_minus_one(5)});
    CHECK(closed_to_text(x) == "1/3 * L^2 / (1-L^-2)(L^5-1)");
    ClosedMotive only_den(1, GradedMotiveSeries::one(), {one_minus_l_inv(1)});
    CHECK(closed_to_text(only_den) == "1 / (1-L^-1)");
}

TEST_CASE("series JSON round trips bytewise") {
    for (bool with_floor : {false, true}) {
        CAPTURE(with_floor);
        GradedMotiveSeries s = sample_series();
        if (with_floor) s.truncate_below(-1);
        std::string j = series_to_json(s);
        GradedMotiveSeries back = series_from_json(j);
        CHECK(back == s);
        CHECK(back.floor() == s.floor());
        CHECK(series_to_json(back) == j);
    }
    CHECK(series_from_json(series_to_json(GradedMotiveSeries::zero())).is_zero());
}

TEST_CASE("series JSON layout is stable") {
    GradedMotiveSeries s;
    s.add_term(MotiveMonomial(1, {1}), Rational(1, 2));
    CHECK(series_to_json(s) ==
          R"({"type":"series","floor":null,"monomials":[{"c":"1/2","l":1,"a":[1]}]})");
}

TEST_CASE("closed JSON round trips bytewise") {
    ClosedMotive x(Rational(-2, 7), sample_series(),
                   {one_minus_l_inv(2), one_minus_l_inv(2), l_pow_minus_one(3)});
    x.mark_torsor_relation();
    std::string j = closed_to_json(x);
    ClosedMotive back = closed_from_json(j);
    CHECK(back.scalar() == x.scalar());
    CHECK(back.numerator() == x.numerator());
    CHECK(back.denominator() == x.denominator());
    CHECK(back.uses_torsor_relation());
    CHECK(closed_to_json(back) == j);
}

TEST_CASE("malformed JSON inputs") {
    CHECK_THROWS_AS(series_from_json("not json"), ConfigError);
    CHECK_THROWS_AS(series_from_json("{}"), ConfigError);
    CHECK_THROWS_AS(series_from_json(R"({"type":"closed"})"), ConfigError);
    CHECK_THROWS_AS(series_from_json(R"({"type":"series","floor":null})"), ConfigError);
    CHECK_THROWS_AS(closed_from_json("[1,2]"), ConfigError);
    CHECK_THROWS_AS(closed_from_json(R"({"type":"closed","scalar":"1","numerator":)"
                                     R"({"type":"series","floor":null,"monomials":[]},)"
                                     R"("denominator":[{"kind":"wild","k":2}]})"),
                    ConfigError);
}

TEST_CASE("closed JSON rejects floored numerators") {
    GradedMotiveSeries floored = sample_series();
    floored.truncate_below(0);
    std::string doctored =
        R"({"type":"closed","scalar":"1","numerator":{"type":"series","floor":-2,)"
        R"("monomials":[]},"denominator":[],"torsor":false})";
    CHECK_THROWS_AS(closed_from_json(doctored), MotiveError);
}

TEST_CASE("target poly JSON") {
    TargetPoly p = TargetPoly::monomial(Rational(3, 4), 1, 2) + TargetPoly::t_power(1, 0);
    nlohmann::json j = nlohmann::json::parse(target_poly_to_json(p));
    CHECK(j["type"] == "poly");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["c"] == "1");
    CHECK(j["terms"][1]["u"] == 1);
    CHECK(j["terms"][1]["v"] == 2);
    CHECK(j["terms"][1]["c"] == "3/4");
}

TEST_CASE("root datum JSON") {
    nlohmann::json j = nlohmann::json::parse(root_datum_to_json(build_root_datum("G2")));
    CHECK(j["label"] == "G2-sc");
    CHECK(j["isogeny"] == "sc");
    CHECK(j["rank"] == 2);
    CHECK(j["dim"] == 14);
    CHECK(j["positive_roots"] == 6);
    CHECK(j["degrees"] == nlohmann::json::array({2, 6}));
    CHECK(j["weyl_order"] == "12");
    CHECK(j["pi1"] == "1");
}

TEST_CASE("report JSON carries every field") {
    GradedMotiveSeries lhs = sample_series();
    GradedMotiveSeries rhs = sample_series();
    rhs.add_term(MotiveMonomial::unit(), 1);
    VerificationReport r = make_series_report(
        "demo-check", {{"group", "G2-sc"}, {"floor", "-4"}}, lhs, rhs);
    CHECK_FALSE(r.equal);
    nlohmann::json j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["check"] == "demo-check");
    CHECK(j["inputs"]["group"] == "G2-sc");
    CHECK(j["equal"] == false);
    CHECK(j["first_discrepancy"].get<std::string>().find("1") != std::string::npos);
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));
    CHECK(j.contains("wall_time_ms"));
    CHECK(j["lhs"]["type"] == "series");
}
