#include "motives/target_poly.hpp"

#include "motives/errors.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace motives;

namespace {

// schoolbook convolution, independent of operator*
TargetPoly naive_mul(const TargetPoly& a, const TargetPoly& b) {
    TargetPoly r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TargetPoly rand_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 5), coeff(-6, 6), count(0, 7);
    TargetPoly p;
    int n = count(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp(rng), exp(rng), Rational(coeff(rng)));
    return p;
}

}  // namespace

TEST_CASE("term ordering is by total degree then u exponent") {
    TargetPoly p;
    p.add_term(2, 0, 1);   // total 2
    p.add_term(0, 1, 1);   // total 1
    p.add_term(1, 1, 1);   // total 2, larger u than (0,2)
    p.add_term(0, 2, 1);   // total 2
    p.add_term(-1, 0, 1);  // total -1
    std::vector<TargetPoly::Key> keys;
    for (const auto& [k, c] : p.terms()) keys.push_back(k);
    std::vector<TargetPoly::Key> want = {{-1, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 0}};
    CHECK(keys == want);
}

TEST_CASE("add_term merges and drops zeros") {
    TargetPoly p;
    p.add_term(1, 2, Rational(1, 2));
    p.add_term(1, 2, Rational(1, 2));
    CHECK(p.coefficient(1, 2) == 1);
    p.add_term(1, 2, -1);
    CHECK(p.is_zero());
    CHECK(p.coefficient(1, 2) == 0);
}

TEST_CASE("degree bounds") {
    CHECK(TargetPoly::zero().min_total_degree() == 0);
    CHECK(TargetPoly::zero().max_total_degree() == 0);
    TargetPoly p;
    p.add_term(-2, 1, 1);
    p.add_term(3, 4, 1);
    CHECK(p.min_total_degree() == -1);
    CHECK(p.max_total_degree() == 7);
}

TEST_CASE("multiplication matches a naive convolution") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        TargetPoly a = rand_poly(rng), b = rand_poly(rng);
        CHECK(a * b == naive_mul(a, b));
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(98);
    for (int trial = 0; trial < 50; ++trial) {
        TargetPoly a = rand_poly(rng), b = rand_poly(rng), c = rand_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == TargetPoly::zero());
    }
}

TEST_CASE("truncated_mul keeps exactly the low-degree part") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        TargetPoly a = rand_poly(rng), b = rand_poly(rng);
        int maxdeg = 3;
        CHECK(truncated_mul(a, b, maxdeg) == (a * b).truncated(maxdeg));
    }
}

TEST_CASE("shifted and inverted_variables") {
    TargetPoly p = TargetPoly::monomial(2, 1, 3) + TargetPoly::t_power(1, 2);
    TargetPoly s = p.shifted(1, -1);
    CHECK(s.coefficient(2, 2) == 2);
    CHECK(s.coefficient(3, -1) == 1);
    TargetPoly inv = p.inverted_variables();
    CHECK(inv.coefficient(-1, -3) == 2);
    CHECK(inv.coefficient(-2, 0) == 1);
    CHECK(inv.inverted_variables() == p);
}

TEST_CASE("pow matches repeated multiplication") {
    TargetPoly p = TargetPoly::one() + TargetPoly::t_power(1, 1);
    TargetPoly q = pow(p, 4);
    // (1+t)^4
    CHECK(q.t_coefficient(0) == 1);
    CHECK(q.t_coefficient(2) == 6);
    CHECK(q.t_coefficient(4) == 1);
    CHECK(pow(p, 0) == TargetPoly::one());
    std::mt19937 rng(100);
    TargetPoly r = rand_poly(rng);
    CHECK(pow(r, 3) == r * r * r);
}

TEST_CASE("series_inverse of 1 - t is the geometric series") {
    TargetPoly p = TargetPoly::one() - TargetPoly::t_power(1, 1);
    TargetPoly inv = series_inverse(p, 5);
    for (int e = 0; e <= 5; ++e) CHECK(inv.t_coefficient(e) == 1);
    CHECK(inv.max_total_degree() == 5);
    CHECK(truncated_mul(p, inv, 5) == TargetPoly::one());
}

TEST_CASE("series_inverse handles a bivariate unit and scales") {
    // 2(1 - u v): inverse (1/2)(1 + uv + u^2 v^2)
    TargetPoly p = TargetPoly::constant(2) - TargetPoly::monomial(2, 1, 1);
    TargetPoly inv = series_inverse(p, 4);
    CHECK(inv.coefficient(0, 0) == Rational(1, 2));
    CHECK(inv.coefficient(1, 1) == Rational(1, 2));
    CHECK(inv.coefficient(2, 2) == Rational(1, 2));
    CHECK(inv.coefficient(3, 3) == 0);
}

TEST_CASE("series_inverse rejects non-units") {
    CHECK_THROWS_AS(series_inverse(TargetPoly::t_power(1, 1), 4), MotiveError);
    TargetPoly loose = TargetPoly::one() + TargetPoly::monomial(1, -1, 0);
    CHECK_THROWS_AS(series_inverse(loose, 4), MotiveError);
    CHECK_THROWS_AS(series_inverse(TargetPoly::zero(), 4), MotiveError);
}

TEST_CASE("text rendering") {
    CHECK(target_poly_to_text(TargetPoly::zero()) == "0");
    TargetPoly p = TargetPoly::one() + TargetPoly::t_power(2, 1) - TargetPoly::t_power(1, 3);
    CHECK(target_poly_to_text(p) == "1 + 2 t - t^3");
    TargetPoly b = TargetPoly::monomial(1, 1, 1) + TargetPoly::monomial(Rational(1, 2), 0, 2);
    CHECK(target_poly_to_text(b, "u", "v") == "1/2 v^2 + u v");
    TargetPoly neg = -TargetPoly::t_power(3, 2);
    CHECK(target_poly_to_text(neg) == "-3 t^2");
}
