#include "motives/root_datum.hpp"

#include "motives/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

using namespace motives;

namespace {

const std::map<std::string, std::vector<int>> kDegrees = {
    {"A1", {2}},
    {"A2", {2, 3}},
    {"A3", {2, 3, 4}},
    {"A4", {2, 3, 4, 5}},
    {"B2", {2, 4}},
    {"B3", {2, 4, 6}},
    {"B4", {2, 4, 6, 8}},
    {"C2", {2, 4}},
    {"C3", {2, 4, 6}},
    {"D4", {2, 4, 4, 6}},
    {"E6", {2, 5, 6, 8, 9, 12}},
    {"E7", {2, 6, 8, 10, 12, 14, 18}},
    {"E8", {2, 8, 12, 14, 18, 20, 24, 30}},
    {"F4", {2, 6, 8, 12}},
    {"G2", {2, 6}},
};

const std::map<std::string, int> kCenterOrder = {
    {"A1", 2}, {"A2", 3}, {"A3", 4}, {"A4", 5}, {"B2", 2}, {"B3", 2},
    {"B4", 2}, {"C2", 2}, {"C3", 2}, {"D4", 4}, {"E6", 3}, {"E7", 2},
    {"E8", 1}, {"F4", 1}, {"G2", 1},
};

}  // namespace

TEST_CASE("invariant degree tables") {
    for (const auto& [label, want] : kDegrees) {
        CAPTURE(label);
        RootDatum rd = build_root_datum(label);
        CHECK(rd.degrees == want);
        // sum (d_i - 1) counts the positive roots
        int s = std::accumulate(want.begin(), want.end(), 0) - static_cast<int>(want.size());
        CHECK(s == rd.num_positive_roots());
        CHECK(rd.dim == rd.rank + 2 * rd.num_positive_roots());
        CHECK(rd.rank == static_cast<int>(want.size()));
    }
}

TEST_CASE("weyl order is the degree product") {
    for (const auto& [label, degs] : kDegrees) {
        CAPTURE(label);
        Integer prod = 1;
        for (int d : degs) prod *= d;
        CHECK(build_root_datum(label).weyl_order() == prod);
    }
    CHECK(build_root_datum("E8").weyl_order() == Integer(696729600));
}

TEST_CASE("fundamental group orders") {
    for (const auto& [label, center] : kCenterOrder) {
        CAPTURE(label);
        CHECK(build_root_datum(label).pi1_order == 1);
        CHECK(build_root_datum(label + "-adjoint").pi1_order == Integer(center));
    }
}

TEST_CASE("heights and the 2rho pairing vector") {
    RootDatum rd = build_root_datum("G2");
    CHECK(rd.positive_roots.size() == 6);
    // heights of G2 positive roots: 1,1,2,3,4,5
    std::vector<int> hs = rd.heights;
    std::sort(hs.begin(), hs.end());
    CHECK(hs == std::vector<int>{1, 1, 2, 3, 4, 5});
    // height_mult[i] = sum over positive roots of coordinate i = <alpha_i^vee, 2rho>
    CHECK(static_cast<int>(rd.height_mult.size()) == rd.rank);
    std::vector<int> col(rd.rank, 0);
    for (const auto& r : rd.positive_roots)
        for (int i = 0; i < rd.rank; ++i) col[i] += r[i];
    CHECK(rd.height_mult == col);
}

TEST_CASE("product types") {
    RootDatum rd = build_root_datum("A1xA1");
    CHECK(rd.rank == 2);
    CHECK(rd.dim == 6);
    CHECK(rd.degrees == std::vector<int>{2, 2});
    CHECK(rd.weyl_order() == 4);
    CHECK(rd.pi1_order == 1);
    CHECK(rd.components.size() == 2);

    RootDatum adj = build_root_datum("A1-adjointxA1-adjoint");
    CHECK(adj.pi1_order == 4);

    RootDatum mixed = build_root_datum("A2xG2");
    CHECK(mixed.dim == 8 + 14);
    CHECK(mixed.degrees == std::vector<int>{2, 2, 3, 6});
    CHECK(mixed.label == "A2xG2-sc");
    CHECK(build_root_datum("A1-adjoint").label == "A1-adjoint");
}

TEST_CASE("bad specs are rejected") {
    for (const char* spec : {"", "H3", "A0", "Q2", "A2-fancy", "A2x", "B1",
                             "A2-scxA1-adjoint", "E9", "D3"}) {
        CAPTURE(spec);
        CHECK_THROWS_AS(build_root_datum(spec), MotiveError);
    }
}

TEST_CASE("cartan matrix sanity") {
    for (const auto& [label, degs] : kDegrees) {
        CAPTURE(label);
        RootDatum rd = build_root_datum(label);
        for (int i = 0; i < rd.rank; ++i) {
            CHECK(rd.cartan[i][i] == 2);
            for (int j = 0; j < rd.rank; ++j) {
                if (i == j) continue;
                CHECK(rd.cartan[i][j] <= 0);
                // symmetrizable: d_i a_ij == d_j a_ji
                CHECK(rd.symmetrizer[j] * rd.cartan[i][j] ==
                      rd.symmetrizer[i] * rd.cartan[j][i]);
            }
        }
    }
}

TEST_CASE("smith normal diagonal") {
    // the routine returns the pivots of a full diagonalization: zero rows are
    // dropped and divisibility between pivots is not normalized, so only the
    // count (= rank) and the product (= |det| up to sign) are canonical
    using M = std::vector<std::vector<Integer>>;
    auto product = [](const std::vector<Integer>& d) {
        Integer p = 1;
        for (const auto& e : d) p *= e;
        return p;
    };
    CHECK(smith_normal_diagonal(M{{1, 0}, {0, 1}}) == std::vector<Integer>{1, 1});
    auto d1 = smith_normal_diagonal(M{{2, 0}, {0, 3}});
    CHECK(d1.size() == 2);
    CHECK(product(d1) == 6);
    auto singular = smith_normal_diagonal(M{{2, 4}, {4, 8}});
    CHECK(singular.size() == 1);
    CHECK(singular[0] == 2);
    CHECK(smith_normal_diagonal(M{{2, -1}, {-1, 2}}) == std::vector<Integer>{1, 3});
    // D4 cartan determinant 4 = center order of the adjoint quotient
    RootDatum d4 = build_root_datum("D4");
    M cart;
    for (const auto& row : d4.cartan) {
        cart.emplace_back(row.begin(), row.end());
    }
    auto diag = smith_normal_diagonal(cart);
    CHECK(diag.size() == 4);
    CHECK(product(diag) == 4);
}

TEST_CASE("cocharacters and pairings for A1") {
    RootDatum sc = build_root_datum("A1");
    Cocharacter z = zero_cocharacter(sc);
    CHECK(z.pairing_2rho == 0);
    CHECK(z.is_dominant());
    Cocharacter one = make_cocharacter(sc, {1});
    // coroot lattice: alpha^vee pairs to 2 with alpha = 2rho
    CHECK(one.pairings == std::vector<int>{2});
    CHECK(one.pairing_2rho == 2);

    RootDatum adj = build_root_datum("A1-adjoint");
    Cocharacter half = make_cocharacter(adj, {1});
    // coweight lattice: the fundamental coweight pairs to 1
    CHECK(half.pairings == std::vector<int>{1});
    CHECK(half.pairing_2rho == 1);
    CHECK_FALSE(make_cocharacter(adj, {-1}).is_dominant());
}

TEST_CASE("dominant cocharacter enumeration sizes") {
    RootDatum sc = build_root_datum("A1");
    RootDatum adj = build_root_datum("A1-adjoint");
    for (int bound = 0; bound <= 9; ++bound) {
        CAPTURE(bound);
        // sc: lambda = m alpha^vee, (lambda,2rho) = 2m -> floor(bound/2)+1 values
        CHECK(dominant_cochars_upto(sc, bound).size() ==
              static_cast<size_t>(bound / 2 + 1));
        CHECK(dominant_cochars_upto(adj, bound).size() == static_cast<size_t>(bound + 1));
    }
    auto list = dominant_cochars_upto(sc, 6);
    for (size_t i = 0; i + 1 < list.size(); ++i)
        CHECK(list[i].pairing_2rho <= list[i + 1].pairing_2rho);
}

TEST_CASE("dominant cocharacter enumeration in rank 2") {
    RootDatum a2 = build_root_datum("A2");
    // lambda = m1 a1^vee + m2 a2^vee, pairings (2m1-m2, 2m2-m1) >= 0,
    // (lambda,2rho) = 2(m1+m2) <= 8
    size_t count = 0;
    for (int m1 = 0; m1 <= 4; ++m1)
        for (int m2 = 0; m2 <= 4; ++m2)
            if (2 * m1 - m2 >= 0 && 2 * m2 - m1 >= 0 && 2 * (m1 + m2) <= 8) ++count;
    CHECK(dominant_cochars_upto(a2, 8).size() == count);
    for (const auto& lam : dominant_cochars_upto(a2, 8)) {
        CHECK(lam.is_dominant());
        CHECK(lam.pairing_2rho <= 8);
        // cross-check pairing() against stored pairings on simple roots
        for (int j = 0; j < a2.rank; ++j) {
            std::vector<int> chi(a2.rank, 0);
            chi[j] = 1;
            CHECK(pairing(a2, lam, chi) == lam.pairings[j]);
        }
    }
}

TEST_CASE("highest root data per component") {
    RootDatum g2 = build_root_datum("G2");
    REQUIRE(g2.components.size() == 1);
    const auto& comp = g2.components[0];
    CHECK(comp.begin == 0);
    CHECK(comp.end == 2);
    // the highest root has height 5 in G2
    int h = 0;
    for (int c : comp.highest_root) h += c;
    CHECK(h == 5);
    bool found = std::find(g2.positive_roots.begin(), g2.positive_roots.end(),
                           comp.highest_root) != g2.positive_roots.end();
    CHECK(found);
}
