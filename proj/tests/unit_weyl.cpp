#include "motives/weyl.hpp"

#include "motives/errors.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace motives;

namespace {

// length of w as the number of positive roots sent to negative ones,
// computed directly from the root action matrix
int inversion_count(const WeylGroupTable& wt, int w) {
    int inv = 0;
    for (const auto& r : wt.rd.positive_roots) {
        std::vector<int> img(wt.rd.rank, 0);
        for (int i = 0; i < wt.rd.rank; ++i)
            for (int j = 0; j < wt.rd.rank; ++j)
                img[i] += wt.elements[w].root_action[static_cast<size_t>(i) *
                                                         wt.rd.rank +
                                                     j] *
                          r[j];
        bool nonneg = true;
        for (int v : img) nonneg = nonneg && v >= 0;
        if (!nonneg) ++inv;
    }
    return inv;
}

TargetPoly geometric_factor(int top) {
    TargetPoly f;
    for (int e = 0; e < top; ++e) f.add_term(e, 0, 1);
    return f;
}

}  // namespace

TEST_CASE("A2 enumeration") {
    WeylGroupTable wt = weyl_enumerate(build_root_datum("A2"));
    REQUIRE(wt.size() == 6);
    // 1 + 2t + 2t^2 + t^3
    std::vector<int> by_len(4, 0);
    for (const auto& e : wt.elements) ++by_len[static_cast<size_t>(e.length)];
    CHECK(by_len == std::vector<int>{1, 2, 2, 1});
    CHECK(wt.max_length == 3);
    // all coroot actions distinct
    std::set<std::vector<int>> seen;
    for (const auto& e : wt.elements) seen.insert(e.coroot_action);
    CHECK(seen.size() == 6);
    CHECK(wt.index.size() == 6);
}

TEST_CASE("BFS length equals the inversion count") {
    for (const char* label : {"A2", "B2", "G2", "A1xA1", "A3"}) {
        CAPTURE(label);
        WeylGroupTable wt = weyl_enumerate(build_root_datum(label));
        for (int w = 0; w < static_cast<int>(wt.size()); ++w)
            CHECK(wt.elements[w].length == inversion_count(wt, w));
    }
}

TEST_CASE("BFS parents decrease length by one") {
    WeylGroupTable wt = weyl_enumerate(build_root_datum("B2"));
    for (const auto& e : wt.elements) {
        if (e.length == 0) {
            CHECK(e.parent == -1);
        } else {
            REQUIRE(e.parent >= 0);
            CHECK(wt.elements[static_cast<size_t>(e.parent)].length == e.length - 1);
            CHECK(e.gen >= 0);
            CHECK(e.gen < wt.rd.rank);
        }
    }
}

TEST_CASE("poincare polynomial both ways") {
    for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4",
                              "A1xA1", "A2xA1"}) {
        CAPTURE(label);
        RootDatum rd = build_root_datum(label);
        TargetPoly bfs = weyl_poincare(rd, PoincareMethod::Bfs);
        TargetPoly formula = weyl_poincare(rd, PoincareMethod::Formula);
        CHECK(bfs == formula);
        // degree = number of positive roots, total = |W|
        CHECK(bfs.max_total_degree() == rd.num_positive_roots());
        Rational total = 0;
        for (const auto& [k, c] : bfs.terms()) total += c;
        CHECK(total == Rational(rd.weyl_order()));
    }
}

TEST_CASE("G2 poincare frozen") {
    TargetPoly p = weyl_poincare(build_root_datum("G2"), PoincareMethod::Bfs);
    TargetPoly want = geometric_factor(2) * geometric_factor(6);
    CHECK(p == want);
    for (int e = 1; e <= 5; ++e) CHECK(p.t_coefficient(e) == (e == 0 || e == 6 ? 1 : 2));
}

TEST_CASE("enumeration limit throws") {
    CHECK_THROWS_AS(weyl_enumerate(build_root_datum("A4"), 100), LimitExceeded);
}

TEST_CASE("apply_coroot acts like the simple reflection") {
    RootDatum rd = build_root_datum("A2");
    WeylGroupTable wt = weyl_enumerate(rd);
    // find the generator s_0: length 1, gen 0
    int s0 = -1;
    for (int w = 0; w < static_cast<int>(wt.size()); ++w)
        if (wt.elements[w].length == 1 && wt.elements[w].gen == 0) s0 = w;
    REQUIRE(s0 >= 0);
    // s_0(alpha_0^vee) = -alpha_0^vee, s_0(alpha_1^vee) = alpha_0^vee + alpha_1^vee
    CHECK(wt.apply_coroot(s0, {1, 0}) == std::vector<int>{-1, 0});
    CHECK(wt.apply_coroot(s0, {0, 1}) == std::vector<int>{1, 1});
    CHECK(wt.apply_coroot(0, {3, -2}) == std::vector<int>{3, -2});
}

TEST_CASE("parabolic cosets for A2") {
    RootDatum rd = build_root_datum("A2");
    // zero: stabilizer is all of W, one coset
    CHECK(parabolic_coset_poincare(rd, zero_cocharacter(rd)) == TargetPoly::one());
    // regular lambda: full coset space, the whole Poincare polynomial
    Cocharacter reg = make_cocharacter(rd, {2, 2});
    REQUIRE(reg.is_dominant());
    CHECK(parabolic_coset_poincare(rd, reg) ==
          weyl_poincare(rd, PoincareMethod::Bfs));
    // lambda on one wall: W / <s_1>, three cosets 1 + t + t^2
    Cocharacter wall = make_cocharacter(rd, {2, 1});
    REQUIRE(wall.pairings[1] == 0);
    TargetPoly cosets = parabolic_coset_poincare(rd, wall);
    CHECK(cosets == geometric_factor(3));
    // non-dominant input is rejected
    Cocharacter bad = make_cocharacter(rd, {-1, 0});
    CHECK_THROWS_AS(parabolic_coset_poincare(rd, bad), NotDominant);
}

TEST_CASE("parabolic cosets by orbit size") {
    // coset count = |W| / |stabilizer|; sum of coefficients must match the
    // orbit size found by direct application of every element
    for (const char* label : {"B2", "G2"}) {
        CAPTURE(label);
        RootDatum rd = build_root_datum(label);
        WeylGroupTable wt = weyl_enumerate(rd);
        for (const auto& lam : dominant_cochars_upto(rd, 6)) {
            std::set<std::vector<int>> orbit;
            for (int w = 0; w < static_cast<int>(wt.size()); ++w)
                orbit.insert(wt.apply_coroot(w, lam.coords));
            TargetPoly p = parabolic_coset_poincare(rd, lam);
            Rational total = 0;
            for (const auto& [k, c] : p.terms()) total += c;
            CHECK(total == Rational(static_cast<long>(orbit.size())));
        }
    }
}

TEST_CASE("affine enumeration counts for A1") {
    AffineEnumeration ae = affine_enumerate(build_root_datum("A1"), 6);
    REQUIRE(ae.counts.size() == 7);
    CHECK(ae.counts[0] == 1);
    for (size_t k = 1; k < ae.counts.size(); ++k) CHECK(ae.counts[k] == 2);
    CHECK(ae.lengths_consistent);
}

TEST_CASE("affine enumeration counts for A2") {
    AffineEnumeration ae = affine_enumerate(build_root_datum("A2"), 3);
    REQUIRE(ae.counts.size() == 4);
    CHECK(ae.counts[0] == 1);
    CHECK(ae.counts[1] == 3);
    CHECK(ae.counts[2] == 6);
    CHECK(ae.counts[3] == 9);
    CHECK(ae.lengths_consistent);
}

TEST_CASE("affine poincare formula matches the BFS") {
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
        CAPTURE(label);
        RootDatum rd = build_root_datum(label);
        TargetPoly bfs = affine_poincare(rd, 8, PoincareMethod::Bfs);
        TargetPoly formula = affine_poincare(rd, 8, PoincareMethod::Formula);
        CHECK(bfs == formula);
        CHECK(bfs.max_total_degree() <= 8);
        CHECK(bfs.t_coefficient(0) == 1);
    }
}

TEST_CASE("affine growth is polynomial not exponential") {
    // counts for A1 stay flat; counts for A2 grow linearly (3k for k >= 1)
    AffineEnumeration ae = affine_enumerate(build_root_datum("A2"), 8);
    for (size_t k = 1; k < ae.counts.size(); ++k)
        CHECK(ae.counts[k] == Integer(3 * static_cast<long>(k)));
}
