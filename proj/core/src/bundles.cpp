#include "motives/bundles.hpp"

#include "motives/errors.hpp"
#include "motives/weyl.hpp"
#include "motives/zeta.hpp"

#include <algorithm>

namespace motives {

namespace {

GradedMotiveSeries l_geom(int count) {
    // 1 + L + ... + L^{count-1}
    GradedMotiveSeries s;
    for (int k = 0; k < count; ++k) s.add_term(MotiveMonomial::l_power(k), 1);
    return s;
}

}  // namespace

ClosedMotive conjecture_motive(const RootDatum& rd, const CurveData& curve) {
    ClosedMotive out = ClosedMotive::constant(Rational(rd.pi1_order));
    out.mul_l_power((curve.genus - 1) * rd.dim);
    for (int d : rd.degrees) out *= zeta_special_value(curve, d);
    return out;
}

ClosedMotive tamagawa_motive(const RootDatum& rd, const CurveData& curve,
                             const ClosedMotive& bun_motive) {
    ClosedMotive zprod = ClosedMotive::one();
    for (int d : rd.degrees) zprod *= zeta_special_value(curve, d);
    ClosedMotive x = bun_motive;
    x.mul_l_power((1 - curve.genus) * rd.dim);
    return div(x, zprod);
}

ClosedMotive aut_motive_p1(const RootDatum& rd, const Cocharacter& lambda) {
    TargetPoly cp = parabolic_coset_poincare(rd, lambda);  // throws NotDominant
    GradedMotiveSeries num;
    for (const auto& [key, c] : cp.terms())
        num.add_term(MotiveMonomial::l_power(key.first - lambda.pairing_2rho - rd.dim), c);
    std::vector<DenominatorFactor> den;
    for (int d : rd.degrees) den.push_back(one_minus_l_inv(d));
    ClosedMotive out(1, std::move(num), std::move(den));
    out.mark_torsor_relation();
    return out;
}

GradedMotiveSeries p1_stratification_motive(const RootDatum& rd, int floor) {
    GradedMotiveSeries total;
    total.set_floor(floor);
    for (const Cocharacter& lam : dominant_cochars_upto(rd, -floor + rd.dim))
        total = ring_add(total, expand(aut_motive_p1(rd, lam), floor));
    return total;
}

VerificationReport kaiser_identity_check(const RootDatum& rd, int floor) {
    Stopwatch sw;
    GradedMotiveSeries lhs;
    lhs.set_floor(floor);
    for (const Cocharacter& lam : dominant_cochars_upto(rd, -floor + rd.dim)) {
        const TargetPoly coset = parabolic_coset_poincare(rd, lam);
        for (const auto& [key, c] : coset.terms())
            lhs.add_term(MotiveMonomial::l_power(key.first - lam.pairing_2rho), c);
    }
    ClosedMotive closed = ClosedMotive::constant(Rational(rd.pi1_order));
    for (int d : rd.degrees) closed.mul_den(one_minus_l_inv(d - 1));
    GradedMotiveSeries rhs = expand(closed, floor);
    auto rep = make_series_report(
        "kaiser-identity", {{"group", rd.label}, {"floor", std::to_string(floor)}},
        std::move(lhs), std::move(rhs));
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

namespace {

// tuples (m_2, ..., m_n) with sum_i (i-1) m_i <= budget
void sln_tuple_sum(int i, int n, int budget, const GradedMotiveSeries& partial, int lshift,
                   const std::vector<GradedMotiveSeries>& syms, GradedMotiveSeries& total) {
    if (i > n) {
        total = ring_add(total, shift_l(partial, lshift));
        return;
    }
    for (int m = 0; (i - 1) * m <= budget; ++m)
        sln_tuple_sum(i + 1, n, budget - (i - 1) * m, ring_mul(partial, syms[static_cast<size_t>(m)]),
                      lshift - i * m, syms, total);
}

}  // namespace

VerificationReport sln_generating_identity(int n, const CurveData& curve, int floor) {
    if (n < 2) throw InvalidType("rank parameter n must be >= 2");
    if (n > 12) throw LimitExceeded("rank parameter n too large for expansion");
    Stopwatch sw;
    ClosedMotive zprod = ClosedMotive::one();
    for (int i = 2; i <= n; ++i) zprod *= zeta_special_value(curve, i);
    GradedMotiveSeries lhs = expand(zprod, floor);
    const int budget = std::max(0, -floor);
    std::vector<GradedMotiveSeries> syms;
    for (int m = 0; m <= budget; ++m) syms.push_back(sym_class(curve, m));
    GradedMotiveSeries rhs;
    rhs.set_floor(floor);
    sln_tuple_sum(2, n, budget, GradedMotiveSeries::one(), 0, syms, rhs);
    auto rep = make_series_report("sln-generating",
                                  {{"n", std::to_string(n)},
                                   {"curve", curve.label},
                                   {"floor", std::to_string(floor)}},
                                  std::move(lhs), std::move(rhs));
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

namespace {

// tuples (m_1, ..., m_n) with fixed total S and m_1 > 2g-2
void divisor_tuple_sum(int i, int n, int remaining, int g, int weight_acc,
                       const GradedMotiveSeries& partial,
                       const std::vector<GradedMotiveSeries>& syms,
                       GradedMotiveSeries& total) {
    if (i > n) {
        int m1 = remaining;
        if (m1 <= 2 * g - 2) return;
        GradedMotiveSeries term = ring_mul(partial, l_geom(m1 - g + 1));
        total = ring_add(total, shift_l(term, weight_acc + (n - 1) * m1));
        return;
    }
    for (int m = 0; m <= remaining; ++m)
        divisor_tuple_sum(i + 1, n, remaining - m, g, weight_acc + (n - i) * m,
                          ring_mul(partial, syms[static_cast<size_t>(m)]), syms, total);
}

}  // namespace

GradedMotiveSeries sln_matrix_divisor_sum(int n, const CurveData& curve, int degD) {
    if (n < 2) throw InvalidType("rank parameter n must be >= 2");
    const int g = curve.genus;
    if (degD < 1 || n * degD - 2 * g + 2 <= 0)
        throw DegTooSmall("divisor degree too small for the fixed-point sum");
    const int total_deg = n * degD;
    std::vector<GradedMotiveSeries> syms;
    for (int m = 0; m <= total_deg; ++m) syms.push_back(sym_class(curve, m));
    GradedMotiveSeries total;
    divisor_tuple_sum(2, n, total_deg, g, 0, GradedMotiveSeries::one(), syms, total);
    return shift_l(total, -n * n * (degD + 1 - g));
}

namespace {

void check_simply_connected(const RootDatum& rd) {
    if (rd.isogeny != Isogeny::SimplyConnected)
        throw InvalidType("gauge comparisons are stated for the simply connected form");
}

RealizedClosed conjecture_poincare_side(const RootDatum& rd, int genus) {
    ClosedMotive conj = conjecture_motive(rd, universal_curve(genus));
    RealizedClosed rc = realize_closed(conj, poincare_realization(genus));
    rc.numerator = rc.numerator.inverted_variables().shifted(2 * (genus - 1) * rd.dim, 0);
    for (auto& d : rc.denominators) d = d.inverted_variables();
    return rc;
}

RealizedClosed poincare_product_side(const RootDatum& rd, int genus) {
    RealizedClosed out;
    out.numerator = TargetPoly::one();
    for (int d : rd.degrees) {
        TargetPoly f = TargetPoly::one();
        f.add_term(2 * d - 1, 0, 1);
        out.numerator = out.numerator * pow(f, 2 * genus);
        TargetPoly d1 = TargetPoly::one();
        d1.add_term(2 * d, 0, -1);
        TargetPoly d2 = TargetPoly::one();
        d2.add_term(2 * (d - 1), 0, -1);
        out.denominators.push_back(d1);
        out.denominators.push_back(d2);
    }
    return out;
}

RealizedClosed conjecture_serre_side(const RootDatum& rd, int genus) {
    ClosedMotive conj = conjecture_motive(rd, universal_curve(genus));
    RealizedClosed rc = realize_closed(conj, serre_realization(genus));
    rc.numerator = rc.numerator.inverted_variables()
                       .shifted((genus - 1) * rd.dim, (genus - 1) * rd.dim);
    for (auto& d : rc.denominators) d = d.inverted_variables();
    return rc;
}

RealizedClosed serre_product_side(const RootDatum& rd, int genus) {
    RealizedClosed out;
    out.numerator = TargetPoly::one();
    for (int d : rd.degrees) {
        TargetPoly f1 = TargetPoly::one();
        f1.add_term(d, d - 1, 1);
        TargetPoly f2 = TargetPoly::one();
        f2.add_term(d - 1, d, 1);
        out.numerator = out.numerator * pow(f1, genus) * pow(f2, genus);
        TargetPoly d1 = TargetPoly::one();
        d1.add_term(d, d, -1);
        TargetPoly d2 = TargetPoly::one();
        d2.add_term(d - 1, d - 1, -1);
        out.denominators.push_back(d1);
        out.denominators.push_back(d2);
    }
    return out;
}

TargetPoly cross_multiplied(const RealizedClosed& side, const std::vector<TargetPoly>& other_den) {
    TargetPoly out = side.numerator * TargetPoly::constant(side.scalar);
    for (const auto& d : other_den) out = out * d;
    return out;
}

TargetPoly ascending_series(const RealizedClosed& rc, int maxdeg) {
    int extra = std::max(0, -rc.numerator.min_total_degree());
    const int bound = maxdeg + extra;
    TargetPoly acc = rc.numerator * TargetPoly::constant(rc.scalar);
    for (const auto& d : rc.denominators)
        acc = truncated_mul(acc, series_inverse(d, bound), bound);
    return acc.truncated(maxdeg);
}

std::map<std::string, std::string> gauge_inputs(const RootDatum& rd, int genus) {
    return {{"group", rd.label}, {"genus", std::to_string(genus)}};
}

}  // namespace

VerificationReport gauge_poincare_check(const RootDatum& rd, int genus, int maxdeg) {
    check_simply_connected(rd);
    Stopwatch sw;
    TargetPoly lhs = ascending_series(conjecture_poincare_side(rd, genus), maxdeg);
    TargetPoly rhs = ascending_series(poincare_product_side(rd, genus), maxdeg);
    auto rep = make_poly_report("gauge-poincare-series", gauge_inputs(rd, genus),
                                std::move(lhs), std::move(rhs), maxdeg);
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

VerificationReport gauge_poincare_exact_check(const RootDatum& rd, int genus) {
    check_simply_connected(rd);
    Stopwatch sw;
    RealizedClosed a = conjecture_poincare_side(rd, genus);
    RealizedClosed b = poincare_product_side(rd, genus);
    auto rep = make_poly_report("gauge-poincare-exact", gauge_inputs(rd, genus),
                                cross_multiplied(a, b.denominators),
                                cross_multiplied(b, a.denominators));
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

VerificationReport gauge_serre_check(const RootDatum& rd, int genus, int maxdeg) {
    check_simply_connected(rd);
    Stopwatch sw;
    TargetPoly lhs = ascending_series(conjecture_serre_side(rd, genus), maxdeg);
    TargetPoly rhs = ascending_series(serre_product_side(rd, genus), maxdeg);
    auto rep = make_poly_report("gauge-serre-series", gauge_inputs(rd, genus),
                                std::move(lhs), std::move(rhs), maxdeg);
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

VerificationReport count_check(const RootDatum& rd, const CurveData& curve) {
    if (!curve.has_counts) throw ConfigError("count check needs a curve with point counts");
    Stopwatch sw;
    ClosedMotive conj = conjecture_motive(rd, curve);
    Rational lhs = counting_measure(conj, count_realization(curve));
    Rational zprod = 1;
    for (int d : rd.degrees) zprod *= weil_zeta_value(curve.q, curve.weil, d);
    Rational rhs =
        Rational(rd.pi1_order) * rational_pow(curve.q, (curve.genus - 1) * rd.dim) * zprod;
    std::map<std::string, std::string> inputs{{"group", rd.label}, {"curve", curve.label}};
    if (zprod != 0)
        inputs["vol"] = rational_to_string(
            rational_pow(curve.q, (1 - curve.genus) * rd.dim) / zprod);
    std::optional<Rational> tau = tamagawa_motive(rd, curve, conj).as_scalar();
    if (tau) inputs["tau"] = rational_to_string(*tau);
    auto rep = make_value_report("count-closed-form", std::move(inputs), lhs, rhs);
    if (!tau || *tau != Rational(rd.pi1_order)) {
        rep.equal = false;
        if (rep.first_discrepancy.empty())
            rep.first_discrepancy = "tamagawa value does not reduce to |pi1|";
    }
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

int instability_dim_bound(const RootDatum& rd, int genus, int m) {
    if (m < 0) throw MotiveError("instability degree must be >= 0");
    return rd.dim * (genus - 1) - m;
}

BundleMotiveReport bundle_motive_report(const RootDatum& rd, const CurveData& curve) {
    BundleMotiveReport rep;
    rep.group_label = rd.label;
    rep.curve_label = curve.label;
    rep.conjecture_value = conjecture_motive(rd, curve);
    rep.tamagawa = tamagawa_motive(rd, curve, rep.conjecture_value);
    if (curve.has_counts)
        rep.realized_values["count:q=" + rational_to_string(curve.q)] = rational_to_string(
            counting_measure(rep.conjecture_value, count_realization(curve)));
    const int want = (curve.genus - 1) * rd.dim;
    GradedMotiveSeries head = expand(rep.conjecture_value, want - 1);
    if (!head.is_zero() && head.top_dim() == want)
        rep.notes.push_back("top dimension = (g-1) dim G = " + std::to_string(want));
    else
        rep.notes.push_back("top dimension differs from (g-1) dim G = " + std::to_string(want));
    for (const auto& lint : curve.lints) rep.notes.push_back(lint);
    return rep;
}

}  // namespace motives
