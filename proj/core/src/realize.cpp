#include "motives/realize.hpp"

#include "motives/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace motives {

const TargetPoly& Realization::a_image(int j) const {
    if (j < 1 || j > static_cast<int>(a_images.size()))
        throw MotiveError("realization has no image for curve symbol a" + std::to_string(j));
    return a_images[static_cast<size_t>(j) - 1];
}

Realization poincare_realization(int genus) {
    Realization r;
    r.name = "poincare";
    r.l_coeff = 1;
    r.l_eu = 2;
    for (int j = 1; j <= 2 * genus; ++j)
        r.a_images.push_back(TargetPoly::t_power(Rational(binomial(2 * genus, j)), j));
    return r;
}

Realization serre_realization(int genus) {
    Realization r;
    r.name = "serre";
    r.l_coeff = 1;
    r.l_eu = 1;
    r.l_ev = 1;
    for (int j = 1; j <= 2 * genus; ++j) {
        TargetPoly img = TargetPoly::zero();
        for (int p = std::max(0, j - genus); p <= std::min(j, genus); ++p)
            img.add_term(p, j - p, Rational(binomial(genus, p) * binomial(genus, j - p)));
        r.a_images.push_back(img);
    }
    return r;
}

Realization count_realization(const Rational& q, const std::vector<Rational>& weil) {
    if (weil.empty() || weil.size() % 2 != 1 || weil[0] != 1)
        throw ConfigError("numerator value list must look like 1, a_1, ..., a_2g");
    Realization r;
    r.name = "count";
    r.l_coeff = q;
    for (size_t j = 1; j < weil.size(); ++j)
        r.a_images.push_back(TargetPoly::constant(weil[j]));
    return r;
}

Realization count_realization(const CurveData& curve) {
    if (!curve.has_counts)
        throw ConfigError("counting specialization needs a curve with point counts");
    return count_realization(curve.q, curve.weil);
}

TargetPoly realize_series(const GradedMotiveSeries& s, const Realization& r) {
    TargetPoly out = TargetPoly::zero();
    for (const auto& [mono, coeff] : s.terms()) {
        TargetPoly term = TargetPoly::monomial(coeff * rational_pow(r.l_coeff, mono.l),
                                               mono.l * r.l_eu, mono.l * r.l_ev);
        for (size_t j = 0; j < mono.a.size(); ++j)
            if (mono.a[j] > 0) term = term * pow(r.a_image(static_cast<int>(j) + 1), mono.a[j]);
        out += term;
    }
    return out;
}

RealizedClosed realize_closed(const ClosedMotive& x, const Realization& r) {
    RealizedClosed out;
    out.scalar = x.scalar();
    out.numerator = realize_series(x.numerator(), r);
    for (const auto& f : x.denominator()) out.denominators.push_back(realize_series(f.poly(), r));
    return out;
}

namespace {

Rational scalar_value(const TargetPoly& p, const char* what) {
    Rational c = p.coefficient(0, 0);
    TargetPoly rest = p;
    rest.add_term(0, 0, -c);
    if (!rest.is_zero()) throw MotiveError(std::string(what) + " did not specialize to a scalar");
    return c;
}

}  // namespace

CountEstimate counting_measure(const GradedMotiveSeries& s, const Realization& r) {
    if (!r.scalar_valued())
        throw MotiveError("counting measure needs a scalar-valued specialization");
    const Rational q = r.l_coeff;
    CountEstimate est;
    est.exact = !s.floor().has_value();
    if (!est.exact && rational_abs(q) <= 1)
        throw NonConvergent("truncated sum does not converge for |q| <= 1");
    const int floor = s.floor().value_or(0);
    std::map<int, Rational> window_mass;  // per-dim coefficient scale near the edge
    for (const auto& [mono, coeff] : s.terms()) {
        Rational val = coeff * rational_pow(q, mono.l);
        for (size_t j = 0; j < mono.a.size(); ++j)
            if (mono.a[j] > 0)
                val *= rational_pow(scalar_value(r.a_image(static_cast<int>(j) + 1),
                                                 "curve symbol"),
                                    mono.a[j]);
        est.value += val;
        if (!est.exact && mono.dim <= floor + 4)
            window_mass[mono.dim] += rational_abs(val) * rational_pow(rational_abs(q), -mono.dim);
    }
    if (!est.exact) {
        Rational window_max = 1;
        for (const auto& [dim, mass] : window_mass) window_max = std::max(window_max, mass);
        // terms of dimension d < floor contribute about (a + b|d|) q^d each;
        // bound the tail by window_max * q^{floor-1} * (2/(1-s) + s/(1-s)^2)
        Rational sratio = 1 / rational_abs(q);
        Rational geom = 2 / (1 - sratio) + sratio / ((1 - sratio) * (1 - sratio));
        est.tail_bound = window_max * rational_pow(rational_abs(q), floor - 1) * geom;
    }
    return est;
}

Rational counting_measure(const ClosedMotive& x, const Realization& r) {
    if (!r.scalar_valued())
        throw MotiveError("counting measure needs a scalar-valued specialization");
    const Rational q = r.l_coeff;
    if (!x.denominator().empty() && rational_abs(q) <= 1)
        throw NonConvergent("geometric denominator expansion diverges for |q| <= 1");
    CountEstimate num = counting_measure(x.numerator(), r);
    Rational out = x.scalar() * num.value;
    for (const auto& f : x.denominator()) {
        Rational fv = f.kind == DenominatorFactor::Kind::OneMinusLInv
                          ? 1 - rational_pow(q, -f.k)
                          : rational_pow(q, f.k) - 1;
        if (fv == 0) throw DivisionByZero("denominator factor vanishes at q");
        out /= fv;
    }
    return out;
}

}  // namespace motives
