#include "motives/zeta.hpp"

#include "motives/errors.hpp"

#include <algorithm>

namespace motives {

namespace {

GradedMotiveSeries l_geometric(int top) {
    // 1 + L + ... + L^top
    GradedMotiveSeries s;
    for (int k = 0; k <= top; ++k) s.add_term(MotiveMonomial::l_power(k), 1);
    return s;
}

}  // namespace

GradedMotiveSeries sym_class(const CurveData& curve, int n) {
    if (n < 0) throw MotiveError("symmetric power index must be >= 0");
    GradedMotiveSeries out = l_geometric(n);
    int top = std::min(n, 2 * curve.genus);
    for (int i = 1; i <= top; ++i)
        out = ring_add(out, ring_mul(curve.coefficient(i), l_geometric(n - i)));
    return out;
}

ClosedMotive zeta_special_value(const CurveData& curve, int s) {
    if (s < 2) throw DivergentSpecialValue("zeta special value diverges for exponent " +
                                           std::to_string(s));
    GradedMotiveSeries num = GradedMotiveSeries::one();
    for (int j = 1; j <= 2 * curve.genus; ++j)
        num = ring_add(num, shift_l(curve.coefficient(j), -j * s));
    return ClosedMotive(1, num, {one_minus_l_inv(s), one_minus_l_inv(s - 1)});
}

TargetPoly poincare_sym(int genus, int n) {
    if (genus < 0 || n < 0) throw MotiveError("poincare_sym needs genus, n >= 0");
    TargetPoly out = TargetPoly::zero();
    int top = std::min(n, 2 * genus);
    for (int i = 0; i <= top; ++i) {
        TargetPoly geo = TargetPoly::zero();  // 1 + t^2 + ... + t^{2(n-i)}
        for (int k = 0; k <= n - i; ++k) geo.add_term(2 * k, 0, 1);
        out = out + geo.shifted(i, 0) * TargetPoly::constant(Rational(binomial(2 * genus, i)));
    }
    return out;
}

Rational weil_zeta_value(const Rational& q, const std::vector<Rational>& weil, int s) {
    if (s < 2) throw DivergentSpecialValue("zeta special value diverges for exponent " +
                                           std::to_string(s));
    Rational num = 0;
    for (size_t j = 0; j < weil.size(); ++j)
        num += weil[j] * rational_pow(q, -static_cast<long>(j) * s);
    Rational den = (1 - rational_pow(q, -s)) * (1 - rational_pow(q, -(s - 1)));
    if (den == 0) throw DivisionByZero("zeta denominator vanishes");
    return num / den;
}

}  // namespace motives
