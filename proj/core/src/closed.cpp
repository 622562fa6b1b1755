#include "motives/closed.hpp"

#include "motives/errors.hpp"
#include "motives/root_datum.hpp"

#include <algorithm>

namespace motives {

GradedMotiveSeries DenominatorFactor::poly() const {
    GradedMotiveSeries p;
    if (kind == Kind::OneMinusLInv) {
        p.add_term(MotiveMonomial::unit(), Rational(1));
        p.add_term(MotiveMonomial::l_power(-k), Rational(-1));
    } else {
        p.add_term(MotiveMonomial::l_power(k), Rational(1));
        p.add_term(MotiveMonomial::unit(), Rational(-1));
    }
    return p;
}

int DenominatorFactor::inverse_top_dim() const {
    return kind == Kind::OneMinusLInv ? 0 : -k;
}

DenominatorFactor one_minus_l_inv(int k) {
    if (k < 1) throw MotiveError("denominator factor needs k >= 1");
    return DenominatorFactor{DenominatorFactor::Kind::OneMinusLInv, k};
}

DenominatorFactor l_pow_minus_one(int m) {
    if (m < 1) throw MotiveError("denominator factor needs m >= 1");
    return DenominatorFactor{DenominatorFactor::Kind::LPowMinusOne, m};
}

ClosedMotive::ClosedMotive() : scalar_(1), numerator_(GradedMotiveSeries::one()) {}

ClosedMotive::ClosedMotive(GradedMotiveSeries numerator)
    : scalar_(1), numerator_(std::move(numerator)) {
    if (!numerator_.is_exact()) throw MotiveError("closed form needs an exact numerator");
}

ClosedMotive::ClosedMotive(Rational scalar, GradedMotiveSeries numerator,
                           std::vector<DenominatorFactor> denominator)
    : scalar_(std::move(scalar)), numerator_(std::move(numerator)), den_(std::move(denominator)) {
    if (!numerator_.is_exact()) throw MotiveError("closed form needs an exact numerator");
    std::sort(den_.begin(), den_.end());
}

ClosedMotive ClosedMotive::one() { return ClosedMotive(); }

ClosedMotive ClosedMotive::constant(const Rational& c) {
    ClosedMotive m;
    m.scalar_ = c;
    return m;
}

ClosedMotive ClosedMotive::l_power(int k) {
    return ClosedMotive(GradedMotiveSeries::l_power(k));
}

std::optional<Rational> ClosedMotive::as_scalar() const {
    if (is_zero()) return Rational(0);
    if (!den_.empty()) return std::nullopt;
    auto c = numerator_.as_constant();
    if (!c) return std::nullopt;
    return scalar_ * *c;
}

ClosedMotive& ClosedMotive::operator*=(const ClosedMotive& o) {
    scalar_ *= o.scalar_;
    numerator_ = ring_mul(numerator_, o.numerator_);
    den_.insert(den_.end(), o.den_.begin(), o.den_.end());
    std::sort(den_.begin(), den_.end());
    torsor_ = torsor_ || o.torsor_;
    return *this;
}

ClosedMotive& ClosedMotive::mul_scalar(const Rational& c) {
    scalar_ *= c;
    return *this;
}

ClosedMotive& ClosedMotive::mul_l_power(int k) {
    numerator_ = shift_l(numerator_, k);
    return *this;
}

ClosedMotive& ClosedMotive::mul_den(const DenominatorFactor& f) {
    den_.insert(std::upper_bound(den_.begin(), den_.end(), f), f);
    return *this;
}

ClosedMotive ClosedMotive::simplified() const {
    ClosedMotive r(*this);
    bool progress = true;
    while (progress && !r.den_.empty() && !r.numerator_.is_zero()) {
        progress = false;
        for (size_t i = 0; i < r.den_.size(); ++i) {
            GradedMotiveSeries f = r.den_[i].poly();
            try {
                GradedMotiveSeries q = exact_div(r.numerator_, f);
                r.numerator_ = std::move(q);
                r.den_.erase(r.den_.begin() + static_cast<long>(i));
                progress = true;
                break;
            } catch (const MotiveError&) {
                // factor does not divide, keep it
            }
        }
    }
    return r;
}

ClosedMotive mul(const ClosedMotive& x, const ClosedMotive& y) {
    ClosedMotive r(x);
    r *= y;
    return r;
}

ClosedMotive add(const ClosedMotive& x, const ClosedMotive& y) {
    // common denominator: per factor shape, the larger multiplicity
    std::vector<DenominatorFactor> common;
    auto ix = x.denominator().begin(), ex = x.denominator().end();
    auto iy = y.denominator().begin(), ey = y.denominator().end();
    while (ix != ex || iy != ey) {
        if (ix == ex) { common.push_back(*iy++); continue; }
        if (iy == ey) { common.push_back(*ix++); continue; }
        if (*ix == *iy) { common.push_back(*ix); ++ix; ++iy; }
        else if (*ix < *iy) common.push_back(*ix++);
        else common.push_back(*iy++);
    }
    auto lifted = [&common](const ClosedMotive& m) {
        GradedMotiveSeries n = scale(m.numerator(), m.scalar());
        std::vector<DenominatorFactor> missing = common;
        for (const auto& f : m.denominator()) {
            auto it = std::find(missing.begin(), missing.end(), f);
            missing.erase(it);
        }
        for (const auto& f : missing) n = ring_mul(n, f.poly());
        return n;
    };
    GradedMotiveSeries num = ring_add(lifted(x), lifted(y));
    ClosedMotive r(Rational(1), std::move(num), std::move(common));
    if (x.uses_torsor_relation() || y.uses_torsor_relation()) r.mark_torsor_relation();
    return r;
}

ClosedMotive div(const ClosedMotive& x, const ClosedMotive& y) {
    if (y.is_zero()) throw DivisionByZero("division by zero closed form");
    // cancel den factors shared by both sides
    std::vector<DenominatorFactor> xd = x.denominator(), yd = y.denominator();
    for (auto it = yd.begin(); it != yd.end();) {
        auto shared = std::find(xd.begin(), xd.end(), *it);
        if (shared != xd.end()) {
            xd.erase(shared);
            it = yd.erase(it);
        } else {
            ++it;
        }
    }
    // remaining denominators of y multiply the dividend's numerator
    GradedMotiveSeries num = x.numerator();
    for (const auto& f : yd) num = ring_mul(num, f.poly());
    num = exact_div(num, y.numerator());
    ClosedMotive r(x.scalar() / y.scalar(), std::move(num), std::move(xd));
    if (x.uses_torsor_relation() || y.uses_torsor_relation()) r.mark_torsor_relation();
    return r.simplified();
}

ClosedMotive pow(const ClosedMotive& x, int e) {
    if (e < 0) throw MotiveError("pow: negative exponent");
    ClosedMotive acc = ClosedMotive::one();
    for (int i = 0; i < e; ++i) acc *= x;
    return acc;
}

GradedMotiveSeries expand(const ClosedMotive& x, int floor) {
    GradedMotiveSeries acc = scale(x.numerator(), x.scalar());
    if (acc.is_zero()) {
        acc.set_floor(floor);
        return acc;
    }
    int num_top = *acc.top_dim();
    int inv_tops = 0;
    for (const auto& f : x.denominator()) inv_tops += f.inverse_top_dim();
    for (size_t i = 0; i < x.denominator().size(); ++i) {
        const auto& f = x.denominator()[i];
        // expand this factor far enough for the final floor given the top
        // dimensions contributed by everything else
        int others = num_top + inv_tops - f.inverse_top_dim();
        GradedMotiveSeries inv = invert_unit(f.poly(), floor - others);
        acc = ring_mul(acc, inv, floor);
    }
    acc.truncate_below(floor);
    acc.set_floor(floor);
    return acc;
}

ClosedMotive gl_motive(int n) {
    if (n < 1) throw MotiveError("gl_motive needs n >= 1");
    if (n > 30) throw LimitExceeded("gl_motive: n too large");
    GradedMotiveSeries num = GradedMotiveSeries::one();
    for (int k = 0; k < n; ++k) {
        GradedMotiveSeries f;
        f.add_term(MotiveMonomial::l_power(n), Rational(1));
        f.add_term(MotiveMonomial::l_power(k), Rational(-1));
        num = ring_mul(num, f);
    }
    return ClosedMotive(std::move(num));
}

ClosedMotive quotient_stack_motive(const ClosedMotive& x, int n) {
    if (n < 1) throw MotiveError("quotient_stack_motive needs n >= 1");
    ClosedMotive r(x);
    // 1/gl_motive(n) = L^{-n^2} prod_{k=1}^{n} (1 - L^-k)^{-1}
    r.mul_l_power(-n * n);
    for (int k = 1; k <= n; ++k) r.mul_den(one_minus_l_inv(k));
    return r.simplified();
}

ClosedMotive strata_sum_motive(const std::vector<std::pair<ClosedMotive, int>>& strata) {
    ClosedMotive acc = ClosedMotive::constant(Rational(0));
    for (const auto& [cls, n] : strata) acc = add(acc, quotient_stack_motive(cls, n));
    return acc.simplified();
}

ClosedMotive group_motive(const RootDatum& rd) {
    GradedMotiveSeries num = GradedMotiveSeries::one();
    for (int d : rd.degrees) num = ring_mul(num, one_minus_l_inv(d).poly());
    num = shift_l(num, rd.dim);
    return ClosedMotive(std::move(num));
}

ClosedMotive classifying_motive(const RootDatum& rd) {
    std::vector<DenominatorFactor> den;
    den.reserve(rd.degrees.size());
    for (int d : rd.degrees) den.push_back(one_minus_l_inv(d));
    ClosedMotive r(Rational(1), GradedMotiveSeries::l_power(-rd.dim), std::move(den));
    r.mark_torsor_relation();
    return r;
}

}  // namespace motives
