#include "motives/series.hpp"

#include "motives/errors.hpp"

#include <algorithm>
#include <limits>

namespace motives {

namespace {

int weighted_degree(const std::vector<int>& a) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += static_cast<int>(i + 1) * a[i];
    return d;
}

void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// max of two floors where nullopt acts as -infinity
std::optional<int> weaker(const std::optional<int>& x, const std::optional<int>& y) {
    if (!x) return y;
    if (!y) return x;
    return std::max(*x, *y);
}

// floor + topdim with -infinity absorbing
std::optional<int> floor_plus(const std::optional<int>& f, const std::optional<int>& t) {
    if (!f || !t) return std::nullopt;
    return *f + *t;
}

}  // namespace

MotiveMonomial::MotiveMonomial(int l_exp, std::vector<int> a_exp)
    : l(l_exp), a(std::move(a_exp)) {
    trim(a);
    dim = l + weighted_degree(a);
}

MotiveMonomial MotiveMonomial::curve_symbol(int j) {
    if (j < 1) throw MotiveError("curve symbol index must be >= 1");
    std::vector<int> a(static_cast<size_t>(j), 0);
    a.back() = 1;
    return MotiveMonomial(0, std::move(a));
}

MotiveMonomial MotiveMonomial::times(const MotiveMonomial& o) const {
    std::vector<int> r(std::max(a.size(), o.a.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < o.a.size(); ++i) r[i] += o.a[i];
    return MotiveMonomial(l + o.l, std::move(r));
}

bool MotiveMonomial::divisible_by(const MotiveMonomial& o) const {
    if (o.a.size() > a.size()) return false;
    for (size_t i = 0; i < o.a.size(); ++i)
        if (a[i] < o.a[i]) return false;
    return true;
}

MotiveMonomial MotiveMonomial::divided_by(const MotiveMonomial& o) const {
    std::vector<int> r(std::max(a.size(), o.a.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < o.a.size(); ++i) r[i] -= o.a[i];
    return MotiveMonomial(l - o.l, std::move(r));
}

bool MonomialBefore::operator()(const MotiveMonomial& x, const MotiveMonomial& y) const {
    if (x.dim != y.dim) return x.dim > y.dim;
    if (x.l != y.l) return x.l > y.l;
    return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
}

GradedMotiveSeries GradedMotiveSeries::one() {
    return constant(Rational(1));
}

GradedMotiveSeries GradedMotiveSeries::constant(const Rational& c) {
    GradedMotiveSeries s;
    s.add_term(MotiveMonomial::unit(), c);
    return s;
}

GradedMotiveSeries GradedMotiveSeries::l_power(int k) {
    GradedMotiveSeries s;
    s.add_term(MotiveMonomial::l_power(k), Rational(1));
    return s;
}

GradedMotiveSeries GradedMotiveSeries::curve_symbol(int j) {
    GradedMotiveSeries s;
    s.add_term(MotiveMonomial::curve_symbol(j), Rational(1));
    return s;
}

GradedMotiveSeries GradedMotiveSeries::monomial(const Rational& c, const MotiveMonomial& m) {
    GradedMotiveSeries s;
    s.add_term(m, c);
    return s;
}

void GradedMotiveSeries::set_floor(std::optional<int> f) {
    floor_ = f;
    if (floor_) {
        auto it = terms_.begin();
        while (it != terms_.end()) {
            if (it->first.dim < *floor_)
                it = terms_.erase(it);
            else
                ++it;
        }
    }
}

std::optional<int> GradedMotiveSeries::top_dim() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.dim;
}

std::optional<int> GradedMotiveSeries::min_dim() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.dim;
}

void GradedMotiveSeries::add_term(const MotiveMonomial& m, const Rational& c) {
    if (c == 0) return;
    if (floor_ && m.dim < *floor_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedMotiveSeries::truncate_below(int f) {
    set_floor(floor_ ? std::max(*floor_, f) : f);
}

std::optional<Rational> GradedMotiveSeries::as_constant() const {
    if (!is_exact()) return std::nullopt;
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (!(m == MotiveMonomial::unit())) return std::nullopt;
    return c;
}

GradedMotiveSeries GradedMotiveSeries::operator-() const {
    GradedMotiveSeries r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

GradedMotiveSeries ring_add(const GradedMotiveSeries& x, const GradedMotiveSeries& y) {
    GradedMotiveSeries r;
    r.set_floor(weaker(x.floor(), y.floor()));
    for (const auto& [m, c] : x.terms()) r.add_term(m, c);
    for (const auto& [m, c] : y.terms()) r.add_term(m, c);
    return r;
}

GradedMotiveSeries ring_sub(const GradedMotiveSeries& x, const GradedMotiveSeries& y) {
    GradedMotiveSeries r;
    r.set_floor(weaker(x.floor(), y.floor()));
    for (const auto& [m, c] : x.terms()) r.add_term(m, c);
    for (const auto& [m, c] : y.terms()) r.add_term(m, -c);
    return r;
}

namespace {

GradedMotiveSeries mul_impl(const GradedMotiveSeries& x, const GradedMotiveSeries& y,
                            std::optional<int> extra_floor) {
    std::optional<int> f = weaker(floor_plus(x.floor(), y.top_dim()),
                                  floor_plus(y.floor(), x.top_dim()));
    f = weaker(f, extra_floor);
    GradedMotiveSeries r;
    r.set_floor(f);
    if (x.is_zero() || y.is_zero()) return r;
    // iterate the smaller factor on the outside
    const GradedMotiveSeries& outer = x.size() <= y.size() ? x : y;
    const GradedMotiveSeries& inner = x.size() <= y.size() ? y : x;
    int inner_top = *inner.top_dim();
    for (const auto& [mx, cx] : outer.terms()) {
        if (f && mx.dim + inner_top < *f) continue;  // nothing from this row survives
        for (const auto& [my, cy] : inner.terms()) {
            if (f && mx.dim + my.dim < *f) break;  // rows are dimension-sorted
            r.add_term(mx.times(my), cx * cy);
        }
    }
    return r;
}

}  // namespace

GradedMotiveSeries ring_mul(const GradedMotiveSeries& x, const GradedMotiveSeries& y) {
    return mul_impl(x, y, std::nullopt);
}

GradedMotiveSeries ring_mul(const GradedMotiveSeries& x, const GradedMotiveSeries& y,
                            int floor) {
    return mul_impl(x, y, floor);
}

GradedMotiveSeries scale(const GradedMotiveSeries& x, const Rational& c) {
    if (c == 0) {
        GradedMotiveSeries r;
        r.set_floor(x.floor());
        return r;
    }
    GradedMotiveSeries out;
    out.set_floor(x.floor());
    for (const auto& [m, co] : x.terms()) out.add_term(m, co * c);
    return out;
}

GradedMotiveSeries shift_l(const GradedMotiveSeries& x, int k) {
    GradedMotiveSeries r;
    if (x.floor()) r.set_floor(*x.floor() + k);
    for (const auto& [m, c] : x.terms()) {
        MotiveMonomial sm(m.l + k, m.a);
        r.add_term(sm, c);
    }
    return r;
}

GradedMotiveSeries pow(const GradedMotiveSeries& x, int e) {
    if (e < 0) throw MotiveError("pow: negative exponent, use invert_unit");
    GradedMotiveSeries acc = GradedMotiveSeries::one();
    for (int i = 0; i < e; ++i) acc = ring_mul(acc, x);
    return acc;
}

GradedMotiveSeries invert_unit(const GradedMotiveSeries& x, int floor) {
    if (x.is_zero()) throw NotAUnit("cannot invert the zero series");
    auto lead_it = x.terms().begin();
    const MotiveMonomial& lead = lead_it->first;
    const Rational& lc = lead_it->second;
    if (!lead.is_l_power() || (lc != 1 && lc != -1))
        throw NotAUnit("leading term must be +-L^k");
    if (x.size() > 1) {
        auto second = std::next(lead_it);
        if (second->first.dim == lead.dim)
            throw NotAUnit("leading dimension is not unique");
    }
    int k = lead.l;
    // x = lc * L^k * (1 - r) with topdim(r) < 0
    GradedMotiveSeries r;
    for (auto it = std::next(lead_it); it != x.terms().end(); ++it) {
        MotiveMonomial m(it->first.l - k, it->first.a);
        r.add_term(m, -(it->second) / lc);
    }
    int inner_floor = floor + k;
    r.truncate_below(inner_floor);
    GradedMotiveSeries sum = GradedMotiveSeries::one();
    GradedMotiveSeries term = GradedMotiveSeries::one();
    while (true) {
        term = ring_mul(term, r, inner_floor);
        if (term.is_zero()) break;
        sum = ring_add(sum, term);
    }
    GradedMotiveSeries inv = shift_l(scale(sum, Rational(1) / lc), -k);
    // a floored input limits how well its inverse can be known
    std::optional<int> f(floor);
    if (x.floor()) f = std::max(floor, *x.floor() - 2 * k);
    inv.set_floor(f);
    return inv;
}

GradedMotiveSeries exact_div(const GradedMotiveSeries& n, const GradedMotiveSeries& d) {
    if (!n.is_exact() || !d.is_exact())
        throw MotiveError("exact_div requires exact operands");
    if (n.is_zero()) return GradedMotiveSeries::zero();
    if (d.is_zero()) throw DivisionByZero("division by the zero series");
    int floor_q = *n.min_dim() - *d.min_dim();
    GradedMotiveSeries inv = invert_unit(d, floor_q - *n.top_dim());
    GradedMotiveSeries q = ring_mul(n, inv);
    q.set_floor(std::nullopt);  // candidate quotient, verified below
    if (!(ring_mul(q, d) == n)) throw MotiveError("series division is not exact");
    return q;
}

SeriesComparison compare(const GradedMotiveSeries& x, const GradedMotiveSeries& y) {
    SeriesComparison out;
    if (x.floor() || y.floor()) {
        out.floor_used = std::max(x.floor().value_or(std::numeric_limits<int>::min()),
                                  y.floor().value_or(std::numeric_limits<int>::min()));
    }
    auto ix = x.terms().begin(), iy = y.terms().begin();
    MonomialBefore before;
    auto relevant = [&](const MotiveMonomial& m) {
        return !out.floor_used || m.dim >= *out.floor_used;
    };
    while (ix != x.terms().end() || iy != y.terms().end()) {
        if (ix != x.terms().end() && !relevant(ix->first)) { ++ix; continue; }
        if (iy != y.terms().end() && !relevant(iy->first)) { ++iy; continue; }
        if (ix == x.terms().end()) {
            out.equal = false;
            out.first_discrepancy = {iy->first, Rational(0), iy->second};
            return out;
        }
        if (iy == y.terms().end()) {
            out.equal = false;
            out.first_discrepancy = {ix->first, ix->second, Rational(0)};
            return out;
        }
        if (ix->first == iy->first) {
            if (ix->second != iy->second) {
                out.equal = false;
                out.first_discrepancy = {ix->first, ix->second, iy->second};
                return out;
            }
            ++ix, ++iy;
        } else if (before(ix->first, iy->first)) {
            out.equal = false;
            out.first_discrepancy = {ix->first, ix->second, Rational(0)};
            return out;
        } else {
            out.equal = false;
            out.first_discrepancy = {iy->first, Rational(0), iy->second};
            return out;
        }
    }
    return out;
}

bool operator==(const GradedMotiveSeries& x, const GradedMotiveSeries& y) {
    return compare(x, y).equal;
}

}  // namespace motives
