#include "motives/target_poly.hpp"

#include "motives/errors.hpp"

#include <sstream>

namespace motives {

TargetPoly TargetPoly::constant(const Rational& c) {
    TargetPoly p;
    p.add_term(0, 0, c);
    return p;
}

TargetPoly TargetPoly::monomial(const Rational& c, int eu, int ev) {
    TargetPoly p;
    p.add_term(eu, ev, c);
    return p;
}

void TargetPoly::add_term(int eu, int ev, const Rational& c) {
    if (c == 0) return;
    Key k{eu, ev};
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TargetPoly::coefficient(int eu, int ev) const {
    auto it = terms_.find({eu, ev});
    return it == terms_.end() ? Rational(0) : it->second;
}

int TargetPoly::min_total_degree() const {
    if (terms_.empty()) return 0;
    const auto& k = terms_.begin()->first;
    return k.first + k.second;
}

int TargetPoly::max_total_degree() const {
    if (terms_.empty()) return 0;
    const auto& k = terms_.rbegin()->first;
    return k.first + k.second;
}

TargetPoly TargetPoly::inverted_variables() const {
    TargetPoly r;
    for (const auto& [k, c] : terms_) r.add_term(-k.first, -k.second, c);
    return r;
}

TargetPoly TargetPoly::shifted(int eu, int ev) const {
    TargetPoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first + eu, k.second + ev, c);
    return r;
}

TargetPoly TargetPoly::truncated(int maxdeg) const {
    TargetPoly r;
    for (const auto& [k, c] : terms_) {
        if (k.first + k.second > maxdeg) break;  // total-degree sorted
        r.add_term(k.first, k.second, c);
    }
    return r;
}

TargetPoly TargetPoly::operator-() const {
    TargetPoly r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

TargetPoly& TargetPoly::operator+=(const TargetPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TargetPoly& TargetPoly::operator-=(const TargetPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TargetPoly operator*(const TargetPoly& a, const TargetPoly& b) {
    TargetPoly r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TargetPoly pow(const TargetPoly& x, int e) {
    if (e < 0) throw MotiveError("TargetPoly pow: negative exponent");
    TargetPoly acc = TargetPoly::one();
    TargetPoly base = x;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TargetPoly truncated_mul(const TargetPoly& a, const TargetPoly& b, int maxdeg) {
    TargetPoly r;
    for (const auto& [ka, ca] : a.terms()) {
        int ta = ka.first + ka.second;
        for (const auto& [kb, cb] : b.terms()) {
            if (ta + kb.first + kb.second > maxdeg) break;
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

TargetPoly series_inverse(const TargetPoly& p, int maxdeg) {
    Rational c0 = p.coefficient(0, 0);
    if (c0 == 0 || p.min_total_degree() < 0)
        throw MotiveError("series_inverse needs a unit constant term");
    // p = c0 (1 - r); invert by geometric summation
    TargetPoly r;
    for (const auto& [k, c] : p.terms()) {
        if (k.first == 0 && k.second == 0) continue;
        r.add_term(k.first, k.second, -c / c0);
    }
    if (!r.is_zero() && r.min_total_degree() <= 0)
        throw MotiveError("series_inverse needs positive-degree tail");
    TargetPoly sum = TargetPoly::one();
    TargetPoly term = TargetPoly::one();
    while (true) {
        term = truncated_mul(term, r, maxdeg);
        if (term.is_zero()) break;
        sum += term;
    }
    TargetPoly out;
    for (const auto& [k, c] : sum.terms()) out.add_term(k.first, k.second, c / c0);
    return out;
}

std::string target_poly_to_text(const TargetPoly& p, const std::string& u_name,
                                const std::string& v_name) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        auto var = [](const std::string& n, int e) -> std::string {
            if (e == 0) return "";
            if (e == 1) return n;
            return n + "^" + std::to_string(e);
        };
        vars = var(u_name, k.first);
        std::string vs = var(v_name, k.second);
        if (!vs.empty()) vars += vars.empty() ? vs : " " + vs;
        if (vars.empty()) {
            os << rational_to_string(ac);
        } else {
            if (ac != 1) os << rational_to_string(ac) << " ";
            os << vars;
        }
    }
    return os.str();
}

}  // namespace motives
