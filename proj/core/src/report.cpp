#include "motives/report.hpp"

#include "motives/io.hpp"

namespace motives {

namespace {

std::string poly_key_text(int eu, int ev) {
    std::string out;
    if (eu != 0) out += "u^" + std::to_string(eu);
    if (ev != 0) {
        if (!out.empty()) out += " ";
        out += "v^" + std::to_string(ev);
    }
    return out.empty() ? "1" : out;
}

std::string coeff_mismatch(const std::string& where, const Rational& lhs, const Rational& rhs) {
    return "coefficient of " + where + ": lhs=" + rational_to_string(lhs) +
           " rhs=" + rational_to_string(rhs);
}

}  // namespace

VerificationReport make_series_report(std::string check,
                                      std::map<std::string, std::string> inputs,
                                      GradedMotiveSeries lhs, GradedMotiveSeries rhs) {
    VerificationReport r;
    r.check = std::move(check);
    r.inputs = std::move(inputs);
    SeriesComparison cmp = compare(lhs, rhs);
    r.floor_or_maxdeg = cmp.floor_used;
    r.equal = cmp.equal;
    if (cmp.first_discrepancy)
        r.first_discrepancy = coeff_mismatch(monomial_to_text(cmp.first_discrepancy->mono),
                                             cmp.first_discrepancy->lhs,
                                             cmp.first_discrepancy->rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

VerificationReport make_poly_report(std::string check,
                                    std::map<std::string, std::string> inputs,
                                    TargetPoly lhs, TargetPoly rhs, std::optional<int> maxdeg) {
    VerificationReport r;
    r.check = std::move(check);
    r.inputs = std::move(inputs);
    r.floor_or_maxdeg = maxdeg;
    if (maxdeg) {
        lhs = lhs.truncated(*maxdeg);
        rhs = rhs.truncated(*maxdeg);
    }
    r.equal = true;
    // walk the union of keys in canonical order; report the first mismatch
    auto li = lhs.terms().begin();
    auto ri = rhs.terms().begin();
    TargetPoly::KeyBefore before;
    while (li != lhs.terms().end() || ri != rhs.terms().end()) {
        bool take_l = ri == rhs.terms().end() ||
                      (li != lhs.terms().end() && before(li->first, ri->first));
        bool take_r = li == lhs.terms().end() ||
                      (ri != rhs.terms().end() && before(ri->first, li->first));
        std::pair<int, int> key;
        Rational lv = 0, rv = 0;
        if (take_l) {
            key = li->first;
            lv = li->second;
            ++li;
        } else if (take_r) {
            key = ri->first;
            rv = ri->second;
            ++ri;
        } else {
            key = li->first;
            lv = li->second;
            rv = ri->second;
            ++li;
            ++ri;
        }
        if (lv != rv) {
            r.equal = false;
            r.first_discrepancy = coeff_mismatch(poly_key_text(key.first, key.second), lv, rv);
            break;
        }
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

VerificationReport make_value_report(std::string check,
                                     std::map<std::string, std::string> inputs,
                                     Rational lhs, Rational rhs) {
    VerificationReport r;
    r.check = std::move(check);
    r.inputs = std::move(inputs);
    r.equal = lhs == rhs;
    if (!r.equal)
        r.first_discrepancy =
            "lhs=" + rational_to_string(lhs) + " rhs=" + rational_to_string(rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

}  // namespace motives
