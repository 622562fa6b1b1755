#include "motives/curve.hpp"

#include "motives/errors.hpp"

#include <algorithm>
#include <cctype>

namespace motives {

namespace {

// splits on commas that are not inside brackets
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// integer-coefficient polynomials in L, e.g. "1+2L-L^2", "-3", "L^3"
GradedMotiveSeries parse_l_poly(const std::string& text) {
    GradedMotiveSeries p;
    std::string s = strip(text);
    if (s.empty()) throw ConfigError("empty polynomial literal");
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::string digits;
        while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            digits += s[i++];
        Rational coeff = digits.empty() ? Rational(1) : rational_from_string(digits);
        if (i < s.size() && s[i] == '*') ++i;
        int lexp = 0;
        if (i < s.size() && s[i] == 'L') {
            ++i;
            lexp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string es;
                if (i < s.size() && s[i] == '-') es += s[i++];
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) es += s[i++];
                if (es.empty() || es == "-") throw ConfigError("bad exponent in: " + text);
                lexp = std::stoi(es);
            }
        } else if (digits.empty()) {
            throw ConfigError("bad polynomial literal: " + text);
        }
        p.add_term(MotiveMonomial::l_power(lexp), sign * coeff);
    }
    return p;
}

std::vector<std::string> parse_bracket_list(const std::string& s, const std::string& what) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ConfigError("expected [...] for " + what);
    std::string inner = t.substr(1, t.size() - 2);
    if (strip(inner).empty()) return {};
    return split_top_level(inner);
}

}  // namespace

const GradedMotiveSeries& CurveData::coefficient(int j) const {
    if (j < 1 || j > 2 * genus) throw MotiveError("numerator coefficient out of range");
    return a[static_cast<size_t>(j) - 1];
}

CurveData universal_curve(int genus) {
    if (genus < 0) throw ConfigError("genus must be >= 0");
    CurveData c;
    c.genus = genus;
    c.universal = true;
    for (int j = 1; j <= 2 * genus; ++j) c.a.push_back(GradedMotiveSeries::curve_symbol(j));
    c.label = "genus=" + std::to_string(genus);
    return c;
}

CurveData curve_from_counts(const Rational& q, const std::vector<Integer>& counts) {
    if (q <= 1) throw ConfigError("field size must be at least 2");
    int g = static_cast<int>(counts.size());
    CurveData c;
    c.genus = g;
    c.universal = false;
    c.has_counts = true;
    c.q = q;
    // log of the numerator: c_i = (N_i - 1 - q^i) / i, then exponentiate
    std::vector<Rational> logc(static_cast<size_t>(g) + 1, Rational(0));
    for (int i = 1; i <= g; ++i)
        logc[static_cast<size_t>(i)] =
            (Rational(counts[static_cast<size_t>(i) - 1]) - 1 - rational_pow(q, i)) / i;
    std::vector<Rational> p(static_cast<size_t>(2 * g) + 1, Rational(0));
    p[0] = 1;
    for (int n = 1; n <= g; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += k * logc[static_cast<size_t>(k)] * p[static_cast<size_t>(n - k)];
        p[static_cast<size_t>(n)] = acc / n;
    }
    // functional equation fills the upper half
    for (int i = 2 * g; i > g; --i)
        p[static_cast<size_t>(i)] = rational_pow(q, i - g) * p[static_cast<size_t>(2 * g - i)];
    c.weil = p;
    Rational class_number = 0;
    for (const auto& w : p) class_number += w;
    if (class_number <= 0) throw MotiveError("count data gives a nonpositive class number");
    for (int j = 1; j <= 2 * g; ++j)
        c.a.push_back(GradedMotiveSeries::constant(p[static_cast<size_t>(j)]));
    return c;
}

CurveData curve_from_numerator(std::vector<GradedMotiveSeries> coeffs) {
    if (coeffs.size() % 2 != 0)
        throw ConfigError("numerator coefficient list must have even length 2g");
    CurveData c;
    c.genus = static_cast<int>(coeffs.size()) / 2;
    c.universal = false;
    c.a = std::move(coeffs);
    if (c.genus > 0 && c.a.back().is_zero())
        c.lints.push_back("top numerator coefficient vanishes; the curve is degenerate");
    return c;
}

CurveData parse_curve(const std::string& spec) {
    std::string s = strip(spec);
    if (s.empty()) throw ConfigError("empty curve descriptor");
    bool fq = false;
    if (s.rfind("fq:", 0) == 0) {
        fq = true;
        s = s.substr(3);
    }
    std::optional<int> genus;
    std::optional<Rational> q;
    std::optional<std::vector<std::string>> counts;
    std::optional<std::vector<std::string>> numerator;
    for (const auto& part : split_top_level(s)) {
        std::string kv = strip(part);
        size_t eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("bad curve field: " + kv);
        std::string key = strip(kv.substr(0, eq));
        std::string val = strip(kv.substr(eq + 1));
        if (key == "genus") genus = std::stoi(val);
        else if (key == "q") q = rational_from_string(val);
        else if (key == "counts") counts = parse_bracket_list(val, "counts");
        else if (key == "numerator") numerator = parse_bracket_list(val, "numerator");
        else throw ConfigError("unknown curve field: " + key);
    }
    CurveData c;
    if (fq) {
        if (!q || !counts) throw ConfigError("fq curve needs q=... and counts=[...]");
        std::vector<Integer> ns;
        for (const auto& t : *counts) ns.push_back(Integer(strip(t)));
        c = curve_from_counts(*q, ns);
        if (genus && *genus != c.genus)
            throw ConfigError("genus does not match the number of counts");
    } else if (numerator) {
        std::vector<GradedMotiveSeries> coeffs;
        for (const auto& t : *numerator) coeffs.push_back(parse_l_poly(strip(t)));
        c = curve_from_numerator(std::move(coeffs));
        if (genus && *genus != c.genus)
            throw ConfigError("genus does not match the numerator length");
    } else if (genus) {
        c = universal_curve(*genus);
    } else {
        throw ConfigError("curve descriptor needs genus=, numerator= or fq:...");
    }
    c.label = spec;
    return c;
}

}  // namespace motives
