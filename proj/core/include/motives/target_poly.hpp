#pragma once

#include "motives/numeric.hpp"

#include <map>
#include <string>
#include <utility>

namespace motives {

/// Exact sparse Laurent polynomial in two variables (u, v) over the
/// rationals.  Univariate values (Poincare polynomials in t) keep v unused.
/// Terms are ordered by (total degree, u exponent) ascending.
class TargetPoly {
public:
    using Key = std::pair<int, int>;  // (u exponent, v exponent)

    struct KeyBefore {
        bool operator()(const Key& a, const Key& b) const {
            int ta = a.first + a.second, tb = b.first + b.second;
            if (ta != tb) return ta < tb;
            return a < b;
        }
    };

    using TermMap = std::map<Key, Rational, KeyBefore>;

    TargetPoly() = default;

    static TargetPoly zero() { return TargetPoly(); }
    static TargetPoly one() { return constant(Rational(1)); }
    static TargetPoly constant(const Rational& c);
    static TargetPoly monomial(const Rational& c, int eu, int ev);
    /// Univariate monomial c * t^e with t the first variable.
    static TargetPoly t_power(const Rational& c, int e) { return monomial(c, e, 0); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int eu, int ev, const Rational& c);
    Rational coefficient(int eu, int ev) const;
    /// Coefficient of t^e along the first variable (v exponent 0).
    Rational t_coefficient(int e) const { return coefficient(e, 0); }
    int min_total_degree() const;  // 0 for the zero polynomial
    int max_total_degree() const;

    /// Substitution (u, v) -> (1/u, 1/v).
    TargetPoly inverted_variables() const;
    /// Multiplication by u^eu v^ev.
    TargetPoly shifted(int eu, int ev) const;
    /// Drops terms of total degree > maxdeg.
    TargetPoly truncated(int maxdeg) const;

    TargetPoly operator-() const;
    TargetPoly& operator+=(const TargetPoly& o);
    TargetPoly& operator-=(const TargetPoly& o);
    friend TargetPoly operator+(TargetPoly a, const TargetPoly& b) { return a += b; }
    friend TargetPoly operator-(TargetPoly a, const TargetPoly& b) { return a -= b; }
    friend TargetPoly operator*(const TargetPoly& a, const TargetPoly& b);
    bool operator==(const TargetPoly& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

TargetPoly pow(const TargetPoly& x, int e);
/// Product with terms of total degree > maxdeg dropped.
TargetPoly truncated_mul(const TargetPoly& a, const TargetPoly& b, int maxdeg);
/// Power series inverse through total degree maxdeg.  Requires a nonzero
/// constant term and no terms of negative or zero total degree besides it.
TargetPoly series_inverse(const TargetPoly& p, int maxdeg);

/// Rendering with custom variable names; v omitted when absent.
std::string target_poly_to_text(const TargetPoly& p, const std::string& u_name = "t",
                                const std::string& v_name = "v");

}  // namespace motives
