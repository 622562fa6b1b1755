#pragma once

#include "motives/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motives {

/// Exponent key of one term: a power of L times a product of curve symbols.
/// a[j-1] holds the exponent of the weight-j symbol, trailing zeros trimmed.
/// The dimension of the key is l + sum_j j*a[j-1].
struct MotiveMonomial {
    int l = 0;
    std::vector<int> a;
    int dim = 0;

    MotiveMonomial() = default;
    MotiveMonomial(int l_exp, std::vector<int> a_exp);

    static MotiveMonomial unit() { return MotiveMonomial(); }
    static MotiveMonomial l_power(int k) { return MotiveMonomial(k, {}); }
    /// The weight-j curve symbol, j >= 1.
    static MotiveMonomial curve_symbol(int j);

    bool is_l_power() const { return a.empty(); }
    MotiveMonomial times(const MotiveMonomial& o) const;
    /// Whether o's symbol exponents fit under ours (L powers always divide).
    bool divisible_by(const MotiveMonomial& o) const;
    MotiveMonomial divided_by(const MotiveMonomial& o) const;

    bool operator==(const MotiveMonomial& o) const { return l == o.l && a == o.a; }
};

/// Canonical listing order: dimension descending, then l descending, then
/// symbol exponents lexicographic.  This is a total group order, so leading
/// and trailing terms are multiplicative.
struct MonomialBefore {
    bool operator()(const MotiveMonomial& x, const MotiveMonomial& y) const;
};

/// Element of the completed ring, truncated below `floor` (nullopt = exact).
/// Every stored term has dimension >= floor when a floor is present.
class GradedMotiveSeries {
public:
    using TermMap = std::map<MotiveMonomial, Rational, MonomialBefore>;

    GradedMotiveSeries() = default;

    static GradedMotiveSeries zero() { return GradedMotiveSeries(); }
    static GradedMotiveSeries one();
    static GradedMotiveSeries constant(const Rational& c);
    static GradedMotiveSeries l_power(int k);
    static GradedMotiveSeries curve_symbol(int j);
    static GradedMotiveSeries monomial(const Rational& c, const MotiveMonomial& m);

    const TermMap& terms() const { return terms_; }
    const std::optional<int>& floor() const { return floor_; }
    void set_floor(std::optional<int> f);

    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return !floor_.has_value(); }
    /// Dimension of the leading term; nullopt for the zero series.
    std::optional<int> top_dim() const;
    std::optional<int> min_dim() const;
    size_t size() const { return terms_.size(); }

    /// Adds c * m, dropping the result if it falls below the floor.
    void add_term(const MotiveMonomial& m, const Rational& c);
    /// Drops terms of dimension < f and records the floor.
    void truncate_below(int f);

    /// Returns the constant term's coefficient if the series is that constant
    /// and exact, otherwise nullopt.
    std::optional<Rational> as_constant() const;

    GradedMotiveSeries operator-() const;

private:
    TermMap terms_;
    std::optional<int> floor_;
};

/// Sum; the result carries the weaker (higher) of the two floors.
GradedMotiveSeries ring_add(const GradedMotiveSeries& x, const GradedMotiveSeries& y);
GradedMotiveSeries ring_sub(const GradedMotiveSeries& x, const GradedMotiveSeries& y);

/// Product; result floor = max(x.floor + topdim(y), y.floor + topdim(x)),
/// exact when both inputs are exact.
GradedMotiveSeries ring_mul(const GradedMotiveSeries& x, const GradedMotiveSeries& y);
/// Product additionally truncated below `floor`.
GradedMotiveSeries ring_mul(const GradedMotiveSeries& x, const GradedMotiveSeries& y,
                            int floor);

GradedMotiveSeries scale(const GradedMotiveSeries& x, const Rational& c);
/// Multiplication by L^k.
GradedMotiveSeries shift_l(const GradedMotiveSeries& x, int k);
GradedMotiveSeries pow(const GradedMotiveSeries& x, int e);

/// Geometric-series inverse down to `floor`.  The input must have a unique
/// leading term equal to +-L^k; throws NotAUnit otherwise.
GradedMotiveSeries invert_unit(const GradedMotiveSeries& x, int floor);

/// Exact quotient n/d of finite exact series; d must be unit-leading.
/// Throws MotiveError when the division does not come out exact.
GradedMotiveSeries exact_div(const GradedMotiveSeries& n, const GradedMotiveSeries& d);

struct SeriesDiscrepancy {
    MotiveMonomial mono;
    Rational lhs;
    Rational rhs;
};

struct SeriesComparison {
    bool equal = true;
    /// Floor at which the comparison was made; nullopt when both sides exact.
    std::optional<int> floor_used;
    std::optional<SeriesDiscrepancy> first_discrepancy;
};

/// Coefficientwise comparison down to the weaker of the two floors.  The
/// first discrepancy reported is the one of highest dimension.
SeriesComparison compare(const GradedMotiveSeries& x, const GradedMotiveSeries& y);

bool operator==(const GradedMotiveSeries& x, const GradedMotiveSeries& y);

}  // namespace motives
