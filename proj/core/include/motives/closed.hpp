#pragma once

#include "motives/series.hpp"

#include <utility>
#include <vector>

namespace motives {

struct RootDatum;

/// Allowed denominator shapes: (1 - L^-k) and (L^m - 1), parameter >= 1.
struct DenominatorFactor {
    enum class Kind { OneMinusLInv, LPowMinusOne };
    Kind kind;
    int k;

    GradedMotiveSeries poly() const;
    /// Top dimension of the factor's inverse expansion (0 or -k).
    int inverse_top_dim() const;

    bool operator==(const DenominatorFactor& o) const { return kind == o.kind && k == o.k; }
    bool operator<(const DenominatorFactor& o) const {
        if (kind != o.kind) return kind < o.kind;
        return k < o.k;
    }
};

DenominatorFactor one_minus_l_inv(int k);
DenominatorFactor l_pow_minus_one(int m);

/// Exact value scalar * numerator / prod(denominator factors).  The numerator
/// is a finite exact series; the denominator multiset is kept sorted.
class ClosedMotive {
public:
    ClosedMotive();
    explicit ClosedMotive(GradedMotiveSeries numerator);
    ClosedMotive(Rational scalar, GradedMotiveSeries numerator,
                 std::vector<DenominatorFactor> denominator);

    static ClosedMotive one();
    static ClosedMotive constant(const Rational& c);
    static ClosedMotive l_power(int k);

    const Rational& scalar() const { return scalar_; }
    const GradedMotiveSeries& numerator() const { return numerator_; }
    const std::vector<DenominatorFactor>& denominator() const { return den_; }
    bool uses_torsor_relation() const { return torsor_; }
    void mark_torsor_relation() { torsor_ = true; }

    bool is_zero() const { return numerator_.is_zero() || scalar_ == 0; }
    /// The value as a plain rational scalar, when it is one.
    std::optional<Rational> as_scalar() const;

    ClosedMotive& operator*=(const ClosedMotive& o);
    ClosedMotive& mul_scalar(const Rational& c);
    ClosedMotive& mul_l_power(int k);
    ClosedMotive& mul_den(const DenominatorFactor& f);

    /// Cancels denominator factors that divide the numerator exactly.
    ClosedMotive simplified() const;

private:
    Rational scalar_;
    GradedMotiveSeries numerator_;
    std::vector<DenominatorFactor> den_;
    bool torsor_ = false;
};

ClosedMotive mul(const ClosedMotive& x, const ClosedMotive& y);
ClosedMotive add(const ClosedMotive& x, const ClosedMotive& y);
/// Exact quotient; throws MotiveError when the value is not closed-form.
ClosedMotive div(const ClosedMotive& x, const ClosedMotive& y);
ClosedMotive pow(const ClosedMotive& x, int e);

/// Geometric expansion of the denominator factors, truncated below floor.
GradedMotiveSeries expand(const ClosedMotive& x, int floor);

/// Class of GL_n: prod_{k=0}^{n-1} (L^n - L^k), stored as a plain polynomial.
ClosedMotive gl_motive(int n);

/// Quotient by a GL_n action: multiplies by 1/gl_motive(n), then simplifies.
ClosedMotive quotient_stack_motive(const ClosedMotive& x, int n);

/// Sum of strata [X_i / GL_{n_i}].
ClosedMotive strata_sum_motive(const std::vector<std::pair<ClosedMotive, int>>& strata);

/// Class of the group itself: L^dim prod_i (1 - L^-d_i).
ClosedMotive group_motive(const RootDatum& rd);

/// Class of the classifying stack: L^-dim prod_i (1 - L^-d_i)^-1.
/// Marked as depending on the torsor identification for special groups.
ClosedMotive classifying_motive(const RootDatum& rd);

}  // namespace motives
