#pragma once

#include "motives/closed.hpp"
#include "motives/curve.hpp"
#include "motives/realize.hpp"
#include "motives/report.hpp"
#include "motives/root_datum.hpp"

#include <map>
#include <string>
#include <vector>

namespace motives {

/// |pi1| L^{(g-1) dim G} prod_i Z(C, L^{-d_i}).
ClosedMotive conjecture_motive(const RootDatum& rd, const CurveData& curve);

/// L^{(1-g) dim G} * bun_motive / prod_i Z(C, L^{-d_i}).  With the predicted
/// bundle motive as input this cancels exactly to the scalar |pi1|.
ClosedMotive tamagawa_motive(const RootDatum& rd, const CurveData& curve,
                             const ClosedMotive& bun_motive);

/// Class of the classifying stack of the automorphism group of the bundle
/// attached to a dominant cocharacter on the projective line:
/// cosetP(lambda)(L) * L^{-(lambda,2rho)} / group_motive.
ClosedMotive aut_motive_p1(const RootDatum& rd, const Cocharacter& lambda);

/// Sum of the automorphism-stack classes over all dominant cocharacters that
/// can contribute at or above the floor (each term tops out at dimension
/// <= -(lambda,2rho); we enumerate (lambda,2rho) <= -floor + dim G).
GradedMotiveSeries p1_stratification_motive(const RootDatum& rd, int floor);

/// Truncated cocharacter sum sum_lambda cosetP(lambda)(L) L^{-(lambda,2rho)}
/// against the closed form |pi1| prod_i (1 - L^{-(d_i-1)})^{-1}.
VerificationReport kaiser_identity_check(const RootDatum& rd, int floor);

/// prod_{i=2}^n Z(C, L^{-i}) against the symmetric-power expansion
/// sum_m prod_i [Sym^{m_i} C] L^{-i m_i}, both truncated at the floor.
VerificationReport sln_generating_identity(int n, const CurveData& curve, int floor);

/// Normalized fixed-point sum over the ordered tuples m' = (m_1,...,m_n) with
/// sum m_i = n degD and m_1 > 2g-2:
///   sum (1 + L + ... + L^{m_1-g}) prod_{i>=2} [Sym^{m_i} C]
///       L^{sum_i (n-i) m_i - n^2 (degD+1-g)}.
/// Agrees with the degree-0 bundle motive above dimension -(n degD - 3g + 2).
GradedMotiveSeries sln_matrix_divisor_sum(int n, const CurveData& curve, int degD);

/// Betti-side checks: the inverted Poincare realization of the conjecture
/// against prod_i (1+t^{2d_i-1})^{2g} / ((1-t^{2d_i})(1-t^{2(d_i-1)})),
/// compared as ascending series through t^maxdeg.
VerificationReport gauge_poincare_check(const RootDatum& rd, int genus, int maxdeg);
/// Same identity as an exact cross-multiplied polynomial equation.
VerificationReport gauge_poincare_exact_check(const RootDatum& rd, int genus);
/// Bivariate variant with numerator factors (1+u^d v^{d-1})^g (1+u^{d-1} v^d)^g,
/// compared through total degree maxdeg.
VerificationReport gauge_serre_check(const RootDatum& rd, int genus, int maxdeg);

/// Stacky point count of the predicted motive against the independent value
/// |pi1| q^{(g-1) dim G} prod_i Z(C, q^{-d_i}); also records the volume
/// q^{(1-g) dim G} prod_i Z(C, q^{-d_i})^{-1} and checks tau = |pi1|.
VerificationReport count_check(const RootDatum& rd, const CurveData& curve);

/// dim G * (g - 1) - m: upper dimension bound for strata of instability
/// degree m, used to justify truncation floors.
int instability_dim_bound(const RootDatum& rd, int genus, int m);

struct BundleMotiveReport {
    std::string group_label;
    std::string curve_label;
    ClosedMotive conjecture_value;
    std::map<std::string, std::string> realized_values;
    ClosedMotive tamagawa;
    std::vector<std::string> notes;
};

BundleMotiveReport bundle_motive_report(const RootDatum& rd, const CurveData& curve);

}  // namespace motives
