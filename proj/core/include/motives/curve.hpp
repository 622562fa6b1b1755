#pragma once

#include "motives/series.hpp"

#include <string>
#include <vector>

namespace motives {

/// A smooth projective curve, described by its genus and the 2g coefficients
/// sitting between 1 and the top term of its zeta numerator.  Coefficients
/// are either the universal symbols or explicit polynomials in L; curves
/// built from finite-field point counts additionally carry the count data.
struct CurveData {
    int genus = 0;
    bool universal = true;
    std::vector<GradedMotiveSeries> a;  // a[j-1] = weight-j numerator coefficient
    bool has_counts = false;
    Rational q = 0;
    std::vector<Rational> weil;  // numerator coefficients at L = q; size 2g+1
    std::string label;
    std::vector<std::string> lints;

    const GradedMotiveSeries& coefficient(int j) const;  // 1 <= j <= 2g
};

CurveData universal_curve(int genus);

/// Curve over F_q from point counts over F_{q^i}, i = 1..genus.  The missing
/// upper-half numerator coefficients come from the functional equation.
CurveData curve_from_counts(const Rational& q, const std::vector<Integer>& counts);

/// Explicit numerator coefficients (polynomials in L); genus = size / 2.
CurveData curve_from_numerator(std::vector<GradedMotiveSeries> coeffs);

/// Accepts "genus=2", "fq:q=2,counts=[3]", "numerator=[0,2]",
/// "genus=1,numerator=[0,2]".
CurveData parse_curve(const std::string& spec);

}  // namespace motives
