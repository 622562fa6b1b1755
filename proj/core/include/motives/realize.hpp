#pragma once

#include "motives/closed.hpp"
#include "motives/curve.hpp"
#include "motives/target_poly.hpp"

#include <string>
#include <vector>

namespace motives {

/// A multiplicative specialization: L goes to a monomial in the target
/// variables, each curve symbol a_j to a fixed target polynomial.
struct Realization {
    std::string name;
    Rational l_coeff = 1;
    int l_eu = 0;
    int l_ev = 0;
    std::vector<TargetPoly> a_images;  // a_images[j-1] is the image of a_j

    const TargetPoly& a_image(int j) const;
    bool scalar_valued() const { return l_eu == 0 && l_ev == 0; }
};

/// L -> t^2, a_j -> binom(2g, j) t^j.
Realization poincare_realization(int genus);
/// L -> uv, a_j -> sum_{p+q=j} binom(g,p) binom(g,q) u^p v^q.
Realization serre_realization(int genus);
/// L -> q, a_j -> j-th numerator value of the curve; needs count data.
Realization count_realization(const CurveData& curve);
Realization count_realization(const Rational& q, const std::vector<Rational>& weil);

TargetPoly realize_series(const GradedMotiveSeries& s, const Realization& r);

/// Realized closed value scalar * numerator / prod(denominators); the factors
/// are kept separate so identities can be checked by cross multiplication.
struct RealizedClosed {
    Rational scalar = 1;
    TargetPoly numerator;
    std::vector<TargetPoly> denominators;
};

RealizedClosed realize_closed(const ClosedMotive& x, const Realization& r);

/// Partial sum of a realized series under a scalar-valued specialization,
/// with a crude geometric estimate for the truncated tail.
struct CountEstimate {
    Rational value = 0;
    Rational tail_bound = 0;
    bool exact = true;
};

CountEstimate counting_measure(const GradedMotiveSeries& s, const Realization& r);

/// Exact value of a closed motive under a scalar-valued specialization.
/// Throws DivisionByZero on a vanishing factor and NonConvergent when
/// |q| <= 1 while denominator factors are present.
Rational counting_measure(const ClosedMotive& x, const Realization& r);

}  // namespace motives
