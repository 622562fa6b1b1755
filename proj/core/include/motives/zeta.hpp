#pragma once

#include "motives/closed.hpp"
#include "motives/curve.hpp"
#include "motives/target_poly.hpp"

namespace motives {

/// Class of Sym^n C, assembled from the zeta numerator coefficients:
/// sum_{i <= min(n, 2g)} a_i (1 + L + ... + L^{n-i}).
GradedMotiveSeries sym_class(const CurveData& curve, int n);

/// Z(C, L^-s) as a closed value with denominator (1-L^-s)(1-L^-(s-1)).
/// Throws DivergentSpecialValue for s < 2.
ClosedMotive zeta_special_value(const CurveData& curve, int s);

/// Poincare polynomial of Sym^n of a genus-g curve.
TargetPoly poincare_sym(int genus, int n);

/// Z(C, q^-s) over F_q, evaluated from numerator values at L = q.
Rational weil_zeta_value(const Rational& q, const std::vector<Rational>& weil, int s);

}  // namespace motives
