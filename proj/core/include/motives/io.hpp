#pragma once

#include "motives/closed.hpp"
#include "motives/report.hpp"
#include "motives/root_datum.hpp"
#include "motives/series.hpp"
#include "motives/target_poly.hpp"

#include <string>

namespace motives {

/// Monomial body without its coefficient: "a1 a2^2 L^-3", or "1" for the unit.
std::string monomial_to_text(const MotiveMonomial& m);

/// Terms in canonical order, coefficients of absolute value one omitted,
/// " + " / " - " separators, trailing "+ O(dim<floor)" when truncated.
std::string series_to_text(const GradedMotiveSeries& s);

std::string closed_to_text(const ClosedMotive& x);

/// Canonical JSON: object layout and key order are fixed, so equal values
/// serialize to identical bytes.
std::string series_to_json(const GradedMotiveSeries& s);
GradedMotiveSeries series_from_json(const std::string& text);

std::string closed_to_json(const ClosedMotive& x);
ClosedMotive closed_from_json(const std::string& text);

std::string target_poly_to_json(const TargetPoly& p);
std::string root_datum_to_json(const RootDatum& rd);
std::string report_to_json(const VerificationReport& r);

}  // namespace motives
