#pragma once

#include "motives/series.hpp"
#include "motives/target_poly.hpp"

#include <chrono>
#include <map>
#include <string>
#include <variant>

namespace motives {

using ReportPayload = std::variant<GradedMotiveSeries, TargetPoly, Rational>;

/// Outcome of one identity check.  Everything except wall_time_ms is a
/// deterministic function of the inputs.
struct VerificationReport {
    std::string check;
    std::map<std::string, std::string> inputs;
    std::optional<int> floor_or_maxdeg;
    ReportPayload lhs;
    ReportPayload rhs;
    bool equal = false;
    std::string first_discrepancy;  // empty when the sides agree
    long long wall_time_ms = 0;
};

VerificationReport make_series_report(std::string check,
                                      std::map<std::string, std::string> inputs,
                                      GradedMotiveSeries lhs, GradedMotiveSeries rhs);

VerificationReport make_poly_report(std::string check,
                                    std::map<std::string, std::string> inputs,
                                    TargetPoly lhs, TargetPoly rhs,
                                    std::optional<int> maxdeg = std::nullopt);

VerificationReport make_value_report(std::string check,
                                     std::map<std::string, std::string> inputs,
                                     Rational lhs, Rational rhs);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace motives
