#pragma once

#include "motives/report.hpp"
#include "motives/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motives {

struct SuiteCase {
    std::string group;   // root datum spec, may be empty for ring cases
    std::string curve;   // curve spec, may be empty
    std::optional<int> floor;
    std::optional<int> maxdeg;
    std::map<std::string, std::string> params;  // e.g. n, degD, genus, op
};

/// Adds delta to one coefficient on the left side of matching series checks.
/// Used to confirm the harness reports corrupted formulas as unequal.
struct Perturbation {
    std::string check_substring;
    MotiveMonomial mono;
    Rational delta = 1;
};

struct SuiteConfig {
    std::string suite;  // weyl | affine | gauge | count | p1 | sln | ring
    std::vector<SuiteCase> cases;  // empty: pinned defaults for the suite
    int parallelism = 1;
    unsigned seed = 424243;
    std::optional<Perturbation> perturbation;
};

const std::vector<std::string>& suite_names();
/// Root data bundled with the default suites and covered by the blanket
/// degree/classifying-space checks.
const std::vector<std::string>& shipped_types();

std::vector<SuiteCase> default_cases(const std::string& suite);

/// Runs all cases (concurrently up to cfg.parallelism) and returns their
/// reports in case order.  Throws ConfigError on malformed configuration;
/// errors inside a case become failing reports instead of exceptions.
std::vector<VerificationReport> run_suite(const SuiteConfig& cfg);

bool all_equal(const std::vector<VerificationReport>& reports);

/// prod_{k<n} (L^n - L^k) against L^{n(n-1)/2} (L-1)^n [n]_L!.
VerificationReport oracle_qfactorial(int n);

}  // namespace motives
