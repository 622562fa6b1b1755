#include "motives/verify.hpp"

#include "motives/bundles.hpp"
#include "motives/closed.hpp"
#include "motives/curve.hpp"
#include "motives/errors.hpp"
#include "motives/io.hpp"
#include "motives/realize.hpp"
#include "motives/root_datum.hpp"
#include "motives/weyl.hpp"
#include "motives/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace motives {

namespace {

int param_int(const SuiteCase& c, const std::string& key, int fallback) {
    auto it = c.params.find(key);
    if (it == c.params.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (...) {
        throw ConfigError("bad integer parameter " + key + "=" + it->second);
    }
}

std::string param_str(const SuiteCase& c, const std::string& key, const std::string& fallback) {
    auto it = c.params.find(key);
    return it == c.params.end() ? fallback : it->second;
}

GradedMotiveSeries l_geom(int count) {
    GradedMotiveSeries s;
    for (int k = 0; k < count; ++k) s.add_term(MotiveMonomial::l_power(k), 1);
    return s;
}

GradedMotiveSeries l_minus_one() {
    GradedMotiveSeries s;
    s.add_term(MotiveMonomial::l_power(1), 1);
    s.add_term(MotiveMonomial::unit(), -1);
    return s;
}

Rational sum_coefficients(const TargetPoly& p) {
    Rational out = 0;
    for (const auto& [key, c] : p.terms()) out += c;
    return out;
}

// ---- weyl ------------------------------------------------------------

std::vector<VerificationReport> run_weyl_case(const SuiteCase& c) {
    RootDatum rd = build_root_datum(c.group);
    std::vector<VerificationReport> out;
    auto pinned = c.params.find("weyl_order");
    if (pinned != c.params.end()) {
        Stopwatch sw;
        auto rep = make_value_report("weyl-order-constant", {{"group", rd.label}},
                                     Rational(rd.weyl_order()),
                                     rational_from_string(pinned->second));
        rep.wall_time_ms = sw.elapsed_ms();
        out.push_back(std::move(rep));
    } else {
        Stopwatch sw;
        TargetPoly bfs = weyl_poincare(rd, PoincareMethod::Bfs);
        TargetPoly formula = weyl_poincare(rd, PoincareMethod::Formula);
        auto rep = make_poly_report("weyl-poincare", {{"group", rd.label}}, bfs, formula);
        rep.wall_time_ms = sw.elapsed_ms();
        out.push_back(std::move(rep));
        auto rep2 = make_value_report("weyl-order-bfs", {{"group", rd.label}},
                                      sum_coefficients(bfs), Rational(rd.weyl_order()));
        out.push_back(std::move(rep2));
    }
    int dsum = 0;
    for (int d : rd.degrees) dsum += d - 1;
    out.push_back(make_value_report("weyl-degree-sum", {{"group", rd.label}}, Rational(dsum),
                                    Rational(rd.num_positive_roots())));
    return out;
}

// ---- affine ----------------------------------------------------------

std::vector<VerificationReport> run_affine_case(const SuiteCase& c) {
    RootDatum rd = build_root_datum(c.group);
    std::vector<VerificationReport> out;
    if (c.floor) out.push_back(kaiser_identity_check(rd, *c.floor));
    if (c.maxdeg) {
        Stopwatch sw;
        const int maxlen = *c.maxdeg;
        AffineEnumeration ae = affine_enumerate(rd, maxlen);
        TargetPoly bfs;
        for (size_t k = 0; k < ae.counts.size(); ++k)
            bfs.add_term(static_cast<int>(k), 0, Rational(ae.counts[k]));
        TargetPoly formula = affine_poincare(rd, maxlen, PoincareMethod::Formula);
        auto rep = make_poly_report("affine-poincare", {{"group", rd.label}}, std::move(bfs),
                                    std::move(formula), maxlen);
        if (!ae.lengths_consistent) {
            rep.equal = false;
            if (rep.first_discrepancy.empty())
                rep.first_discrepancy = "hyperplane length count disagrees with BFS depth";
        }
        rep.wall_time_ms = sw.elapsed_ms();
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- gauge -----------------------------------------------------------

std::vector<VerificationReport> run_gauge_case(const SuiteCase& c) {
    RootDatum rd = build_root_datum(c.group);
    const int genus = param_int(c, "genus", 0);
    std::vector<VerificationReport> out;
    if (param_str(c, "variant", "poincare") == "serre") {
        out.push_back(gauge_serre_check(rd, genus, c.maxdeg.value_or(24)));
    } else {
        out.push_back(gauge_poincare_exact_check(rd, genus));
        if (c.maxdeg) out.push_back(gauge_poincare_check(rd, genus, *c.maxdeg));
    }
    return out;
}

// ---- count -----------------------------------------------------------

std::vector<VerificationReport> run_count_case(const SuiteCase& c) {
    RootDatum rd = build_root_datum(c.group);
    CurveData curve = parse_curve(c.curve);
    std::vector<VerificationReport> out;
    out.push_back(count_check(rd, curve));
    if (c.floor) {
        if (curve.genus != 0)
            throw ConfigError("stratification resummation is a genus-0 check");
        Stopwatch sw;
        Realization cr = count_realization(curve);
        GradedMotiveSeries strat = p1_stratification_motive(rd, *c.floor);
        CountEstimate est = counting_measure(strat, cr);
        Rational closed = counting_measure(conjecture_motive(rd, curve), cr);
        VerificationReport rep;
        rep.check = "count-strat-partial";
        rep.inputs = {{"group", rd.label},
                      {"curve", curve.label},
                      {"floor", std::to_string(*c.floor)},
                      {"tail_bound", rational_to_string(est.tail_bound)}};
        rep.floor_or_maxdeg = *c.floor;
        rep.lhs = est.value;
        rep.rhs = closed;
        rep.equal = rational_abs(est.value - closed) <= est.tail_bound;
        if (!rep.equal)
            rep.first_discrepancy = "partial sum misses the closed value by more than " +
                                    rational_to_string(est.tail_bound);
        rep.wall_time_ms = sw.elapsed_ms();
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- p1 --------------------------------------------------------------

std::vector<VerificationReport> run_p1_case(const SuiteCase& c) {
    RootDatum rd = build_root_datum(c.group);
    const int floor = c.floor.value_or(-10);
    Stopwatch sw;
    GradedMotiveSeries lhs = p1_stratification_motive(rd, floor);
    GradedMotiveSeries rhs = expand(conjecture_motive(rd, universal_curve(0)), floor);
    auto rep = make_series_report("p1-stratification",
                                  {{"group", rd.label}, {"floor", std::to_string(floor)}},
                                  std::move(lhs), std::move(rhs));
    rep.wall_time_ms = sw.elapsed_ms();
    return {std::move(rep)};
}

// ---- sln -------------------------------------------------------------

std::vector<VerificationReport> run_sln_case(const SuiteCase& c) {
    CurveData curve = parse_curve(c.curve);
    const int n = param_int(c, "n", 2);
    std::vector<VerificationReport> out;
    if (c.params.count("degD")) {
        const int degD= param_int(c, "degD", 4);
        Stopwatch sw;
        const int floor = -(n * degD - 3 * curve.genus + 2);
        GradedMotiveSeries lhs = ring_mul(sln_matrix_divisor_sum(n, curve, degD), l_minus_one());
        lhs.set_floor(floor);
        RootDatum rd = build_root_datum("A" + std::to_string(n - 1));
        GradedMotiveSeries rhs = expand(conjecture_motive(rd, curve), floor);
        auto rep = make_series_report("sln-matrix-divisor",
                                      {{"n", std::to_string(n)},
                                       {"degD", std::to_string(degD)},
                                       {"curve", curve.label},
                                       {"floor", std::to_string(floor)}},
                                      std::move(lhs), std::move(rhs));
        rep.wall_time_ms = sw.elapsed_ms();
        out.push_back(std::move(rep));
    } else {
        out.push_back(sln_generating_identity(n, curve, c.floor.value_or(-10)));
    }
    return out;
}

// ---- ring ------------------------------------------------------------

Rational random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int p = num(rng);
    if (p == 0) p = 1;
    return Rational(p, den(rng));
}

MotiveMonomial random_monomial(std::mt19937& rng, int genus) {
    std::uniform_int_distribution<int> lexp(-5, 5);
    std::uniform_int_distribution<int> aexp(0, 2);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<int> a(static_cast<size_t>(2 * genus), 0);
    for (auto& e : a)
        if (pick(rng) == 0) e = aexp(rng);
    return MotiveMonomial(lexp(rng), std::move(a));
}

GradedMotiveSeries random_series(std::mt19937& rng, int genus, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    GradedMotiveSeries s;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) s.add_term(random_monomial(rng, genus), random_coeff(rng));
    return s;
}

VerificationReport finish_tally(std::string check, std::map<std::string, std::string> inputs,
                                int passes, int total, const std::string& first,
                                const Stopwatch& sw) {
    auto rep = make_value_report(std::move(check), std::move(inputs), Rational(passes),
                                 Rational(total));
    if (!rep.equal && !first.empty()) rep.first_discrepancy += "; first failure at " + first;
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

VerificationReport run_unit_inverse(unsigned seed, int count, int floor) {
    Stopwatch sw;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> kdist(-3, 3);
    std::uniform_int_distribution<int> signd(0, 1);
    std::uniform_int_distribution<int> tailn(0, 5);
    std::uniform_int_distribution<int> drop(1, 4);
    int passes = 0;
    std::string first;
    for (int i = 0; i < count; ++i) {
        const int k = kdist(rng);
        GradedMotiveSeries u = GradedMotiveSeries::monomial(signd(rng) ? 1 : -1,
                                                            MotiveMonomial::l_power(k));
        const int tails = tailn(rng);
        for (int t = 0; t < tails; ++t) {
            MotiveMonomial m = random_monomial(rng, 1);
            if (m.dim >= k) m = MotiveMonomial(m.l - (m.dim - k) - drop(rng), m.a);
            u.add_term(m, random_coeff(rng));
        }
        GradedMotiveSeries prod = ring_mul(u, invert_unit(u, floor));
        if (compare(prod, GradedMotiveSeries::one()).equal) ++passes;
        else if (first.empty()) first = "sample " + std::to_string(i);
    }
    return finish_tally("unit-inverse-roundtrip",
                        {{"count", std::to_string(count)}, {"floor", std::to_string(floor)}},
                        passes, count, first, sw);
}

VerificationReport run_realization_hom(unsigned seed, int pairs, const std::string& which) {
    Stopwatch sw;
    std::mt19937 rng(seed);
    Realization r;
    int genus = 2;
    if (which == "poincare") {
        r = poincare_realization(genus);
    } else if (which == "serre") {
        r = serre_realization(genus);
    } else if (which == "count") {
        genus = 1;
        r = count_realization(parse_curve("fq:q=2,counts=[3]"));
    } else {
        throw ConfigError("unknown realization: " + which);
    }
    int passes = 0;
    std::string first;
    for (int i = 0; i < pairs; ++i) {
        GradedMotiveSeries x = random_series(rng, genus, 4);
        GradedMotiveSeries y = random_series(rng, genus, 4);
        TargetPoly lhs = realize_series(ring_mul(x, y), r);
        TargetPoly rhs = realize_series(x, r) * realize_series(y, r);
        if (lhs == rhs) ++passes;
        else if (first.empty()) first = "pair " + std::to_string(i);
    }
    return finish_tally("realization-hom",
                        {{"realization", which}, {"pairs", std::to_string(pairs)}}, passes,
                        pairs, first, sw);
}

std::vector<VerificationReport> run_group_classifying() {
    std::vector<VerificationReport> out;
    for (const auto& t : shipped_types()) {
        Stopwatch sw;
        RootDatum rd = build_root_datum(t);
        ClosedMotive prod = mul(group_motive(rd), classifying_motive(rd)).simplified();
        Rational val = prod.as_scalar().value_or(0);
        auto rep = make_value_report("group-classifying-product", {{"group", rd.label}}, val,
                                     Rational(1));
        rep.wall_time_ms = sw.elapsed_ms();
        out.push_back(std::move(rep));
    }
    return out;
}

VerificationReport run_serialization(unsigned seed, int count) {
    Stopwatch sw;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> kind(0, 2);
    int passes = 0;
    std::string first;
    for (int i = 0; i < count; ++i) {
        bool ok = false;
        if (kind(rng) < 2) {
            GradedMotiveSeries s = random_series(rng, 2, 6);
            if (i % 2) s.set_floor(-12);
            std::string j = series_to_json(s);
            GradedMotiveSeries back = series_from_json(j);
            ok = back == s && series_to_json(back) == j;
        } else {
            ClosedMotive x(random_coeff(rng), random_series(rng, 1, 4),
                           {one_minus_l_inv(2), l_pow_minus_one(3)});
            std::string j = closed_to_json(x);
            ClosedMotive back = closed_from_json(j);
            ok = closed_to_json(back) == j;
        }
        if (ok) ++passes;
        else if (first.empty()) first = "sample " + std::to_string(i);
    }
    return finish_tally("serialization-roundtrip", {{"count", std::to_string(count)}}, passes,
                        count, first, sw);
}

std::vector<VerificationReport> run_ring_case(const SuiteConfig& cfg, const SuiteCase& c,
                                              size_t index) {
    const unsigned seed = cfg.seed + 1000003u * static_cast<unsigned>(index);
    const std::string op = param_str(c, "op", "");
    if (op == "qfactorial") return {oracle_qfactorial(param_int(c, "n", 2))};
    if (op == "unit-inverse")
        return {run_unit_inverse(seed, param_int(c, "count", 200), c.floor.value_or(-40))};
    if (op == "realization-hom")
        return {run_realization_hom(seed, param_int(c, "pairs", 1000),
                                    param_str(c, "realization", "poincare"))};
    if (op == "group-classifying") return run_group_classifying();
    if (op == "serialization") return {run_serialization(seed, param_int(c, "count", 200))};
    throw ConfigError("unknown ring operation: " + op);
}

// ---- dispatch --------------------------------------------------------

std::vector<VerificationReport> run_case(const SuiteConfig& cfg, const SuiteCase& c,
                                         size_t index) {
    if (cfg.suite == "weyl") return run_weyl_case(c);
    if (cfg.suite == "affine") return run_affine_case(c);
    if (cfg.suite == "gauge") return run_gauge_case(c);
    if (cfg.suite == "count") return run_count_case(c);
    if (cfg.suite == "p1") return run_p1_case(c);
    if (cfg.suite == "sln") return run_sln_case(c);
    return run_ring_case(cfg, c, index);
}

void validate_case(const std::string& suite, const SuiteCase& c) {
    try {
        if (!c.group.empty()) build_root_datum(c.group);
        if (!c.curve.empty()) parse_curve(c.curve);
    } catch (const ConfigError&) {
        throw;
    } catch (const MotiveError& e) {
        throw ConfigError(std::string("bad case spec: ") + e.what());
    }
    if (c.floor && *c.floor >= 0) throw ConfigError("floor must be a negative integer");
    if (c.maxdeg && *c.maxdeg <= 0) throw ConfigError("maxdeg must be positive");
    const bool needs_group =
        suite == "weyl" || suite == "affine" || suite == "gauge" || suite == "p1";
    if (needs_group && c.group.empty()) throw ConfigError(suite + " cases need a group");
    if (suite == "count" && (c.group.empty() || c.curve.empty()))
        throw ConfigError("count cases need a group and a curve");
    if (suite == "sln" && c.curve.empty()) throw ConfigError("sln cases need a curve");
    if (suite == "ring" && !c.params.count("op"))
        throw ConfigError("ring cases need an op parameter");
}

void apply_perturbation(const Perturbation& p, VerificationReport& rep) {
    if (rep.check.find(p.check_substring) == std::string::npos) return;
    auto* lhs = std::get_if<GradedMotiveSeries>(&rep.lhs);
    auto* rhs = std::get_if<GradedMotiveSeries>(&rep.rhs);
    if (!lhs || !rhs) return;
    GradedMotiveSeries mutated = *lhs;
    mutated.add_term(p.mono, p.delta);
    auto rebuilt = make_series_report(rep.check, rep.inputs, std::move(mutated), *rhs);
    rebuilt.wall_time_ms = rep.wall_time_ms;
    rep = std::move(rebuilt);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"weyl", "affine", "gauge", "count",
                                               "p1",   "sln",    "ring"};
    return names;
}

const std::vector<std::string>& shipped_types() {
    static const std::vector<std::string> types{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                                               "C3", "D4", "E6", "E7", "E8", "F4", "G2"};
    return types;
}

std::vector<SuiteCase> default_cases(const std::string& suite) {
    std::vector<SuiteCase> out;
    auto add = [&out](SuiteCase c) { out.push_back(std::move(c)); };
    if (suite == "weyl") {
        for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "D4",
                              "E6", "F4", "G2"})
            add({.group = t, .curve = "", .floor = {}, .maxdeg = {}, .params = {}});
        add({.group = "E7", .curve = "", .floor = {}, .maxdeg = {},
             .params = {{"weyl_order", "2903040"}}});
        add({.group = "E8", .curve = "", .floor = {}, .maxdeg = {},
             .params = {{"weyl_order", "696729600"}}});
    } else if (suite == "affine") {
        for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"})
            add({.group = t, .curve = "", .floor = -12, .maxdeg = 14, .params = {}});
    } else if (suite == "gauge") {
        for (const char* t : {"A1", "A2", "C2", "G2"})
            for (int g = 0; g <= 3; ++g)
                add({.group = t, .curve = "", .floor = {}, .maxdeg = 16,
                     .params = {{"genus", std::to_string(g)}}});
        for (const char* t : {"A1", "A2"})
            for (int g = 0; g <= 2; ++g)
                add({.group = t, .curve = "", .floor = {}, .maxdeg = 24,
                     .params = {{"genus", std::to_string(g)}, {"variant", "serre"}}});
    } else if (suite == "count") {
        add({.group = "A1", .curve = "fq:q=2,counts=[3]", .floor = {}, .maxdeg = {},
             .params = {}});
        add({.group = "A1", .curve = "fq:q=2,counts=[]", .floor = -25, .maxdeg = {},
             .params = {}});
        add({.group = "A1-adjoint", .curve = "fq:q=2,counts=[]", .floor = {}, .maxdeg = {},
             .params = {}});
        add({.group = "A1-adjoint", .curve = "fq:q=2,counts=[3]", .floor = {}, .maxdeg = {},
             .params = {}});
        add({.group = "A2", .curve = "fq:q=2,counts=[3]", .floor = {}, .maxdeg = {},
             .params = {}});
        add({.group = "A2-adjoint", .curve = "fq:q=2,counts=[3]", .floor = {}, .maxdeg = {},
             .params = {}});
    } else if (suite == "p1") {
        for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"})
            add({.group = t, .curve = "", .floor = -12, .maxdeg = {}, .params = {}});
        for (const char* t : {"A1-adjoint", "A2-adjoint"})
            add({.group = t, .curve = "", .floor = -10, .maxdeg = {}, .params = {}});
    } else if (suite == "sln") {
        for (int n = 2; n <= 4; ++n)
            for (int g = 0; g <= 2; ++g)
                add({.group = "", .curve = "genus=" + std::to_string(g), .floor = -10,
                     .maxdeg = {}, .params = {{"n", std::to_string(n)}}});
        for (int g = 0; g <= 1; ++g)
            for (int degD : {4, 6, 8})
                add({.group = "", .curve = "genus=" + std::to_string(g), .floor = {},
                     .maxdeg = {},
                     .params = {{"n", "2"}, {"degD", std::to_string(degD)}}});
    } else if (suite == "ring") {
        for (int n = 1; n <= 5; ++n)
            add({.group = "", .curve = "", .floor = {}, .maxdeg = {},
                 .params = {{"op", "qfactorial"}, {"n", std::to_string(n)}}});
        add({.group = "", .curve = "", .floor = -40, .maxdeg = {},
             .params = {{"op", "unit-inverse"}, {"count", "200"}}});
        for (const char* r : {"poincare", "serre", "count"})
            add({.group = "", .curve = "", .floor = {}, .maxdeg = {},
                 .params = {{"op", "realization-hom"}, {"realization", r},
                            {"pairs", "1000"}}});
        add({.group = "", .curve = "", .floor = {}, .maxdeg = {},
             .params = {{"op", "group-classifying"}}});
        add({.group = "", .curve = "", .floor = {}, .maxdeg = {},
             .params = {{"op", "serialization"}, {"count", "200"}}});
    } else {
        throw ConfigError("unknown suite: " + suite);
    }
    return out;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw ConfigError("unknown suite: " + cfg.suite);
    if (cfg.parallelism < 1) throw ConfigError("parallelism must be >= 1");
    const std::vector<SuiteCase> cases =
        cfg.cases.empty() ? default_cases(cfg.suite) : cfg.cases;
    for (const auto& c : cases) validate_case(cfg.suite, c);

    std::vector<std::vector<VerificationReport>> slots(cases.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1)) {
            try {
                slots[i] = run_case(cfg, cases[i], i);
            } catch (const std::exception& e) {
                VerificationReport rep;
                rep.check = cfg.suite + "-case-error";
                rep.inputs = {{"group", cases[i].group}, {"curve", cases[i].curve}};
                rep.lhs = Rational(0);
                rep.rhs = Rational(0);
                rep.equal = false;
                rep.first_discrepancy = e.what();
                slots[i] = {std::move(rep)};
            }
        }
    };
    const size_t nworkers =
        std::min<size_t>(cases.size(), static_cast<size_t>(cfg.parallelism));
    if (nworkers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < nworkers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<VerificationReport> out;
    for (auto& group : slots)
        for (auto& rep : group) {
            if (cfg.perturbation) apply_perturbation(*cfg.perturbation, rep);
            out.push_back(std::move(rep));
        }
    return out;
}

bool all_equal(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.equal; });
}

VerificationReport oracle_qfactorial(int n) {
    if (n < 1 || n > 8) throw LimitExceeded("q-factorial oracle is bounded to n <= 8");
    Stopwatch sw;
    GradedMotiveSeries lhs = gl_motive(n).numerator();
    GradedMotiveSeries rhs = GradedMotiveSeries::l_power(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i) rhs = ring_mul(rhs, l_minus_one());
    for (int k = 1; k <= n; ++k) rhs = ring_mul(rhs, l_geom(k));
    auto rep = make_series_report("qfactorial-identity", {{"n", std::to_string(n)}},
                                  std::move(lhs), std::move(rhs));
    rep.wall_time_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace motives
