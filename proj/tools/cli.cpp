#include "cli.hpp"

#include "motives/bundles.hpp"
#include "motives/closed.hpp"
#include "motives/curve.hpp"
#include "motives/errors.hpp"
#include "motives/io.hpp"
#include "motives/realize.hpp"
#include "motives/root_datum.hpp"
#include "motives/verify.hpp"
#include "motives/zeta.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace motives::cli {

namespace {

struct Options {
    std::string group;
    std::string curve;
    std::optional<int> floor;
    std::optional<int> maxdeg;
    std::string realization = "universal";
    std::string format = "text";
    std::string suite;
    std::string input;
    std::string config;
    std::optional<int> genus;
    std::optional<int> special;
    int parallelism = 1;
    unsigned seed = 424243;
    std::vector<std::string> params;
};

struct RealizationSpec {
    enum class Kind { Universal, Poincare, Serre, Count } kind;
    Rational q = 0;
};

RealizationSpec parse_realization(const std::string& s) {
    using Kind = RealizationSpec::Kind;
    if (s == "universal") return {Kind::Universal, 0};
    if (s == "poincare") return {Kind::Poincare, 0};
    if (s == "serre") return {Kind::Serre, 0};
    if (s.rfind("count:q=", 0) == 0) {
        Rational q = rational_from_string(s.substr(8));
        return {Kind::Count, q};
    }
    if (s == "count" || s.rfind("count:", 0) == 0)
        throw ConfigError("count realization needs a field size, e.g. count:q=2");
    throw ConfigError("unknown realization: " + s);
}

int parse_int(const std::string& v, const std::string& key) {
    try {
        size_t used = 0;
        int out = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (...) {
        throw ConfigError("config value for " + key + " is not an integer: " + v);
    }
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Flat key=value file; command-line flags win over file entries.
void apply_config(const Options& parsed, CLI::App* sub, Options& o) {
    std::ifstream in(parsed.config);
    if (!in) throw ConfigError("cannot read config file " + parsed.config);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + " needs key=value");
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (key == "param") {
            o.params.push_back(val);
            continue;
        }
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (!opt) throw ConfigError("config key not accepted here: " + key);
        if (opt->count() > 0) continue;
        if (key == "group") o.group = val;
        else if (key == "curve") o.curve = val;
        else if (key == "floor") o.floor = parse_int(val, key);
        else if (key == "maxdeg") o.maxdeg = parse_int(val, key);
        else if (key == "realization") o.realization = val;
        else if (key == "format") o.format = val;
        else if (key == "suite") o.suite = val;
        else if (key == "input") o.input = val;
        else if (key == "genus") o.genus = parse_int(val, key);
        else if (key == "special") o.special = parse_int(val, key);
        else if (key == "parallelism") o.parallelism = parse_int(val, key);
        else if (key == "seed") o.seed = static_cast<unsigned>(parse_int(val, key));
        else throw ConfigError("config key not accepted here: " + key);
    }
}

Realization scalar_count_realization(const RealizationSpec& rs, const CurveData* curve) {
    if (curve && curve->has_counts) {
        if (curve->q != rs.q)
            throw ConfigError("realization field size differs from the curve's");
        return count_realization(*curve);
    }
    if (curve && curve->genus > 0)
        throw ConfigError("curve has no point counts; use an fq: spec");
    return count_realization(rs.q, {1});
}

/// Smallest genus whose symbol alphabet covers the series.
int infer_genus(const GradedMotiveSeries& s) {
    size_t jmax = 0;
    for (const auto& [m, c] : s.terms())
        for (size_t j = m.a.size(); j > 0; --j)
            if (m.a[j - 1] != 0) {
                jmax = std::max(jmax, j);
                break;
            }
    return static_cast<int>((jmax + 1) / 2);
}

int emit_value(const Rational& v, const Options& o, std::ostream& out) {
    if (o.format == "json")
        out << "{\"type\":\"value\",\"value\":\"" << rational_to_string(v) << "\"}\n";
    else
        out << rational_to_string(v) << "\n";
    return 0;
}

int emit_poly(const TargetPoly& p, bool bivariate, const Options& o, std::ostream& out) {
    if (o.format == "json")
        out << target_poly_to_json(p) << "\n";
    else if (bivariate)
        out << target_poly_to_text(p, "u", "v") << "\n";
    else
        out << target_poly_to_text(p) << "\n";
    return 0;
}

int emit_series(const GradedMotiveSeries& s, const RealizationSpec& rs,
                const CurveData* curve, const Options& o, std::ostream& out,
                std::ostream& err) {
    using Kind = RealizationSpec::Kind;
    switch (rs.kind) {
        case Kind::Universal:
            if (o.format == "json")
                out << series_to_json(s) << "\n";
            else
                out << series_to_text(s) << "\n";
            return 0;
        case Kind::Poincare:
        case Kind::Serre: {
            int genus = o.genus ? *o.genus : (curve ? curve->genus : infer_genus(s));
            Realization r = rs.kind == Kind::Poincare ? poincare_realization(genus)
                                                      : serre_realization(genus);
            return emit_poly(realize_series(s, r), rs.kind == Kind::Serre, o, out);
        }
        case Kind::Count: {
            CountEstimate est = counting_measure(s, scalar_count_realization(rs, curve));
            if (!est.exact)
                err << "note: truncated sum, tail bounded by "
                    << rational_to_string(est.tail_bound) << "\n";
            return emit_value(est.value, o, out);
        }
    }
    return 2;
}

int emit_closed(const ClosedMotive& x, const CurveData* curve, const Options& o,
                std::ostream& out, std::ostream& err) {
    using Kind = RealizationSpec::Kind;
    RealizationSpec rs = parse_realization(o.realization);
    if (rs.kind == Kind::Count)
        return emit_value(counting_measure(x, scalar_count_realization(rs, curve)), o, out);
    if (rs.kind == Kind::Universal && !o.floor) {
        if (o.format == "json")
            out << closed_to_json(x) << "\n";
        else
            out << closed_to_text(x) << "\n";
        return 0;
    }
    if (!o.floor)
        throw ConfigError("this realization needs --floor to expand first");
    return emit_series(expand(x, *o.floor), rs, curve, o, out, err);
}

int cmd_bun(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.group.empty()) throw ConfigError("bun needs --group");
    if (o.curve.empty()) throw ConfigError("bun needs --curve");
    RootDatum rd = build_root_datum(o.group);
    CurveData curve = parse_curve(o.curve);
    for (const auto& lint : curve.lints) err << "note: " << lint << "\n";
    return emit_closed(conjecture_motive(rd, curve), &curve, o, out, err);
}

int cmd_group(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.group.empty()) throw ConfigError("group needs --group");
    RootDatum rd = build_root_datum(o.group);
    ClosedMotive g = group_motive(rd);
    ClosedMotive bg = classifying_motive(rd);
    if (o.format == "json") {
        out << "{\"root_datum\":" << root_datum_to_json(rd)
            << ",\"group_motive\":" << closed_to_json(g)
            << ",\"classifying_motive\":" << closed_to_json(bg) << "}\n";
        return 0;
    }
    out << "label: " << rd.label << "\n";
    out << "rank: " << rd.rank << "\n";
    out << "dim: " << rd.dim << "\n";
    out << "positive roots: " << rd.num_positive_roots() << "\n";
    out << "degrees:";
    for (int d : rd.degrees) out << " " << d;
    out << "\n";
    out << "weyl order: " << rd.weyl_order().str() << "\n";
    out << "pi1 order: " << rd.pi1_order.str() << "\n";
    out << "mu(G): " << closed_to_text(g) << "\n";
    out << "mu(BG): " << closed_to_text(bg) << "\n";
    RealizationSpec rs = parse_realization(o.realization);
    if (rs.kind != RealizationSpec::Kind::Universal) {
        Options sub = o;
        return emit_closed(bg, nullptr, sub, out, err);
    }
    return 0;
}

int cmd_zeta(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.curve.empty()) throw ConfigError("zeta needs --curve");
    if (!o.special) throw ConfigError("zeta needs --special <s>");
    CurveData curve = parse_curve(o.curve);
    for (const auto& lint : curve.lints) err << "note: " << lint << "\n";
    return emit_closed(zeta_special_value(curve, *o.special), &curve, o, out, err);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    if (o.suite.empty()) throw ConfigError("verify needs --suite");
    SuiteConfig cfg;
    cfg.suite = o.suite;
    cfg.parallelism = o.parallelism;
    cfg.seed = o.seed;
    if (!o.group.empty() || !o.curve.empty() || o.floor || o.maxdeg || !o.params.empty()) {
        SuiteCase c{o.group, o.curve, o.floor, o.maxdeg, {}};
        for (const auto& kv : o.params) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw ConfigError("--param needs key=value, got " + kv);
            c.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        cfg.cases.push_back(std::move(c));
    }
    std::vector<VerificationReport> reports = run_suite(cfg);
    if (o.format == "json") {
        out << "[";
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) out << ",";
            out << report_to_json(reports[i]);
        }
        out << "]\n";
    } else {
        size_t passed = 0;
        for (const auto& r : reports) {
            passed += r.equal ? 1 : 0;
            out << (r.equal ? "ok   " : "FAIL ") << r.check;
            for (const auto& [k, v] : r.inputs) out << " " << k << "=" << v;
            out << " (" << r.wall_time_ms << " ms)\n";
            if (!r.equal && !r.first_discrepancy.empty())
                out << "     " << r.first_discrepancy << "\n";
        }
        out << (passed == reports.size() ? "PASS " : "FAIL ") << passed << "/"
            << reports.size() << " checks\n";
    }
    return all_equal(reports) ? 0 : 1;
}

int cmd_realize(const Options& o, std::ostream& out, std::ostream& err) {
    std::string text;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw ConfigError("cannot read input file " + o.input);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }
    RealizationSpec rs = parse_realization(o.realization);
    CurveData curve;
    const CurveData* curve_ptr = nullptr;
    if (!o.curve.empty()) {
        curve = parse_curve(o.curve);
        curve_ptr = &curve;
    }
    try {
        GradedMotiveSeries s = series_from_json(text);
        return emit_series(s, rs, curve_ptr, o, out, err);
    } catch (const ConfigError&) {
    }
    ClosedMotive x = closed_from_json(text);
    return emit_closed(x, curve_ptr, o, out, err);
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format: text or json");
    sub->add_option("--config", o.config, "Flat key=value file with the same flags");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact motive computations for moduli of bundles on curves"};
    app.require_subcommand(1);
    Options o;

    CLI::App* bun = app.add_subcommand("bun", "Conjectural motive of the bundle moduli stack");
    bun->add_option("--group", o.group, "Root datum, e.g. A2-sc, G2, B3-adjoint, A1xA1");
    bun->add_option("--curve", o.curve, "Curve spec: genus=g or fq:q=...,counts=[...]");
    bun->add_option("--floor", o.floor, "Expand down to this dimension (negative)");
    bun->add_option("--realization", o.realization,
                    "universal | poincare | serre | count:q=...");
    add_common(bun, o);

    CLI::App* grp = app.add_subcommand("group", "Root datum facts and motives of G, BG");
    grp->add_option("--group", o.group, "Root datum spec");
    grp->add_option("--floor", o.floor, "Expansion floor for realized output");
    grp->add_option("--realization", o.realization, "Additionally realize mu(BG)");
    add_common(grp, o);

    CLI::App* zeta = app.add_subcommand("zeta", "Special value Z(C, L^-s) of the curve zeta");
    zeta->add_option("--curve", o.curve, "Curve spec");
    zeta->add_option("--special", o.special, "Evaluation point s (s >= 2 converges)");
    zeta->add_option("--floor", o.floor, "Expansion floor");
    zeta->add_option("--realization", o.realization,
                     "universal | poincare | serre | count:q=...");
    add_common(zeta, o);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "weyl | affine | gauge | count | p1 | sln | ring");
    verify->add_option("--group", o.group, "Restrict to one case with this root datum");
    verify->add_option("--curve", o.curve, "Curve spec for the single case");
    verify->add_option("--floor", o.floor, "Floor for the single case");
    verify->add_option("--maxdeg", o.maxdeg, "Degree bound for the single case");
    verify->add_option("--param", o.params, "Extra case parameter key=value (repeatable)");
    verify->add_option("--parallelism", o.parallelism, "Concurrent cases");
    verify->add_option("--seed", o.seed, "Seed for randomized checks");
    add_common(verify, o);

    CLI::App* realize = app.add_subcommand("realize",
                                           "Apply a realization to a serialized motive");
    realize->add_option("--input", o.input, "JSON file (default: standard input)");
    realize->add_option("--realization", o.realization,
                        "universal | poincare | serre | count:q=...");
    realize->add_option("--genus", o.genus, "Genus fixing the symbol images");
    realize->add_option("--curve", o.curve, "Curve supplying count data");
    realize->add_option("--floor", o.floor, "Expansion floor for closed input");
    add_common(realize, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        if (!o.config.empty()) apply_config(o, active, o);
        if (o.format != "text" && o.format != "json")
            throw ConfigError("unknown format: " + o.format);
        if (active == bun) return cmd_bun(o, out, err);
        if (active == grp) return cmd_group(o, out, err);
        if (active == zeta) return cmd_zeta(o, out, err);
        if (active == verify) return cmd_verify(o, out, err);
        if (active == realize) return cmd_realize(o, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MotiveError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace motives::cli
