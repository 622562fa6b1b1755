#include "motives/io.hpp"

#include "motives/errors.hpp"

#include <json.hpp>

namespace motives {

namespace {

using Json = nlohmann::ordered_json;

std::string l_part(int l) {
    if (l == 1) return "L";
    return "L^" + std::to_string(l);
}

Json series_json_obj(const GradedMotiveSeries& s) {
    Json j;
    j["type"] = "series";
    if (s.floor())
        j["floor"] = *s.floor();
    else
        j["floor"] = nullptr;
    Json monos = Json::array();
    for (const auto& [mono, coeff] : s.terms()) {
        Json m;
        m["c"] = rational_to_string(coeff);
        m["l"] = mono.l;
        m["a"] = mono.a;
        monos.push_back(std::move(m));
    }
    j["monomials"] = std::move(monos);
    return j;
}

GradedMotiveSeries series_from_json_obj(const Json& j) {
    if (!j.is_object() || j.value("type", std::string()) != "series")
        throw ConfigError("expected a series object");
    GradedMotiveSeries s;
    if (j.contains("floor") && !j.at("floor").is_null()) s.set_floor(j.at("floor").get<int>());
    for (const auto& m : j.at("monomials")) {
        MotiveMonomial mono(m.at("l").get<int>(), m.at("a").get<std::vector<int>>());
        s.add_term(mono, rational_from_string(m.at("c").get<std::string>()));
    }
    return s;
}

Json closed_json_obj(const ClosedMotive& x) {
    Json j;
    j["type"] = "closed";
    j["scalar"] = rational_to_string(x.scalar());
    j["numerator"] = series_json_obj(x.numerator());
    Json den = Json::array();
    for (const auto& f : x.denominator()) {
        Json d;
        if (f.kind == DenominatorFactor::Kind::OneMinusLInv) {
            d["kind"] = "1-L^-k";
            d["k"] = f.k;
        } else {
            d["kind"] = "L^m-1";
            d["m"] = f.k;
        }
        den.push_back(std::move(d));
    }
    j["denominator"] = std::move(den);
    j["torsor"] = x.uses_torsor_relation();
    return j;
}

Json poly_json_obj(const TargetPoly& p) {
    Json j;
    j["type"] = "poly";
    Json terms = Json::array();
    for (const auto& [key, coeff] : p.terms()) {
        Json t;
        t["c"] = rational_to_string(coeff);
        t["u"] = key.first;
        t["v"] = key.second;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json payload_json(const ReportPayload& p) {
    if (const auto* s = std::get_if<GradedMotiveSeries>(&p)) return series_json_obj(*s);
    if (const auto* t = std::get_if<TargetPoly>(&p)) return poly_json_obj(*t);
    Json j;
    j["type"] = "value";
    j["value"] = rational_to_string(std::get<Rational>(p));
    return j;
}

Json parse_or_throw(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("malformed JSON input");
    return j;
}

}  // namespace

std::string monomial_to_text(const MotiveMonomial& m) {
    std::string out;
    for (size_t j = 0; j < m.a.size(); ++j) {
        if (m.a[j] == 0) continue;
        if (!out.empty()) out += " ";
        out += "a" + std::to_string(j + 1);
        if (m.a[j] != 1) out += "^" + std::to_string(m.a[j]);
    }
    if (m.l != 0) {
        if (!out.empty()) out += " ";
        out += l_part(m.l);
    }
    return out.empty() ? "1" : out;
}

std::string series_to_text(const GradedMotiveSeries& s) {
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : s.terms()) {
        bool neg = coeff < 0;
        Rational mag = neg ? Rational(-coeff) : coeff;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body = monomial_to_text(mono);
        if (mag == 1)
            out += body;
        else if (body == "1")
            out += rational_to_string(mag);
        else
            out += rational_to_string(mag) + " " + body;
    }
    if (s.floor()) {
        std::string tail = "O(dim<" + std::to_string(*s.floor()) + ")";
        return out.empty() ? tail : out + " + " + tail;
    }
    return out.empty() ? "0" : out;
}

std::string closed_to_text(const ClosedMotive& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.scalar() != 1) out += rational_to_string(x.scalar());
    std::string num = series_to_text(x.numerator());
    if (num != "1") {
        if (!out.empty()) out += " * ";
        out += x.numerator().terms().size() > 1 ? "(" + num + ")" : num;
    }
    if (out.empty()) out = "1";
    if (!x.denominator().empty()) {
        out += " / ";
        for (const auto& f : x.denominator())
            out += f.kind == DenominatorFactor::Kind::OneMinusLInv
                       ? "(1-L^-" + std::to_string(f.k) + ")"
                       : "(L^" + std::to_string(f.k) + "-1)";
    }
    return out;
}

std::string series_to_json(const GradedMotiveSeries& s) { return series_json_obj(s).dump(); }

GradedMotiveSeries series_from_json(const std::string& text) {
    try {
        return series_from_json_obj(parse_or_throw(text));
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad series JSON: ") + e.what());
    }
}

std::string closed_to_json(const ClosedMotive& x) { return closed_json_obj(x).dump(); }

ClosedMotive closed_from_json(const std::string& text) {
    try {
        Json j = parse_or_throw(text);
        if (!j.is_object() || j.value("type", std::string()) != "closed")
            throw ConfigError("expected a closed-motive object");
        std::vector<DenominatorFactor> den;
        for (const auto& d : j.at("denominator")) {
            std::string kind = d.at("kind").get<std::string>();
            if (kind == "1-L^-k")
                den.push_back(one_minus_l_inv(d.at("k").get<int>()));
            else if (kind == "L^m-1")
                den.push_back(l_pow_minus_one(d.at("m").get<int>()));
            else
                throw ConfigError("unknown denominator kind: " + kind);
        }
        ClosedMotive x(rational_from_string(j.at("scalar").get<std::string>()),
                       series_from_json_obj(j.at("numerator")), std::move(den));
        if (j.value("torsor", false)) x.mark_torsor_relation();
        return x;
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad closed-motive JSON: ") + e.what());
    }
}

std::string target_poly_to_json(const TargetPoly& p) { return poly_json_obj(p).dump(); }

std::string root_datum_to_json(const RootDatum& rd) {
    Json j;
    j["type"] = "root-datum";
    j["label"] = rd.label;
    j["isogeny"] = rd.isogeny == Isogeny::SimplyConnected ? "sc" : "adjoint";
    j["rank"] = rd.rank;
    j["dim"] = rd.dim;
    j["positive_roots"] = rd.num_positive_roots();
    j["degrees"] = rd.degrees;
    j["weyl_order"] = rd.weyl_order().str();
    j["pi1"] = rd.pi1_order.str();
    return j.dump();
}

std::string report_to_json(const VerificationReport& r) {
    Json j;
    j["check"] = r.check;
    Json in = Json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = std::move(in);
    if (r.floor_or_maxdeg)
        j["floor_or_maxdeg"] = *r.floor_or_maxdeg;
    else
        j["floor_or_maxdeg"] = nullptr;
    j["lhs"] = payload_json(r.lhs);
    j["rhs"] = payload_json(r.rhs);
    j["equal"] = r.equal;
    j["first_discrepancy"] = r.first_discrepancy;
    j["wall_time_ms"] = r.wall_time_ms;
    return j.dump();
}

}  // namespace motives
