#include "capra/json_io.hpp"

namespace capra {

Json rat_to_json(const Rat& r) {
    if (denominator(r) == 1) {
        Int n = numerator(r);
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
            return n.convert_to<std::int64_t>();
    }
    return rat_format(r);
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw SchemaError("expected an exact rational (integer or \"p/q\" string)");
}

Json vecr_to_json(const VecR& v) {
    Json a = Json::array();
    for (const Rat& c : v) a.push_back(rat_to_json(c));
    return a;
}

Json vecd_to_json(const VecD& v) {
    Json a = Json::array();
    for (double c : v) a.push_back(c == 0.0 ? 0.0 : c);  // normalize -0
    return a;
}

Json norm_to_json(const SourceNorm& n) {
    switch (n.kind) {
        case SourceNorm::P::one: return Json{{"p", "1"}};
        case SourceNorm::P::two: return Json{{"p", "2"}};
        case SourceNorm::P::inf: return Json{{"p", "inf"}};
        default: return Json{{"p", n.p_value}};
    }
}

SourceNorm norm_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p")) throw SchemaError("norm: expected {\"p\": \"1\"|\"2\"|\"inf\"|number}");
    check_keys(j, {"p"}, "norm");
    const Json& p = j.at("p");
    if (p.is_string()) {
        std::string s = p.get<std::string>();
        if (s == "1") return SourceNorm::l1();
        if (s == "2") return SourceNorm::l2();
        if (s == "inf") return SourceNorm::linf();
        throw SchemaError("norm: unknown p \"" + s + "\"");
    }
    if (p.is_number()) return SourceNorm::lp(p.get<double>());
    throw SchemaError("norm: p must be a string tag or a number");
}

Json sphere_set_to_json(const SphereSet& s) {
    Json j;
    j["origin"] = s.origin;
    Json pts = Json::array();
    for (const P2& p : s.points) pts.push_back(Json::array({rat_to_json(p.x), rat_to_json(p.y)}));
    j["points"] = pts;
    Json segs = Json::array();
    for (const Seg2& g : s.segments)
        segs.push_back(Json::array({Json::array({rat_to_json(g.a.x), rat_to_json(g.a.y)}),
                                    Json::array({rat_to_json(g.b.x), rat_to_json(g.b.y)})}));
    j["segments"] = segs;
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    if (const auto* comb = std::get_if<CombinationCert>(&c)) {
        j["kind"] = "combination";
        Json ws = Json::array();
        for (const auto& [w, idx] : comb->weights) ws.push_back(Json::array({rat_format(w), idx}));
        j["weights"] = ws;
        Json pts = Json::array();
        for (const VecR& p : comb->points) pts.push_back(vecr_to_json(p));
        j["points"] = pts;
        return j;
    }
    if (const auto* sep = std::get_if<SeparatorCert>(&c)) {
        j["kind"] = "separator";
        j["a"] = vecr_to_json(sep->a);
        j["b"] = rat_format(sep->b);
        Json pts = Json::array();
        for (const VecR& p : sep->points) pts.push_back(vecr_to_json(p));
        j["points"] = pts;
        return j;
    }
    if (const auto* ker = std::get_if<KernelWitnessCert>(&c)) {
        j["kind"] = "kernel_witness";
        Json rows = Json::array();
        for (const VecR& r : ker->a_rows) rows.push_back(vecr_to_json(r));
        j["A"] = rows;
        j["witness"] = vecr_to_json(ker->witness);
        return j;
    }
    if (const auto* ex = std::get_if<ExcessWitnessCert>(&c)) {
        j["kind"] = "excess_witness";
        j["origin"] = ex->origin;
        if (ex->point) j["point"] = vecr_to_json(*ex->point);
        return j;
    }
    if (const auto* eq = std::get_if<SetEqualityCert>(&c)) {
        j["kind"] = "set_equality";
        j["lhs"] = sphere_set_to_json(eq->lhs);
        j["rhs"] = sphere_set_to_json(eq->rhs);
        return j;
    }
    const auto& tr = std::get<TrivialCert>(c);
    j["kind"] = "trivial";
    j["note"] = tr.note;
    return j;
}

Json conditions_to_json(const Conditions& c) {
    return Json{{"cone", c.is_cone}, {"union_origin_closed", c.union_origin_closed}, {"origin_agreement", c.origin_agreement}};
}

Json oracle_to_json(const OracleResult& o) {
    Json j;
    j["samples"] = o.samples;
    j["tol"] = o.tol;
    j["seed"] = o.seed;
    j["origin_excess"] = o.origin_excess;
    j["flagged"] = o.flagged;
    Json ws = Json::array();
    for (const VecD& w : o.witnesses) ws.push_back(vecd_to_json(w));
    j["witnesses"] = ws;
    j["suggested"] = to_string(o.suggested);
    return j;
}

Json report_to_json(const DecisionReport& r, const std::string& label, std::uint64_t seed,
                    const std::optional<OracleResult>& oracle) {
    Json j;
    j["schema"] = "capra-report/1";
    j["label"] = label;
    j["norm"] = norm_to_json(r.norm);
    j["verdict"] = to_string(r.verdict);
    j["rule"] = to_string(r.rule);
    j["conditions"] = conditions_to_json(r.conditions);
    j["certificate"] = certificate_to_json(r.certificate);
    j["seed"] = seed;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (oracle) j["oracle"] = oracle_to_json(*oracle);
    return j;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& context) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok) throw SchemaError(context + ": unknown key \"" + it.key() + "\"");
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace capra
