#include "delpezzo/json_io.hpp"

#include <stdexcept>

namespace delpezzo {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw std::invalid_argument("expected a rational \"p/q\", got " + j.dump());
}

Json to_json(const SurfaceModel& s) {
    if (s.is_plane()) return Json{{"kind", "P2"}};
    return Json{{"kind", "Fn"}, {"n", s.n()}, {"k", s.k()}};
}

SurfaceModel surface_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "P2") return SurfaceModel::projective_plane();
    if (kind == "Fn") return SurfaceModel::hirzebruch(j.at("n").get<int>(), j.value("k", 0));
    throw std::invalid_argument("unknown surface kind '" + kind + "'");
}

Json to_json(const DivisorClass& d) {
    Json coeffs = Json::array();
    for (const auto& c : d.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"surface", to_json(d.surface())}, {"coeffs", coeffs}};
}

DivisorClass divisor_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return DivisorClass(surface_from_json(j.at("surface")), std::move(coeffs));
}

BlowupConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("configuration must be a JSON object");
    if (j.contains("surface")) {
        const std::string s = j.at("surface").get<std::string>();
        if (s == "P2") return BlowupConfig::plane();
        if (s != "Fn") throw std::invalid_argument("unknown surface '" + s + "'");
    }
    std::vector<RawPoint> raw;
    if (j.contains("points")) {
        for (const auto& p : j.at("points")) {
            RawPoint r;
            r.location = parse_point_location(p.at("loc").get<std::string>());
            r.ref = p.value("ref", 0);
            r.on_section = p.value("on_section", false);
            raw.push_back(r);
        }
    }
    return normalize_off_section(j.at("n").get<int>(), raw);
}

Json to_json(const BlowupConfig& cfg) {
    if (cfg.is_plane()) return Json{{"surface", "P2"}};
    Json points = Json::array();
    for (const auto& p : cfg.points()) {
        Json e{{"loc", to_string(p.location)}};
        if (p.location != PointLocation::FreshFiber) e["ref"] = p.ref;
        points.push_back(e);
    }
    return Json{{"n", cfg.n()}, {"points", points}};
}

std::vector<BoundaryTerm> boundary_from_json(const Json& j) {
    const Json& terms = j.is_object() ? j.at("boundary") : j;
    if (!terms.is_array()) throw std::invalid_argument("boundary must be a JSON array");
    std::vector<BoundaryTerm> out;
    for (const auto& t : terms) {
        BoundaryTerm term{ExceptionalComponent{}, rational_from_json(t.at("coeff"))};
        if (t.contains("curve")) {
            const Json& c = t.at("curve");
            TrackedCurve curve{rational_from_json(c.at("alpha")), rational_from_json(c.value("beta", Json("0"))),
                               {}};
            if (c.contains("mults")) {
                for (const auto& m : c.at("mults")) curve.mults.push_back(rational_from_json(m));
            }
            term.component = std::move(curve);
        } else if (t.contains("exceptional")) {
            term.component = ExceptionalComponent{t.at("exceptional").get<int>()};
        } else {
            throw std::invalid_argument("boundary term needs \"curve\" or \"exceptional\"");
        }
        out.push_back(std::move(term));
    }
    return out;
}

Json boundary_to_json(const std::vector<BoundaryTerm>& terms) {
    Json out = Json::array();
    for (const auto& t : terms) {
        Json e;
        if (const auto* c = std::get_if<TrackedCurve>(&t.component)) {
            Json mults = Json::array();
            for (const auto& m : c->mults) mults.push_back(to_json(m));
            e["curve"] = Json{{"alpha", to_json(c->alpha)}, {"beta", to_json(c->beta)}, {"mults", mults}};
        } else {
            e["exceptional"] = std::get<ExceptionalComponent>(t.component).id;
        }
        e["coeff"] = to_json(t.coeff);
        out.push_back(e);
    }
    return out;
}

Json to_json(const NefVerdict& v) {
    Json j{{"status", to_string(v.status)}};
    if (v.witness) j["witness"] = to_json(*v.witness);
    j["reason"] = v.reason;
    return j;
}

Json to_json(const DiscrepancyReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(Json{{"label", e.label}, {"discrepancy", to_json(e.discrepancy)}});
    Json j{{"entries", entries}, {"verdict", to_string(r.verdict)}};
    if (!r.violated.empty()) j["violated"] = r.violated;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

namespace {

std::string kind_name(ExtremalKind k) {
    switch (k) {
        case ExtremalKind::P2: return "P2";
        case ExtremalKind::FnPair: return "FnPair";
        case ExtremalKind::PCn: return "PCn";
        case ExtremalKind::BlowupExample: return "BlowupExample";
    }
    return "?";
}

std::string fibers_name(FiberPattern f) {
    switch (f) {
        case FiberPattern::None: return "none";
        case FiberPattern::DistinctFibers: return "distinct_fibers";
        case FiberPattern::SameFiber: return "same_fiber";
    }
    return "?";
}

std::string recipe_name(BoundaryRecipe r) {
    switch (r) {
        case BoundaryRecipe::None: return "none";
        case BoundaryRecipe::SectionOnly: return "section_only";
        case BoundaryRecipe::SectionAndFiber: return "section_and_fiber";
    }
    return "?";
}

Json assignment_json(const CaseSpec& spec, const Assignment& x) {
    Json j = Json::object();
    for (std::size_t i = 0; i < x.size(); ++i) j[spec.variables[i].name] = to_json(x[i]);
    return j;
}

}  // namespace

Json to_json(const ExtremalDescriptor& d) {
    return Json{{"kind", kind_name(d.kind)},   {"n", d.n},
                {"k", d.k},                    {"fibers", fibers_name(d.fibers)},
                {"recipe", recipe_name(d.recipe)}, {"label", d.str()}};
}

Json to_json(const BoundResult& b) {
    Json branches = Json::array();
    for (const auto& br : b.branches) {
        Json ex = Json::array();
        for (const auto& e : br.extremals) ex.push_back(to_json(e));
        branches.push_back(Json{{"label", br.label}, {"value", to_json(br.value)}, {"extremals", ex}});
    }
    Json ex = Json::array();
    for (const auto& e : b.extremals) ex.push_back(to_json(e));
    return Json{{"value", to_json(b.value)}, {"branches", branches}, {"extremals", ex}};
}

Json to_json(const CaseSpec& spec, const OptResult& r) {
    Json j{{"case", to_string(spec.id)}, {"n", spec.n}};
    if (spec.id == CaseId::GeneralK) j["k"] = spec.k;
    j["epsilon"] = to_json(spec.epsilon);
    j["closed_form"] = to_json(r.closed_form);
    j["max_value"] = r.max_value ? to_json(*r.max_value) : Json(nullptr);
    j["argmax"] = r.max_value ? assignment_json(spec, r.argmax) : Json(nullptr);
    j["argmax_count"] = r.argmax_count;
    j["feasible_points"] = r.feasible_points;
    j["violations"] = r.violations;
    if (r.violations > 0) j["first_violation"] = assignment_json(spec, r.first_violation);
    j["extremal"] = assignment_json(spec, spec.extremal);
    j["extremal_feasible"] = r.extremal_feasible;
    j["extremal_value"] = to_json(r.extremal_value);
    j["attained_on_grid"] = r.attained_on_grid;
    j["attained_by_extremal"] = r.attained_by_extremal;
    j["verified"] = r.verified;
    return j;
}

Json to_json(const SweepReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json j{{"case", to_string(e.id)}, {"n", e.n}};
        if (e.id == CaseId::GeneralK) j["k"] = e.k;
        j["max_value"] = to_json(e.result.best_value());
        j["closed_form"] = to_json(e.result.closed_form);
        j["feasible_points"] = e.result.feasible_points;
        j["violations"] = e.result.violations;
        j["bound_label"] = e.bound_label;
        j["bound"] = to_json(e.bound);
        j["passed"] = e.passed;
        entries.push_back(j);
    }
    return Json{{"epsilon", to_json(r.epsilon)},
                {"step", to_json(r.step)},
                {"global_max", to_json(r.global_max)},
                {"rho4_branch_a", to_json(r.rho4_branch_a)},
                {"rho4_branch_b", to_json(r.rho4_branch_b)},
                {"passed", r.passed},
                {"entries", entries}};
}

Json to_json(const ClaimReport& c) {
    Json j{{"outcome", to_string(c.outcome)},
           {"regime", c.regime},
           {"threshold", to_json(c.threshold)},
           {"min_sum", c.min_sum},
           {"vacuous", c.vacuous},
           {"sections", c.sections},
           {"balanced", c.balanced},
           {"balanced_conditions", c.balanced_conditions},
           {"relaxed_conditions", to_json(c.relaxed_conditions)}};
    if (c.escape_condition) j["escape_condition"] = *c.escape_condition;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"description", c.description}, {"status", c.passed ? "pass" : "fail"}};
        if (c.witness) j["witness"] = *c.witness;
        checks.push_back(j);
    }
    Json escapes = Json::array();
    for (const auto& e : r.escapes) {
        escapes.push_back(Json{{"alpha", e.alpha},
                               {"beta", e.beta},
                               {"mults", e.mults},
                               {"condition", e.condition},
                               {"description", e.description}});
    }
    return Json{{"subject", r.subject},
                {"checks", checks},
                {"escapes", escapes},
                {"notes", r.notes},
                {"overall", r.overall}};
}

}  // namespace delpezzo
