#include "kakeya/jsonio.hpp"

namespace kakeya {

namespace {

const FieldCtx kQ = FieldCtx::rationals();

json strings(const std::vector<MultiPoly>& polys) {
    json arr = json::array();
    for (const auto& p : polys) arr.push_back(p.str());
    return arr;
}

json expr_strings(const std::vector<RationalExpr>& exprs) {
    json arr = json::array();
    for (const auto& e : exprs) arr.push_back(e.str());
    return arr;
}

std::vector<MultiPoly> parse_list(const json& arr, const VarSet& vars) {
    std::vector<MultiPoly> out;
    for (const auto& s : arr) out.push_back(parse_poly(s.get<std::string>(), vars, kQ));
    return out;
}

std::vector<RationalExpr> parse_expr_list(const json& arr, const VarSet& vars) {
    std::vector<RationalExpr> out;
    for (const auto& s : arr) out.push_back(parse_rational(s.get<std::string>(), vars, kQ));
    return out;
}

VarSet varset_from_json(const json& arr) {
    std::vector<std::string> names;
    for (const auto& s : arr) names.push_back(s.get<std::string>());
    return VarSet{names};
}

json varset_to_json(const VarSet& vars) {
    json arr = json::array();
    for (const auto& n : vars.names()) arr.push_back(n);
    return arr;
}

VarSet dir_vars_for(unsigned n) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return VarSet{names};
}

}  // namespace

json report_to_json(const VerificationReport& rep, const std::string& set_name,
                    bool include_witnesses) {
    json j;
    j["set"] = set_name;
    j["mode"] = rep.mode;
    j["status"] = rep.pass ? "pass" : "fail";
    j["q"] = rep.q;
    j["directions_checked"] = rep.directions_checked;
    j["failing_direction"] = rep.failing_direction ? json(*rep.failing_direction) : json();
    j["failure_kind"] = rep.failure_kind.empty() ? json() : json(rep.failure_kind);
    if (include_witnesses) {
        json wm = json::object();
        for (const auto& [dir, line] : rep.witness_map) wm[dir] = line;
        j["witness_map"] = std::move(wm);
    }
    return j;
}

json diagnosis_to_json(const DiagnosisReport& rep) {
    json j;
    j["d"] = rep.d;
    j["q"] = rep.q;
    j["finite_sample"] = rep.finite_sample;
    j["irreducibility_assumed"] = rep.irreducibility_assumed;
    j["checks"]["cone_detected"] = rep.cone_detected;
    j["checks"]["unique_singular_point"] = rep.unique_singular;
    j["checks"]["singular_multiplicity_d_minus_1"] = rep.singular_mult_is_d_minus_1;
    j["checks"]["nonflexy_smooth_point_exists"] = rep.has_nonflexy_smooth_point;
    j["checks"]["no_funny_center"] = rep.no_funny_center;
    j["vertex"] = rep.vertex ? json(rep.vertex->str()) : json();
    json sing = json::array();
    for (const auto& p : rep.singular_points) sing.push_back(p.str());
    j["singular_points"] = std::move(sing);
    j["singular_multiplicity"] = rep.singular_multiplicity;
    j["smooth_points"] = rep.smooth_points;
    j["nonflexy_smooth_points"] = rep.nonflexy_smooth_points;
    j["funny_center"] = rep.funny_center ? json(rep.funny_center->str()) : json();
    j["status"] = rep.pass() ? "pass" : "fail";
    return j;
}

json direction_set_to_json(const DirectionSet& delta) {
    json j;
    j["q"] = delta.q;
    j["ambient_dim"] = delta.ncoords;
    j["size"] = delta.members.size();
    json members = json::array();
    for (std::size_t i = 0; i < delta.members.size(); ++i) {
        json entry;
        entry["direction"] = delta.members[i].str();
        entry["lines"] = delta.line_counts.empty() ? 0 : delta.line_counts[i];
        members.push_back(std::move(entry));
    }
    j["members"] = std::move(members);
    return j;
}

json subvariety_report_to_json(const KakeyaSubvarietyReport& rep) {
    json j;
    j["q"] = rep.q;
    j["n"] = rep.n;
    j["delta_size"] = rep.delta_size;
    j["threshold"] = rep.threshold_power;
    j["surrogate_holds"] = rep.surrogate_holds;
    j["finite_sample"] = rep.finite_sample;
    j["note"] = rep.note;
    return j;
}

json cover_report_to_json(const CoverReport& rep) {
    json j;
    j["cover"] = rep.name;
    j["mode"] = rep.mode;
    j["status"] = rep.pass ? "pass" : "fail";
    json gens = json::array();
    for (std::size_t i = 0; i < rep.generator_identities.size(); ++i) {
        json g;
        g["index"] = i;
        g["holds"] = static_cast<bool>(rep.generator_identities[i]);
        g["residual"] = rep.residuals[i];
        gens.push_back(std::move(g));
    }
    j["generator_identities"] = std::move(gens);
    j["direction_match"] = rep.direction_match;
    if (rep.mode == "exhaustive") {
        j["q"] = rep.q;
        j["directions_checked"] = rep.directions_checked;
    }
    j["note"] = rep.fail_note.empty() ? json() : json(rep.fail_note);
    return j;
}

json certificate_to_json(const KakeyaCertificate& cert) {
    json cases = json::array();
    for (const auto& c : cert.cases) {
        json jc;
        jc["guard"]["vanish"] = strings(c.guard_vanish);
        jc["guard"]["nonvanish"] = strings(c.guard_nonvanish);
        jc["base"] = expr_strings(c.base);
        jc["dir"] = expr_strings(c.dir);
        jc["denominators"] = strings(c.denominators);
        cases.push_back(std::move(jc));
    }
    json j;
    j["cases"] = std::move(cases);
    return j;
}

KakeyaCertificate certificate_from_json(const json& j, unsigned ambient_dim) {
    KakeyaCertificate cert;
    cert.dir_vars = dir_vars_for(ambient_dim);
    for (const auto& jc : j.at("cases")) {
        CaseRule rule;
        if (jc.contains("guard")) {
            const auto& g = jc.at("guard");
            if (g.contains("vanish")) rule.guard_vanish = parse_list(g.at("vanish"), cert.dir_vars);
            if (g.contains("nonvanish"))
                rule.guard_nonvanish = parse_list(g.at("nonvanish"), cert.dir_vars);
        }
        rule.base = parse_expr_list(jc.at("base"), cert.dir_vars);
        rule.dir = parse_expr_list(jc.at("dir"), cert.dir_vars);
        if (jc.contains("denominators"))
            rule.denominators = parse_list(jc.at("denominators"), cert.dir_vars);
        cert.cases.push_back(std::move(rule));
    }
    return cert;
}

json set_to_json(const ConstructibleSet& E, const KakeyaCertificate* cert) {
    json j;
    j["name"] = E.name;
    j["ambient_dim"] = E.ambient_dim();
    j["vars"] = varset_to_json(E.vars());
    j["open"] = E.open_part().str();
    json pts = json::array();
    for (const auto& p : E.closed_points()) {
        json pj = json::array();
        for (const auto& c : p) pj.push_back(c.str());
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    json pieces = json::array();
    for (const auto& piece : E.closed_pieces()) pieces.push_back(strings(piece));
    j["pieces"] = std::move(pieces);
    j["type1"] = E.type1();
    if (cert) j["certificate"] = certificate_to_json(*cert);
    return j;
}

std::pair<ConstructibleSet, std::optional<KakeyaCertificate>> set_from_json(const json& j) {
    VarSet vars = varset_from_json(j.at("vars"));
    MultiPoly open = parse_poly(j.at("open").get<std::string>(), vars, kQ);
    std::vector<std::vector<Scalar>> points;
    for (const auto& pj : j.value("points", json::array())) {
        std::vector<Scalar> p;
        for (const auto& c : pj) p.push_back(Scalar::from_string(kQ, c.get<std::string>()));
        points.push_back(std::move(p));
    }
    std::vector<std::vector<MultiPoly>> pieces;
    for (const auto& piece : j.value("pieces", json::array()))
        pieces.push_back(parse_list(piece, vars));
    ConstructibleSet E(std::move(open), std::move(points), std::move(pieces),
                       j.value("type1", false));
    E.name = j.value("name", std::string{});

    std::optional<KakeyaCertificate> cert;
    if (j.contains("certificate"))
        cert = certificate_from_json(j.at("certificate"),
                                     static_cast<unsigned>(E.ambient_dim()));
    return {std::move(E), std::move(cert)};
}

json cover_spec_to_json(const CoverSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["ambient_vars"] = varset_to_json(spec.ambient_vars);
    j["target_vars"] = varset_to_json(spec.target_vars);
    j["param_vars"] = varset_to_json(spec.param_vars);
    j["generators"] = strings(spec.generators);
    j["projection"] = strings(spec.projection);
    j["direction_coords"] = strings(spec.direction_coords);
    j["guard"]["vanish"] = strings(spec.guard_vanish);
    j["guard"]["nonvanish"] = strings(spec.guard_nonvanish);
    j["witness"]["base"] = expr_strings(spec.witness_base);
    j["witness"]["dir"] = expr_strings(spec.witness_dir);
    j["denominators"] = strings(spec.denominators);
    return j;
}

CoverSpec cover_spec_from_json(const json& j) {
    CoverSpec spec;
    spec.name = j.value("name", std::string{});
    spec.ambient_vars = varset_from_json(j.at("ambient_vars"));
    spec.target_vars = varset_from_json(j.at("target_vars"));
    spec.param_vars = varset_from_json(j.at("param_vars"));
    spec.generators = parse_list(j.at("generators"), spec.ambient_vars);
    spec.projection = parse_list(j.at("projection"), spec.ambient_vars);
    spec.direction_coords = parse_list(j.at("direction_coords"), spec.param_vars);
    if (j.contains("guard")) {
        spec.guard_vanish = parse_list(j.at("guard").value("vanish", json::array()),
                                       spec.param_vars);
        spec.guard_nonvanish = parse_list(j.at("guard").value("nonvanish", json::array()),
                                          spec.param_vars);
    }
    spec.witness_base = parse_expr_list(j.at("witness").at("base"), spec.param_vars);
    spec.witness_dir = parse_expr_list(j.at("witness").at("dir"), spec.param_vars);
    spec.denominators = parse_list(j.value("denominators", json::array()), spec.param_vars);
    return spec;
}

}  // namespace kakeya
