#include "lctforge/json_io.hpp"

#include <fstream>

#include "lctforge/errors.hpp"

namespace lctforge::io {
namespace {

void require_schema(const json& j) {
    if (!j.is_object()) throw InputError("document: expected a JSON object");
    if (!j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != kSchemaVersion)
        throw InputError("document: missing or unsupported \"schema\" (expected 1)");
}

const json& field(const json& j, const char* name) {
    if (!j.contains(name))
        throw InputError(std::string("document: missing field \"") + name + "\"");
    return j[name];
}

} // namespace

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError("expected a rational as string \"p/q\" or integer");
}

json rational_to_json(const Rational& q) { return q.str(); }

MonomialIdeal ideal_from_json(const json& j) {
    require_schema(j);
    int dim = field(j, "dim").get<int>();
    std::vector<Exponents> gens;
    for (const auto& g : field(j, "generators")) {
        Exponents e;
        for (const auto& x : g) e.push_back(x.get<long>());
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(dim, gens);
}

json ideal_to_json(const MonomialIdeal& ideal) {
    json j;
    j["schema"] = kSchemaVersion;
    j["dim"] = ideal.dim();
    j["generators"] = json::array();
    for (const auto& g : ideal.generators()) j["generators"].push_back(g);
    j["unit"] = ideal.is_unit();
    return j;
}

SurfaceData surface_from_json(const json& j) {
    require_schema(j);
    SurfaceData data;
    std::vector<std::string> names;
    for (const auto& n : field(j, "basis")) names.push_back(n.get<std::string>());
    data.basis = ClassBasis(names, field(j, "dim").get<int>());
    data.form = IntersectionForm(data.basis.manifold_dim, data.basis.size());
    for (const auto& [key, value] : field(j, "form").items()) {
        std::vector<int> idx;
        std::size_t start = 0;
        while (start <= key.size()) {
            std::size_t comma = key.find(',', start);
            std::string part = key.substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
            int i = data.basis.index_of(part);
            if (i < 0) throw InputError("form key uses unknown class '" + part + "'");
            idx.push_back(i);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        data.form.set(idx, rational_from_json(value));
    }
    for (const auto& entry : field(j, "candidates")) {
        if (entry.is_object() && entry.contains("class")) {
            data.candidate_names.push_back(entry.contains("name")
                                               ? entry["name"].get<std::string>()
                                               : "");
            data.candidates.push_back(class_from_json(entry["class"], data.basis));
        } else {
            data.candidate_names.push_back("");
            data.candidates.push_back(class_from_json(entry, data.basis));
        }
    }
    for (std::size_t i = 0; i < data.candidate_names.size(); ++i)
        if (data.candidate_names[i].empty())
            data.candidate_names[i] = "C" + std::to_string(i + 1);
    data.validate();
    return data;
}

DivisorClass class_from_json(const json& j, const ClassBasis& basis) {
    if (!j.is_object()) throw InputError("class literal: expected an object");
    DivisorClass c{QVector(basis.size(), Rational(0))};
    for (const auto& [key, value] : j.items()) {
        if (key == "schema") continue;
        int i = basis.index_of(key);
        if (i < 0) throw InputError("class literal uses unknown class '" + key + "'");
        c.coeffs[i] = rational_from_json(value);
    }
    return c;
}

json class_to_json(const DivisorClass& c, const ClassBasis& basis) {
    json j = json::object();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!c.coeffs[i].is_zero()) j[basis.names[i]] = c.coeffs[i].str();
    return j;
}

BlowupSequence sequence_from_json(const json& j) {
    require_schema(j);
    std::vector<CenterSpec> centers;
    for (const auto& entry : field(j, "centers")) {
        std::string cond = field(entry, "condition").get<std::string>();
        if (cond.size() != 1 || cond[0] < 'a' || cond[0] > 'e')
            throw InputError("center condition must be one of a..e");
        std::optional<ESubcase> sub;
        if (cond == "e") {
            std::string s = entry.contains("subcase")
                                ? entry["subcase"].get<std::string>()
                                : "latest";
            if (s == "latest") sub = ESubcase::InLatestExceptional;
            else if (s == "older") sub = ESubcase::InOlderExceptional;
            else throw InputError("center subcase must be 'latest' or 'older'");
        }
        auto spec = CenterSpec::make(static_cast<CenterCondition>(cond[0] - 'a'), sub);
        if (entry.contains("kind")) {
            std::string kind = entry["kind"].get<std::string>();
            bool is_point = kind == "point";
            if (!is_point && kind != "curve")
                throw InputError("center kind must be 'point' or 'curve'");
            if ((spec.kind == CenterKind::Point) != is_point)
                throw InputError("center kind inconsistent with condition " + cond);
        }
        centers.push_back(spec);
    }
    return BlowupSequence::validated(centers);
}

json prune_to_json(const PruneResult& result) {
    json j;
    j["schema"] = kSchemaVersion;
    // Pruned sequences only ever contain e(latest) curve centers.
    json centers = json::array();
    for (std::size_t i = 0; i < result.sequence.centers.size(); ++i)
        centers.push_back(
            {{"kind", "curve"}, {"condition", "e"}, {"subcase", "latest"}});
    j["centers"] = centers;
    json log = json::array();
    for (const auto& e : result.log) {
        const char* action = e.action == RewriteAction::Deleted    ? "deleted"
                             : e.action == RewriteAction::Rewritten ? "rewritten"
                                                                    : "kept";
        log.push_back({{"index", e.input_index}, {"action", action}, {"reason", e.reason}});
    }
    j["log"] = log;
    return j;
}

MorseInput morse_input_from_json(const json& j) {
    require_schema(j);
    MorseInput in;
    in.n = field(j, "n").get<int>();
    in.s = field(j, "s").get<int>();
    for (const auto& v : field(j, "mixed_LF")) in.mixed_LF.push_back(rational_from_json(v));
    if (j.contains("components")) {
        for (const auto& c : j["components"]) {
            MorseComponent comp;
            if (c.contains("label")) comp.label = c["label"].get<std::string>();
            comp.nu = rational_from_json(field(c, "nu"));
            comp.nu_prime = rational_from_json(field(c, "nu_prime"));
            for (const auto& v : field(c, "mixed_LuY"))
                comp.mixed_LuY.push_back(rational_from_json(v));
            in.components.push_back(std::move(comp));
        }
    }
    if (j.contains("fs_exceeds_positive_part"))
        in.fs_exceeds_positive_part = j["fs_exceeds_positive_part"].get<bool>();
    in.validate();
    return in;
}

json lct_report_to_json(const MonomialIdeal& ideal, const LctReport& report) {
    json j;
    j["schema"] = kSchemaVersion;
    j["ideal"] = ideal_to_json(ideal);
    if (report.infinite) {
        j["lct"] = "inf";
        return j;
    }
    j["diagonal_parameter"] = report.m.str();
    j["lct"] = report.c.str();
    json w = json::array();
    for (const auto& q : report.witness) w.push_back(q.str());
    j["witness"] = w;
    return j;
}

json paths_to_json(const std::vector<PathEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json j;
        j["path"] = e.path;
        j["h"] = e.nf.h;
        j["k"] = e.nf.k;
        j["ideal"] = e.nf.str();
        j["lct"] = e.lct.str();
        if (auto alt = additive_split_lct(e.nf)) j["lct_additive_split"] = alt->str();
        arr.push_back(std::move(j));
    }
    json out;
    out["schema"] = kSchemaVersion;
    out["paths"] = arr;
    return out;
}

json verdict_to_json(const LelongVerdict& verdict) {
    json j;
    j["schema"] = kSchemaVersion;
    j["verdict"] = verdict.kind == VerdictKind::Vanishes ? "vanishes" : "trivial_by_remark";
    j["prune"] = prune_to_json(verdict.prune);
    if (verdict.kind == VerdictKind::Vanishes) {
        j["min_lct"] = verdict.min_lct.str();
        j["witness_path"] = verdict.witness_path;
        j["witness_ideal"] = verdict.witness_nf.str();
    }
    return j;
}

json zariski_to_json(const ZariskiDecomposition& z, const SurfaceData& data) {
    json j;
    j["schema"] = kSchemaVersion;
    j["P"] = class_to_json(z.P, data.basis);
    json n = json::array();
    for (const auto& [idx, a] : z.N)
        n.push_back({{"curve", data.candidate_names[idx]}, {"coefficient", a.str()}});
    j["N"] = n;
    json certs;
    json nef = json::array();
    for (std::size_t i = 0; i < z.certificates.nef_values.size(); ++i)
        nef.push_back({{"curve", data.candidate_names[i]},
                       {"P.C", z.certificates.nef_values[i].str()}});
    certs["nef_check"] = nef;
    json orth = json::array();
    for (std::size_t i = 0; i < z.certificates.orth_values.size(); ++i)
        orth.push_back({{"curve", data.candidate_names[z.N[i].first]},
                        {"P.C", z.certificates.orth_values[i].str()}});
    certs["orthogonality"] = orth;
    certs["gram_negative_definite"] = z.certificates.gram_negative_definite;
    j["certificates"] = certs;
    return j;
}

json bound_report_to_json(const BoundReport& rep) {
    json j;
    j["schema"] = kSchemaVersion;
    j["formula"] = rep.formula_id;
    j["coefficient"] = rep.coefficient.str();
    json parts = json::array();
    for (const auto& [label, value] : rep.contributions)
        parts.push_back({{"part", label}, {"value", value.str()}});
    j["contributions"] = parts;
    if (!rep.user_assertions.empty()) j["user_assertions"] = rep.user_assertions;
    return j;
}

json oracle_report_to_json(const MonomialIdeal& ideal, const OracleReport& rep) {
    json j;
    j["schema"] = kSchemaVersion;
    j["ideal"] = ideal_to_json(ideal);
    json pts = json::array();
    for (const auto& p : rep.points)
        pts.push_back({{"r", p.r}, {"volume", p.volume}, {"local_slope", p.local_slope}});
    j["points"] = pts;
    j["fitted_slope"] = rep.fitted_slope;
    return j;
}

} // namespace lctforge::io
