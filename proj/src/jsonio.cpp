#include "lojex/jsonio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lojex/errors.hpp"

namespace lojex {

namespace {

void need(bool cond, const char* what) {
    if (!cond) throw input_error(std::string("malformed JSON: ") + what);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* direction_name(Direction d) { return d == Direction::UPPER ? "upper" : "lower"; }

Direction direction_from(const std::string& s) {
    if (s == "upper") return Direction::UPPER;
    if (s == "lower") return Direction::LOWER;
    throw input_error("malformed JSON: unknown direction " + s);
}

EstimateKind kind_from(const std::string& s) {
    if (s == "local") return EstimateKind::LOCAL;
    if (s == "infinity") return EstimateKind::AT_INFINITY;
    if (s == "separation-local") return EstimateKind::SEPARATION_LOCAL;
    if (s == "separation-global") return EstimateKind::SEPARATION_GLOBAL;
    throw input_error("malformed JSON: unknown estimate kind " + s);
}

}  // namespace

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const Monomial& t : p.terms()) terms.push_back(json::array({t.coef, t.exps}));
    return json{{"vars", p.num_vars()}, {"terms", std::move(terms)}};
}

Polynomial poly_from_json(const json& j) {
    need(j.is_object() && j.contains("vars") && j.contains("terms"),
         "polynomial needs {vars, terms}");
    int nv = j.at("vars").get<int>();
    std::vector<Monomial> ms;
    for (const json& t : j.at("terms")) {
        need(t.is_array() && t.size() == 2, "polynomial term must be [coef, [exps]]");
        Monomial m;
        m.coef = t.at(0).get<double>();
        m.exps = t.at(1).get<std::vector<int>>();
        ms.push_back(std::move(m));
    }
    return Polynomial(nv, std::move(ms));
}

json to_json(const PolyMap& F) {
    json comps = json::array();
    for (const Polynomial& p : F.components) comps.push_back(to_json(p));
    return json{{"vars", F.num_vars}, {"components", std::move(comps)}};
}

PolyMap map_from_json(const json& j) {
    need(j.is_object() && j.contains("vars") && j.contains("components"),
         "map needs {vars, components}");
    int nv = j.at("vars").get<int>();
    std::vector<Polynomial> comps;
    for (const json& c : j.at("components")) comps.push_back(poly_from_json(c));
    return PolyMap(nv, std::move(comps));
}

json to_json(const SemialgebraicSet& S) {
    json pieces = json::array();
    for (const BasicSet& p : S.pieces) {
        json gs = json::array(), hs = json::array();
        for (const Polynomial& g : p.ineqs) gs.push_back(to_json(g));
        for (const Polynomial& h : p.eqs) hs.push_back(to_json(h));
        pieces.push_back(json{{"ineqs", std::move(gs)}, {"eqs", std::move(hs)}});
    }
    return json{{"vars", S.num_vars}, {"pieces", std::move(pieces)}};
}

SemialgebraicSet set_from_json(const json& j) {
    need(j.is_object() && j.contains("vars") && j.contains("pieces"),
         "set needs {vars, pieces}");
    int nv = j.at("vars").get<int>();
    std::vector<BasicSet> pieces;
    for (const json& pj : j.at("pieces")) {
        std::vector<Polynomial> gs, hs;
        if (pj.contains("ineqs"))
            for (const json& g : pj.at("ineqs")) gs.push_back(poly_from_json(g));
        if (pj.contains("eqs"))
            for (const json& h : pj.at("eqs")) hs.push_back(poly_from_json(h));
        pieces.emplace_back(nv, std::move(gs), std::move(hs));
    }
    return SemialgebraicSet(nv, std::move(pieces));
}

json to_json(const BoundReport& r) {
    return json{{"formula_id", formula_name(r.formula_id)},
                {"inputs", r.inputs},
                {"value", r.value_string()},
                {"direction", direction_name(r.direction)},
                {"denominator_degree", r.denominator_degree},
                {"reference_only", r.reference_only}};
}

BoundReport bound_report_from_json(const json& j) {
    BoundReport r;
    auto id = formula_from_name(j.at("formula_id").get<std::string>());
    need(id.has_value(), "unknown formula id");
    r.formula_id = *id;
    if (j.contains("inputs"))
        r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    r.value = mpq_class(j.at("value").get<std::string>());
    r.value.canonicalize();
    r.direction = direction_from(j.at("direction").get<std::string>());
    r.denominator_degree = j.value("denominator_degree", 0L);
    r.reference_only = j.value("reference_only", false);
    return r;
}

json to_json(const ShellRecord& s) {
    return json{{"scale", s.scale}, {"min_value", s.min_value}, {"samples", s.sample_count}};
}

json to_json(const ExponentEstimate& e) {
    json shells = json::array();
    for (const ShellRecord& s : e.shells) shells.push_back(to_json(s));
    return json{{"value", e.value},
                {"direction", estimate_kind_name(e.direction)},
                {"shells", std::move(shells)},
                {"fit_stderr", e.fit_stderr},
                {"admissible_constant", e.admissible_constant},
                {"warnings", e.warnings},
                {"isolated_zero", e.isolated_zero}};
}

ExponentEstimate estimate_from_json(const json& j) {
    ExponentEstimate e;
    e.value = j.at("value").get<double>();
    e.direction = kind_from(j.at("direction").get<std::string>());
    for (const json& s : j.at("shells"))
        e.shells.push_back({s.at("scale").get<double>(), s.at("min_value").get<double>(),
                            s.at("samples").get<int>()});
    e.fit_stderr = j.value("fit_stderr", 0.0);
    e.admissible_constant = j.value("admissible_constant", 0.0);
    if (j.contains("warnings")) e.warnings = j.at("warnings").get<std::vector<std::string>>();
    e.isolated_zero = j.value("isolated_zero", false);
    return e;
}

json to_json(const VerifyReport& v) {
    return json{{"verdict", v.verdict == Verdict::PASS ? "PASS" : "FAIL"},
                {"estimate", v.estimate},
                {"bound", v.bound},
                {"slack", v.slack},
                {"direction", direction_name(v.direction)}};
}

json to_json(const AlgebraicLift& L) {
    json eqs = json::array();
    for (const Polynomial& e : L.equations) eqs.push_back(to_json(e));
    return json{{"ambient_vars", L.ambient_vars},
                {"slack_offset", L.slack_range.offset},
                {"slack_count", L.slack_range.count},
                {"equations", std::move(eqs)},
                {"degree_cap", L.degree_cap()}};
}

json to_json(const TransferReport& t) {
    return json{{"trials", t.trials},
                {"min_margin", t.min_margin},
                {"margins", t.margins},
                {"dist_x", t.dist_x},
                {"dist_lifted", t.dist_lifted}};
}

json to_json(const TrialRecord& t) {
    json j{{"alpha_seed", t.alpha_seed},
           {"exponent", t.exponent},
           {"exponent_stderr", t.exponent_stderr},
           {"zero_preserved", t.zero_preserved},
           {"sandwich_c1", t.sandwich_c1},
           {"sandwich_c2", t.sandwich_c2},
           {"inequality_ok", t.inequality_ok},
           {"equality_ok", t.equality_ok}};
    if (t.degree_preserved) j["degree_preserved"] = *t.degree_preserved;
    return j;
}

json to_json(const ReductionReport& r) {
    json trials = json::array();
    for (const TrialRecord& t : r.trials) trials.push_back(to_json(t));
    json loc{{"kind", r.locality.kind == Locality::Kind::LOCAL ? "local" : "infinity"},
             {"radius", r.locality.radius}};
    if (r.locality.kind == Locality::Kind::LOCAL) loc["center"] = r.locality.center;
    return json{{"map", r.map_desc},
                {"k", r.k},
                {"locality", std::move(loc)},
                {"baseline", r.baseline},
                {"baseline_stderr", r.baseline_stderr},
                {"trials", std::move(trials)},
                {"equality_tol", r.equality_tol},
                {"all_inequalities_hold", r.all_inequalities_hold},
                {"equality_passes", r.equality_passes}};
}

json to_json(const GlobalSeparationReport& g) {
    return json{{"constant", g.constant},
                {"log10_constant", g.log10_constant},
                {"worst_point", g.worst_point},
                {"worst_lhs", g.worst_lhs},
                {"worst_rhs_base", g.worst_rhs_base},
                {"samples_used", g.samples_used},
                {"intersection_empty", g.intersection_empty},
                {"warnings", g.warnings}};
}

std::string shells_to_csv(const ExponentEstimate& e) {
    std::string out = "scale,min_value,samples\r\n";
    for (const ShellRecord& s : e.shells) {
        out += fmt_double(s.scale);
        out += ',';
        out += fmt_double(s.min_value);
        out += ',';
        out += std::to_string(s.sample_count);
        out += "\r\n";
    }
    return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

}  // namespace lojex
