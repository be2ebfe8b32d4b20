#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lojex/bounds.hpp"
#include "lojex/errors.hpp"
#include "lojex/estimator.hpp"
#include "lojex/jsonio.hpp"
#include "lojex/lifting.hpp"
#include "lojex/manifest.hpp"
#include "lojex/projection.hpp"

using namespace lojex;

namespace {

struct GlobalOpts {
    uint64_t seed = 0;
    std::string out;
    std::string csv;
    int threads = 1;
    bool strict = false;
    bool as_json = false;
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int exit_code_for_fail(const GlobalOpts& g) { return g.strict ? 1 : 0; }

json load_json(const std::string& path, RunManifest& man) {
    std::string bytes = read_file(path);
    man.input_digests[path] = fnv1a64_hex(bytes);
    return json::parse(bytes);
}

// accept either a bare payload or the CLI's {"manifest": ..., "result": ...} wrapper
json unwrap(json j) {
    if (j.is_object() && j.contains("result") && j.contains("manifest")) return j.at("result");
    return j;
}

SemialgebraicSet load_set(const std::string& path, RunManifest& man) {
    SemialgebraicSet S = set_from_json(unwrap(load_json(path, man)));
    PresentationComplexity c = complexity(S);
    if (c.r > brocker_cap(S.num_vars))
        std::cerr << "warning: " << path << " uses r = " << c.r
                  << " inequalities in one piece, above the N(N+1)/2 = "
                  << brocker_cap(S.num_vars)
                  << " cap; the presentation is provably non-minimal\n";
    return S;
}

Vec parse_point(const std::string& s) {
    Vec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        v.push_back(std::stod(item));
    }
    if (v.empty()) throw input_error("could not parse a point from: " + s);
    return v;
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        v.push_back(std::stol(item));
    }
    return v;
}

void emit(const RunManifest& man, const json& result, const GlobalOpts& g,
          const std::string& table) {
    json payload = man.wrap(result);
    if (g.as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << table;
    if (!g.out.empty()) write_file(g.out, payload.dump(2) + "\n");
    std::fprintf(stderr, "[%s] %.2fs\n", man.command.c_str(), man.wall_seconds);
}

json sampling_json(const SamplingConfig& cfg) {
    return json{{"samples_per_shell", cfg.samples_per_shell},
                {"shell_base", cfg.shell_base},
                {"shell_count", cfg.shell_count},
                {"min_scale", cfg.min_scale},
                {"fit_tol", cfg.fit_tol},
                {"refine_starts", cfg.refine_starts},
                {"refine_iters", cfg.refine_iters},
                {"starts", cfg.distance.starts},
                {"restore_tol", cfg.distance.restore_tol},
                {"penalty_max", cfg.distance.penalty_max}};
}

std::string estimate_table(const ExponentEstimate& est) {
    std::ostringstream os;
    os << "direction           " << estimate_kind_name(est.direction) << "\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "exponent            %.6f\n", est.value);
    os << buf;
    std::snprintf(buf, sizeof buf, "fit stderr          %.6f\n", est.fit_stderr);
    os << buf;
    std::snprintf(buf, sizeof buf, "admissible constant %.6g\n", est.admissible_constant);
    os << buf;
    os << "shells (scale, min, samples):\n";
    for (const ShellRecord& s : est.shells) {
        std::snprintf(buf, sizeof buf, "  %12.6g %12.6g %6d\n", s.scale, s.min_value,
                      s.sample_count);
        os << buf;
    }
    for (const std::string& w : est.warnings) os << "warning: " << w << "\n";
    if (est.isolated_zero) os << "note: isolated-point convention applied (exponent 0)\n";
    return os.str();
}

// ---- subcommand: bound ----------------------------------------------------

struct BoundArgs {
    std::string formula;
    long N = 0, r = 0, d = 0, D = 0, k = 0;
    std::string degrees;
    long mult_sum = 0;
    bool has_mult = false;
    long variety_degree = 0;
    bool has_variety = false;
    bool isolated = false;
};

BoundReport run_bound(const BoundArgs& a) {
    auto id = formula_from_name(a.formula);
    if (!id) throw input_error("unknown formula id: " + a.formula);
    switch (*id) {
        case FormulaId::LOCAL_SEP: {
            BoundReport rep;
            rep.formula_id = FormulaId::LOCAL_SEP;
            rep.value = mpq_class(local_separation_bound(a.N, a.r, a.d));
            rep.direction = Direction::UPPER;
            rep.inputs = {{"N", std::to_string(a.N)},
                          {"r", std::to_string(a.r)},
                          {"d", std::to_string(a.d)}};
            return rep;
        }
        case FormulaId::LOCAL_SEP_ISOLATED: {
            BoundReport rep;
            rep.formula_id = FormulaId::LOCAL_SEP_ISOLATED;
            rep.value = mpq_class(isolated_separation_bound(a.N, a.r, a.d));
            rep.direction = Direction::UPPER;
            rep.inputs = {{"N", std::to_string(a.N)},
                          {"r", std::to_string(a.r)},
                          {"d", std::to_string(a.d)}};
            return rep;
        }
        case FormulaId::LOCAL_MAP:
        case FormulaId::LOCAL_MAP_ISOLATED:
            // --r and --d carry the already-combined r_X + r_graph and max degree
            return local_map_bound(a.N, a.r, 0, a.d, a.d,
                                   a.isolated || *id == FormulaId::LOCAL_MAP_ISOLATED);
        case FormulaId::REGULAR_LOCAL_REAL:
            return regular_local_bound(a.N, a.d, Field::REAL);
        case FormulaId::REGULAR_LOCAL_COMPLEX:
            return regular_local_bound(a.N, a.d, Field::COMPLEX);
        case FormulaId::GLOBAL_SEP:
            return global_separation_bound(a.N, a.r, a.d);
        case FormulaId::INFTY_SEMIALG_MAP:
            return infinity_semialgebraic_map_bound(a.N, a.r, a.d);
        case FormulaId::INFTY_POLY_MAP:
            return infinity_polynomial_map_bound(a.N, a.r, a.d, a.D);
        case FormulaId::INFTY_REGULAR:
            return infinity_regular_bound(a.N, a.d);
        case FormulaId::KS_LOCAL:
            return ks_bounds(a.N, a.d, KsKind::LOCAL);
        case FormulaId::KS_GLOBAL:
            return ks_bounds(a.N, a.d, KsKind::GLOBAL);
        case FormulaId::KS_INFTY:
            return ks_bounds(a.N, a.d, KsKind::INFTY_COMPACT);
        case FormulaId::B_PRODUCT: {
            BoundReport rep;
            rep.formula_id = FormulaId::B_PRODUCT;
            rep.value = mpq_class(b_product(parse_longs(a.degrees), a.k));
            rep.direction = Direction::LOWER;
            rep.inputs = {{"degrees", a.degrees}, {"k", std::to_string(a.k)}};
            return rep;
        }
        case FormulaId::REF_KOLLAR:
        case FormulaId::REF_CKT:
        case FormulaId::REF_JELONEK:
        case FormulaId::REF_CHADZYNSKI: {
            RefInputs in;
            in.degrees = parse_longs(a.degrees);
            in.N = a.N;
            in.k = a.k;
            if (a.has_variety) in.variety_degree = a.variety_degree;
            if (a.has_mult) in.mult_sum = a.mult_sum;
            RefKind kind = *id == FormulaId::REF_KOLLAR    ? RefKind::KOLLAR
                           : *id == FormulaId::REF_CKT     ? RefKind::CKT
                           : *id == FormulaId::REF_JELONEK ? RefKind::JELONEK
                                                           : RefKind::CHADZYNSKI;
            return reference_complex_bounds(kind, in);
        }
    }
    throw input_error("unhandled formula id");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"effective Lojasiewicz exponent bounds and numerical estimates"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for all randomized work");
    app.add_option("--out", g.out, "write the JSON payload to this file");
    app.add_option("--csv", g.csv, "write shell data as CSV to this file");
    app.add_option("--threads", g.threads, "worker cap for parallel shells/trials");
    app.add_flag("--strict", g.strict, "exit 1 on FAIL verdicts");
    app.add_flag("--json", g.as_json, "print JSON instead of the table");

    // bound
    BoundArgs ba;
    CLI::App* bound_cmd = app.add_subcommand("bound", "evaluate an exact exponent bound formula");
    bound_cmd->add_option("--formula", ba.formula, "formula id")->required();
    bound_cmd->add_option("--N", ba.N, "ambient dimension");
    bound_cmd->add_option("--r", ba.r, "inequality count");
    bound_cmd->add_option("--d", ba.d, "degree");
    bound_cmd->add_option("--D", ba.D, "variety degree / denominator degree");
    bound_cmd->add_option("--k", ba.k, "target or variety dimension");
    bound_cmd->add_option("--degrees", ba.degrees, "nonincreasing degree list d1,d2,...");
    bound_cmd->add_option("--mult-sum", ba.mult_sum, "multiplicity sum (reference bounds)")
        ->each([&ba](const std::string&) { ba.has_mult = true; });
    bound_cmd->add_option("--variety-degree", ba.variety_degree, "variety degree D (Jelonek)")
        ->each([&ba](const std::string&) { ba.has_variety = true; });
    bound_cmd->add_flag("--isolated", ba.isolated, "isolated-zero variant");

    auto add_sampling = [](CLI::App* cmd, SamplingConfig& cfg) {
        cmd->add_option("--samples", cfg.samples_per_shell, "samples per shell");
        cmd->add_option("--shells", cfg.shell_count, "shell count");
        cmd->add_option("--base", cfg.shell_base, "shell base");
        cmd->add_option("--fit-tol", cfg.fit_tol, "fit tolerance");
        cmd->add_option("--refine-starts", cfg.refine_starts, "refinement starts per shell");
        cmd->add_option("--refine-iters", cfg.refine_iters, "refinement iterations");
        cmd->add_option("--starts", cfg.distance.starts, "distance oracle multistarts");
        cmd->add_option("--restore-tol", cfg.distance.restore_tol, "feasibility tolerance");
        cmd->add_option("--penalty-max", cfg.distance.penalty_max, "top of the penalty schedule");
    };

    // estimate
    std::string est_map, est_set, est_zero, est_at;
    bool est_infinity = false;
    bool est_min_scale_set = false;
    SamplingConfig est_cfg;
    CLI::App* est_cmd = app.add_subcommand("estimate", "estimate a Lojasiewicz exponent");
    est_cmd->add_option("--map", est_map, "polynomial map JSON")->required();
    est_cmd->add_option("--set", est_set, "domain set JSON (defaults to R^N)");
    est_cmd->add_option("--zero-set", est_zero, "zero set JSON (defaults to X cap {F=0})");
    est_cmd->add_option("--at", est_at, "base point for the local exponent, e.g. 0,0");
    est_cmd->add_flag("--infinity", est_infinity, "estimate the exponent at infinity");
    est_cmd->add_option("--min-scale", est_cfg.min_scale, "innermost scale / base radius")
        ->each([&est_min_scale_set](const std::string&) { est_min_scale_set = true; });
    add_sampling(est_cmd, est_cfg);

    // separate
    std::string sep_x, sep_y, sep_at;
    bool sep_global = false;
    long sep_denom = 2;
    double sep_p = 0.0;
    long sep_N = 0, sep_r = -1, sep_d = 0;
    SamplingConfig sep_cfg;
    CLI::App* sep_cmd = app.add_subcommand("separate", "estimate a separation exponent");
    sep_cmd->add_option("--X", sep_x, "first set JSON")->required();
    sep_cmd->add_option("--Y", sep_y, "second set JSON")->required();
    sep_cmd->add_option("--at", sep_at, "base point on X cap Y (local mode)");
    sep_cmd->add_flag("--global", sep_global, "global admissible-constant scan");
    sep_cmd->add_option("--denom-degree", sep_denom, "denominator degree d (global)");
    sep_cmd->add_option("--p", sep_p, "exponent p (global); omit to derive from --N/--r/--d");
    sep_cmd->add_option("--N", sep_N, "ambient dimension for the derived bound");
    sep_cmd->add_option("--r", sep_r, "inequality count for the derived bound");
    sep_cmd->add_option("--d", sep_d, "degree for the derived bound");
    sep_cmd->add_option("--min-scale", sep_cfg.min_scale, "innermost scale");
    add_sampling(sep_cmd, sep_cfg);

    // lift
    std::string lift_pair;
    CLI::App* lift_cmd = app.add_subcommand("lift", "slack-variable algebraization of a set pair");
    lift_cmd->add_option("--pair", lift_pair, "JSON file {\"X\": set, \"Y\": set}")->required();

    // reduce
    std::string red_map, red_set, red_loc = "local:0:0.5";
    int red_k = 1, red_trials = 10, red_dim_hint = -1;
    SamplingConfig red_cfg;
    CLI::App* red_cmd = app.add_subcommand("reduce", "generic linear reduction experiment");
    red_cmd->add_option("--map", red_map, "polynomial map JSON")->required();
    red_cmd->add_option("--set", red_set, "domain set JSON (defaults to R^N)");
    red_cmd->add_option("--k", red_k, "target dimension")->required();
    red_cmd->add_option("--trials", red_trials, "generic trials");
    red_cmd->add_option("--dim-hint", red_dim_hint, "user-supplied dim X (defaults to N)");
    red_cmd->add_option("--locality", red_loc, "local:<a1,a2,...>:<radius> or infinity:<R>");
    red_cmd->add_option("--min-scale", red_cfg.min_scale, "innermost scale / base radius");
    add_sampling(red_cmd, red_cfg);

    // verify
    std::string ver_est, ver_bound;
    double ver_tol = 0.1;
    CLI::App* ver_cmd = app.add_subcommand("verify", "check an estimate against a bound");
    ver_cmd->add_option("--estimate", ver_est, "estimate JSON")->required();
    ver_cmd->add_option("--bound", ver_bound, "bound JSON")->required();
    ver_cmd->add_option("--fit-tol", ver_tol, "verification tolerance");

    for (CLI::App* sub : app.get_subcommands({})) (void)sub;
    for (CLI::App* sub :
         {bound_cmd, est_cmd, sep_cmd, lift_cmd, red_cmd, ver_cmd})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    RunManifest man;
    man.seed = g.seed;

    try {
        if (*bound_cmd) {
            man.command = "bound";
            BoundReport rep = run_bound(ba);
            man.config = {{"formula", ba.formula}, {"N", ba.N},
                          {"r", ba.r},             {"d", ba.d},
                          {"D", ba.D},             {"k", ba.k},
                          {"degrees", ba.degrees}, {"isolated", ba.isolated}};
            man.wall_seconds = timer.seconds();
            std::ostringstream table;
            table << "formula   " << formula_name(rep.formula_id) << "\n"
                  << "value     " << rep.value_string() << "\n"
                  << "direction " << (rep.direction == Direction::UPPER ? "upper" : "lower")
                  << "\n";
            for (const auto& [key, val] : rep.inputs)
                table << "input     " << key << " = " << val << "\n";
            if (rep.denominator_degree)
                table << "denominator degree " << rep.denominator_degree << "\n";
            if (rep.reference_only)
                table << "note: reference-only (complex hypotheses not checked)\n";
            emit(man, to_json(rep), g, table.str());
            return 0;
        }

        if (*est_cmd) {
            man.command = "estimate";
            est_cfg.seed = g.seed;
            est_cfg.threads = g.threads;
            PolyMap F = map_from_json(unwrap(load_json(est_map, man)));
            SemialgebraicSet X = est_set.empty() ? SemialgebraicSet::full_space(F.num_vars)
                                                 : load_set(est_set, man);
            std::optional<SemialgebraicSet> Z;
            if (!est_zero.empty()) Z = load_set(est_zero, man);
            if (!est_infinity && est_at.empty())
                throw input_error("estimate needs either --at <point> or --infinity");
            ExponentEstimate est;
            if (est_infinity) {
                if (!est_min_scale_set) est_cfg.min_scale = 1.0;
                est = estimate_infinity_exponent(F, X, est_cfg);
            } else {
                est = estimate_local_map_exponent(F, X, parse_point(est_at), Z, est_cfg);
            }
            man.config = sampling_json(est_cfg);
            man.config["mode"] = est_infinity ? "infinity" : "local";
            if (!est_infinity) man.config["at"] = est_at;
            man.wall_seconds = timer.seconds();
            if (!g.csv.empty()) write_file(g.csv, shells_to_csv(est));
            emit(man, to_json(est), g, estimate_table(est));
            return 0;
        }

        if (*sep_cmd) {
            man.command = "separate";
            sep_cfg.seed = g.seed;
            sep_cfg.threads = g.threads;
            SemialgebraicSet X = load_set(sep_x, man);
            SemialgebraicSet Y = load_set(sep_y, man);
            if (sep_global) {
                double p = sep_p;
                long dd = sep_denom;
                if (!(p > 0.0)) {
                    if (sep_N <= 0 || sep_r < 0 || sep_d <= 0)
                        throw input_error(
                            "global separation needs --p or all of --N/--r/--d to derive it");
                    BoundReport b = global_separation_bound(sep_N, sep_r, sep_d);
                    p = b.value.get_d();
                    dd = b.denominator_degree;
                }
                auto rep = estimate_global_separation(X, Y, dd, p, sep_cfg);
                man.config = sampling_json(sep_cfg);
                man.config["mode"] = "global";
                man.config["p"] = p;
                man.config["denom_degree"] = dd;
                man.wall_seconds = timer.seconds();
                std::ostringstream table;
                char buf[160];
                std::snprintf(buf, sizeof buf, "admissible constant C  %.6g  (log10 %.3f)\n",
                              rep.constant, rep.log10_constant);
                table << buf;
                std::snprintf(buf, sizeof buf, "samples used           %d\n", rep.samples_used);
                table << buf;
                if (rep.intersection_empty)
                    table << "note: intersection looks empty; dist = 1 convention applied\n";
                for (const auto& w : rep.warnings) table << "warning: " << w << "\n";
                emit(man, to_json(rep), g, table.str());
                return 0;
            }
            if (sep_at.empty()) throw input_error("separate needs --at <point> or --global");
            ExponentEstimate est =
                estimate_separation_exponent(X, Y, parse_point(sep_at), sep_cfg);
            man.config = sampling_json(sep_cfg);
            man.config["mode"] = "local";
            man.config["at"] = sep_at;
            man.wall_seconds = timer.seconds();
            if (!g.csv.empty()) write_file(g.csv, shells_to_csv(est));
            emit(man, to_json(est), g, estimate_table(est));
            return 0;
        }

        if (*lift_cmd) {
            man.command = "lift";
            json pair = unwrap(load_json(lift_pair, man));
            SemialgebraicSet X = set_from_json(pair.at("X"));
            SemialgebraicSet Y = set_from_json(pair.at("Y"));
            json pairs = json::array();
            std::ostringstream table;
            for (size_t i = 0; i < X.pieces.size(); ++i)
                for (size_t j = 0; j < Y.pieces.size(); ++j) {
                    auto [A, B] = algebraize_pair(X.pieces[i], Y.pieces[j]);
                    int cap = std::max(A.degree_cap(), B.degree_cap());
                    pairs.push_back(json{{"piece_x", i},
                                         {"piece_y", j},
                                         {"A", to_json(A)},
                                         {"B", to_json(B)},
                                         {"degree_cap", cap}});
                    table << "pieces (" << i << ", " << j << "): ambient R^" << A.ambient_vars
                          << ", slacks A [" << A.slack_range.offset << ", "
                          << A.slack_range.offset + A.slack_range.count << "), B ["
                          << B.slack_range.offset << ", "
                          << B.slack_range.offset + B.slack_range.count << "), degree cap "
                          << cap << "\n";
                }
            PresentationComplexity cx = complexity(X);
            PresentationComplexity cy = complexity(Y);
            json result{{"pairs", std::move(pairs)},
                        {"complexity_X", json{{"r", cx.r}, {"kappa", cx.kappa}}},
                        {"complexity_Y", json{{"r", cy.r}, {"kappa", cy.kappa}}}};
            man.config = json::object();
            man.wall_seconds = timer.seconds();
            emit(man, result, g, table.str());
            return 0;
        }

        if (*red_cmd) {
            man.command = "reduce";
            red_cfg.seed = g.seed;
            red_cfg.threads = g.threads;
            PolyMap F = map_from_json(unwrap(load_json(red_map, man)));
            SemialgebraicSet X = red_set.empty() ? SemialgebraicSet::full_space(F.num_vars)
                                                 : load_set(red_set, man);
            int dim_hint = red_dim_hint >= 0 ? red_dim_hint : X.num_vars;
            Locality loc;
            if (red_loc.rfind("local:", 0) == 0) {
                std::string rest = red_loc.substr(6);
                auto colon = rest.rfind(':');
                if (colon == std::string::npos)
                    throw input_error("locality format: local:<a1,a2,...>:<radius>");
                loc.kind = Locality::Kind::LOCAL;
                loc.center = parse_point(rest.substr(0, colon));
                loc.radius = std::stod(rest.substr(colon + 1));
            } else if (red_loc.rfind("infinity:", 0) == 0) {
                loc.kind = Locality::Kind::GLOBAL;
                loc.radius = std::stod(red_loc.substr(9));
            } else {
                throw input_error("locality must be local:<point>:<radius> or infinity:<R>");
            }
            ReductionReport rep =
                reduction_experiment(F, X, dim_hint, red_k, red_trials, loc, red_cfg);
            man.config = sampling_json(red_cfg);
            man.config["k"] = red_k;
            man.config["trials"] = red_trials;
            man.config["locality"] = red_loc;
            man.config["dim_hint"] = dim_hint;
            man.wall_seconds = timer.seconds();
            std::ostringstream table;
            char buf[200];
            std::snprintf(buf, sizeof buf, "baseline exponent  %.6f (stderr %.6f)\n",
                          rep.baseline, rep.baseline_stderr);
            table << buf;
            table << "trials:\n";
            for (const TrialRecord& t : rep.trials) {
                std::snprintf(buf, sizeof buf,
                              "  seed %llu exponent %.6f zero %s ineq %s eq %s c1 %.3f c2 %.3f\n",
                              static_cast<unsigned long long>(t.alpha_seed), t.exponent,
                              t.zero_preserved ? "ok" : "FAIL",
                              t.inequality_ok ? "ok" : "FAIL", t.equality_ok ? "ok" : "FAIL",
                              t.sandwich_c1, t.sandwich_c2);
                table << buf;
            }
            std::snprintf(buf, sizeof buf, "equality passes    %d / %zu (tol %.3f)\n",
                          rep.equality_passes, rep.trials.size(), rep.equality_tol);
            table << buf;
            table << "inequalities hold  " << (rep.all_inequalities_hold ? "yes" : "NO") << "\n";
            emit(man, to_json(rep), g, table.str());
            bool all_eq = rep.equality_passes == static_cast<int>(rep.trials.size());
            if (!rep.all_inequalities_hold || !all_eq) return exit_code_for_fail(g);
            return 0;
        }

        if (*ver_cmd) {
            man.command = "verify";
            ExponentEstimate est = estimate_from_json(unwrap(load_json(ver_est, man)));
            BoundReport bound = bound_report_from_json(unwrap(load_json(ver_bound, man)));
            VerifyReport rep = verify_bound(est, bound, ver_tol);
            man.config = {{"fit_tol", ver_tol}};
            man.wall_seconds = timer.seconds();
            std::ostringstream table;
            table << (rep.verdict == Verdict::PASS ? "PASS" : "FAIL") << "  estimate "
                  << rep.estimate << " vs bound " << bound.value_string() << " ("
                  << (rep.direction == Direction::UPPER ? "upper" : "lower") << "), slack "
                  << rep.slack << "\n";
            emit(man, to_json(rep), g, table.str());
            if (rep.verdict == Verdict::FAIL) return exit_code_for_fail(g);
            return 0;
        }
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << " (best violation " << e.best_violation()
                  << ")\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: malformed JSON: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
