#include "delpezzo/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "delpezzo/json_io.hpp"

namespace delpezzo {

namespace {

/// Bad input detected after argument parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational_option(const std::string& option, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(option + ": " + e.what());
    }
}

Epsilon parse_epsilon(const std::string& text) {
    const Rational value = parse_rational_option("--epsilon", text);
    try {
        return Epsilon(value);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--epsilon: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

LogPair load_pair(const std::string& config_path, const std::string& boundary_path) {
    const Json config = read_json_file(config_path);
    const Json boundary = read_json_file(boundary_path);
    try {
        return LogPair(config_from_json(config), boundary_from_json(boundary));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed input: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid input: ") + e.what());
    }
}

std::optional<Rational> step_from_environment() {
    const char* env = std::getenv("DELPEZZO_GRID_STEP");
    if (env == nullptr || *env == '\0') return std::nullopt;
    const Rational step = parse_rational_option("DELPEZZO_GRID_STEP", env);
    if (step <= Rational(0)) throw UsageError("DELPEZZO_GRID_STEP must be positive");
    return step;
}

std::vector<AntiNefCertifier> default_certifiers(const LogPair& p) {
    // No general-position assumption: only unconditional patterns certify.
    const BlowupConfig& cfg = p.config();
    GeneralPositionSpec none{cfg.n(), cfg.k(), {}};
    return {thm71_certifier(), thm72_certifier(none)};
}

void print_bound(std::ostream& out, const BoundResult& b) {
    out << b.value << "\n";
    for (const auto& br : b.branches) {
        out << "branch " << br.label << ": " << br.value << "\n";
    }
    for (const auto& e : b.extremals) out << "extremal " << e.str() << "\n";
}

void print_opt(std::ostream& out, const CaseSpec& spec, const OptResult& r) {
    out << to_string(spec.id) << " n=" << spec.n;
    if (spec.id == CaseId::GeneralK) out << " k=" << spec.k;
    out << ": grid max " << (r.max_value ? r.max_value->str() : std::string("none")) << ", extremal "
        << r.extremal_value << (r.extremal_feasible ? "" : " (infeasible)") << ", closed form " << r.closed_form
        << ", " << r.feasible_points << " feasible points, " << r.violations << " violations, "
        << (r.verified ? "verified" : "NOT verified") << "\n";
    if (r.argmax_count > 1) out << "  " << r.argmax_count << " grid maximizers\n";
}

void print_report(std::ostream& out, const VerificationReport& r) {
    out << r.subject << "\n";
    for (const auto& c : r.checks) {
        out << (c.passed ? "  pass  " : "  FAIL  ") << c.description;
        if (c.witness) out << " [" << *c.witness << "]";
        out << "\n";
    }
    for (const auto& e : r.escapes) out << "  assumption: " << e.description << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    out << (r.overall ? "overall: pass" : "overall: FAIL") << "\n";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Volume bounds for epsilon-lc weak log del Pezzo surfaces"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    std::string epsilon_text;

    auto* bound = app.add_subcommand("bound", "Closed-form volume bound");
    std::string bound_kind;
    bound->add_option("kind", bound_kind, "main, rho3 or rho4")
        ->required()
        ->check(CLI::IsMember({"main", "rho3", "rho4"}));
    bound->add_option("--epsilon", epsilon_text, "p/q in (0, 1]")->required();
    bound->add_flag("--json", json);

    std::string config_path;
    std::string boundary_path;
    auto* vol = app.add_subcommand("volume", "Volume and nef-and-big status of a pair");
    vol->add_option("--config", config_path)->required();
    vol->add_option("--boundary", boundary_path)->required();
    vol->add_flag("--json", json);

    int depth = 2;
    auto* lc = app.add_subcommand("lc-check", "Certify epsilon-log canonicity");
    lc->add_option("--config", config_path)->required();
    lc->add_option("--boundary", boundary_path)->required();
    lc->add_option("--epsilon", epsilon_text)->required();
    lc->add_option("--depth", depth, "Blow-up depth over crossings")->check(CLI::Range(0, 8));
    lc->add_flag("--json", json);

    auto* opt = app.add_subcommand("optimize", "Grid-verify the volume maximizations");
    std::string case_text;
    std::optional<int> opt_n;
    int opt_k = 1;
    std::string step_text;
    bool all_cases_flag = false;
    opt->add_option("--case", case_text, "Fn-Case2, Rho3, Rho4-Sub11, Rho4-Sub12, Rho4-Sub21, Rho4-Sub22, General-k");
    opt->add_option("--epsilon", epsilon_text)->required();
    opt->add_option("--n", opt_n, "Single n; default every admissible n");
    opt->add_option("--k", opt_k, "Number of points for General-k")->check(CLI::NonNegativeNumber);
    opt->add_option("--step", step_text, "Grid step p/q");
    opt->add_flag("--all", all_cases_flag, "Sweep every case");
    opt->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "Certify the example constructions");
    verify->require_subcommand(1);
    int v_n = 0;
    int v_k = 0;
    int a_max = 50;
    int b_max = 50;
    auto* thm71 = verify->add_subcommand("thm71", "Two points on one fiber");
    thm71->add_option("--n", v_n)->required();
    thm71->add_option("--amax", a_max)->check(CLI::NonNegativeNumber);
    thm71->add_flag("--json", json);
    auto* thm72 = verify->add_subcommand("thm72", "k points on distinct fibers");
    thm72->add_option("--n", v_n)->required();
    thm72->add_option("--k", v_k)->required();
    thm72->add_option("--amax", a_max)->check(CLI::NonNegativeNumber);
    thm72->add_option("--bmax", b_max)->check(CLI::NonNegativeNumber);
    thm72->add_flag("--json", json);
    auto* ex74 = verify->add_subcommand("ex74", "k points on F_0 or F_1");
    ex74->add_option("--n", v_n)->required();
    ex74->add_option("--k", v_k)->required();
    ex74->add_flag("--json", json);

    auto* extremal = app.add_subcommand("extremal", "Extremal pairs of the main bound");
    extremal->add_option("--epsilon", epsilon_text)->required();
    extremal->add_flag("--json", json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*bound) {
            const Epsilon eps = parse_epsilon(epsilon_text);
            const BoundResult b =
                bound_kind == "main" ? main_bound(eps) : bound_kind == "rho3" ? rho3_bound(eps) : rho4_bound(eps);
            json ? emit(out, to_json(b)) : print_bound(out, b);
            return kExitOk;
        }
        if (*vol) {
            const LogPair p = load_pair(config_path, boundary_path);
            const auto certs = default_certifiers(p);
            const Rational v = volume(p);
            const NefVerdict nb = is_nef_and_big(p, certs);
            if (json) {
                emit(out, Json{{"volume", to_json(v)},
                               {"log_canonical_class", to_json(p.log_canonical_class())},
                               {"nef_and_big", to_json(nb)}});
            } else {
                out << v << "\n";
                out << "K + D = " << p.log_canonical_class().str() << "\n";
                out << "-(K + D) nef and big: " << to_string(nb.status);
                if (!nb.reason.empty()) out << " (" << nb.reason << ")";
                out << "\n";
            }
            return kExitOk;
        }
        if (*lc) {
            const Epsilon eps = parse_epsilon(epsilon_text);
            const LogPair p = load_pair(config_path, boundary_path);
            const DiscrepancyReport r = epsilon_lc_check(p, eps, depth);
            if (json) {
                emit(out, to_json(r));
            } else {
                for (const auto& e : r.entries) out << e.label << ": " << e.discrepancy << "\n";
                out << "verdict: " << to_string(r.verdict);
                if (!r.violated.empty()) out << " at " << r.violated;
                if (!r.note.empty()) out << " (" << r.note << ")";
                out << "\n";
            }
            return r.verdict == LcVerdict::EpsilonLC ? kExitOk : kExitVerificationFailed;
        }
        if (*opt) {
            const Epsilon eps = parse_epsilon(epsilon_text);
            std::optional<Rational> step;
            if (!step_text.empty()) {
                step = parse_rational_option("--step", step_text);
                if (*step <= Rational(0)) throw UsageError("--step must be positive");
            } else {
                step = step_from_environment();
            }
            if (all_cases_flag) {
                const SweepReport r = verify_all(eps, step.value_or(Rational(1, 16)));
                if (json) {
                    emit(out, to_json(r));
                } else {
                    for (const auto& e : r.entries) {
                        out << to_string(e.id) << " n=" << e.n;
                        if (e.id == CaseId::GeneralK) out << " k=" << e.k;
                        out << ": max " << e.result.best_value() << " <= " << e.bound << " (" << e.bound_label
                            << ") " << (e.passed ? "pass" : "FAIL") << "\n";
                    }
                    out << "global max " << r.global_max << "; rho4 branches A = " << r.rho4_branch_a
                        << ", B = " << r.rho4_branch_b << "\n";
                    out << (r.passed ? "sweep: pass" : "sweep: FAIL") << "\n";
                }
                return r.passed ? kExitOk : kExitVerificationFailed;
            }
            if (case_text.empty()) throw UsageError("optimize needs --case or --all");
            CaseId id;
            try {
                id = parse_case_id(case_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::vector<int> ns = opt_n ? std::vector<int>{*opt_n} : admissible_n(id, eps);
            if (opt_n && *opt_n < 0) throw UsageError("--n must be non-negative");
            bool all_verified = true;
            Json results = Json::array();
            for (int n : ns) {
                const CaseSpec spec = make_case(id, eps, n, opt_k);
                const OptResult r = grid_maximize(spec, step.value_or(default_step(spec)));
                all_verified = all_verified && r.verified;
                if (json) {
                    Json j = to_json(spec, r);
                    j["step"] = to_json(step.value_or(default_step(spec)));
                    results.push_back(j);
                } else {
                    print_opt(out, spec, r);
                }
            }
            if (json) emit(out, opt_n ? results.at(0) : results);
            return all_verified ? kExitOk : kExitVerificationFailed;
        }
        if (*verify) {
            VerificationReport r;
            try {
                if (*thm71) {
                    r = verify_thm71(v_n, a_max);
                } else if (*thm72) {
                    r = verify_thm72(v_n, v_k, a_max, b_max);
                } else {
                    r = verify_example74(v_n, v_k);
                }
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            json ? emit(out, to_json(r)) : print_report(out, r);
            return r.overall ? kExitOk : kExitVerificationFailed;
        }
        if (*extremal) {
            const Epsilon eps = parse_epsilon(epsilon_text);
            const BoundResult b = main_bound(eps);
            Json list = Json::array();
            for (const auto& d : b.extremals) {
                const Rational v = volume(instantiate(d));
                if (json) {
                    Json j = to_json(d);
                    j["volume"] = to_json(v);
                    list.push_back(j);
                } else {
                    out << d.str() << ": volume " << v << "\n";
                }
            }
            if (json) emit(out, Json{{"bound", to_json(b.value)}, {"extremals", list}});
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace delpezzo
