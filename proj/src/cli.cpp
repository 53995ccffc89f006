#include "trilie/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trilie/errors.hpp"
#include "trilie/parse.hpp"
#include "trilie/repmod.hpp"

namespace trilie {

namespace {

struct RunConfig {
    std::optional<std::string> window;
    std::string lambda = "sym";
    std::string mu = "sym";
    std::optional<std::string> probes;
    std::string output = "text";
    unsigned jobs = 0;
    std::size_t limit = 20;
    std::optional<std::string> start;

    Window window_or(Window fallback) const { return window ? Window::parse(*window) : fallback; }
    bool machine() const { return output == "machine"; }

    Scalar lambda_value() const { return parameter(lambda, Scalar::lambda(), "--lambda"); }
    Scalar mu_value() const { return parameter(mu, Scalar::mu(), "--mu"); }

    std::vector<WeightKey> probe_keys() const {
        if (!probes) return default_probes();
        std::vector<WeightKey> keys;
        std::stringstream ss(*probes);
        for (std::string item; std::getline(ss, item, ',');) keys.push_back(parse_weight_key(item));
        if (keys.empty()) throw ConfigError("--probes needs at least one weight key");
        return keys;
    }

private:
    static Scalar parameter(const std::string& text, const Scalar& symbol, const char* flag) {
        if (text == "sym") return symbol;
        Scalar s = parse_scalar(text);
        if (!s.is_constant()) throw ConfigError(std::string(flag) + " expects p/q or sym, got " + text);
        return s;
    }
};

/// Options whose value may begin with '-' ("--window -2..2"): CLI11 would
/// read such a value as a flag, so it is glued on as "--window=-2..2".
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
    static const std::vector<std::string> valued = {"--window", "--lambda", "--mu", "--start", "--probes"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const bool takes_value = std::find(valued.begin(), valued.end(), args[i]) != valued.end();
        if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
            !args[i + 1].starts_with("--")) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

std::string factored(const Scalar& s) {
    if (s.is_zero() || s.is_constant() || s.terms().size() == 1) return s.to_string();
    auto [c, prim] = s.content();
    if (c.is_one()) return prim.to_string();
    if (c == Rational(-1)) return "-(" + prim.to_string() + ")";
    return c.to_string() + "*(" + prim.to_string() + ")";
}

std::string factored(const ModVec& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : v) {
        if (!s.empty()) s += " + ";
        s += factored(c) + " " + k.to_string();
    }
    return s;
}

std::string keys_list(const std::vector<WeightKey>& keys) {
    std::string s;
    for (const auto& k : keys) s += (s.empty() ? "" : " ") + k.to_string();
    return s.empty() ? "-" : s;
}

void emit(std::ostream& out, const RunConfig& cfg, const DefectReport& r) {
    out << (cfg.machine() ? format_machine(r) : format_text(r, cfg.limit == 0 ? r.entries.size() : cfg.limit));
}

int cmd_bracket(const std::vector<std::string>& exprs, bool oracle, std::ostream& out) {
    const AlgElem x = parse_elem(exprs[0]), y = parse_elem(exprs[1]), z = parse_elem(exprs[2]);
    const AlgElem table = bracket(x, y, z);
    if (!oracle) {
        out << format(table) << "\n";
        return kExitExpected;
    }
    const AlgElem det = bracket_det(x, y, z);
    out << "table:  " << format(table) << "\n";
    out << "oracle: " << format(det) << "\n";
    out << (table == det ? "agree" : "DISAGREE") << "\n";
    return table == det ? kExitExpected : kExitUnexpected;
}

int cmd_pullback_phi(const RunConfig& cfg, std::ostream& out) {
    const Scalar mu = cfg.mu_value();
    const PullbackCounterexample c = counterexample_phi(mu);
    const bool found = !c.defect.is_zero();
    if (cfg.machine()) {
        nlohmann::json rec;
        rec["axiom"] = "module-axiom-2";
        rec["family"] = "pullback(Phi(" + mu.to_string() + "))";
        rec["parameters"] = {{"mu", mu.to_string()}};
        rec["indices"] = {"L[4]", "L[3]", "M[2]", "M[1]"};
        rec["probe"] = "v[0]";
        rec["lhs"] = factored(c.lhs);
        rec["rhs"] = factored(c.rhs);
        rec["defect"] = format(c.defect);
        out << rec.dump() << "\n";
        out << nlohmann::json{{"summary", {{"check", "pullback-phi"}, {"counterexample", found}}}}.dump() << "\n";
    } else {
        out << "pullback of Phi(" << mu.to_string() << ") at (L[4], L[3], M[2], M[1]) on v[0]\n";
        out << "  lhs    rho([L[4],L[3],M[2]], M[1]) v[0] = " << factored(c.lhs) << "\n";
        out << "  rhs    sum of the three products       = " << factored(c.rhs) << "\n";
        out << "  defect lhs - rhs                       = " << format(c.defect) << "\n";
        out << (found ? "counterexample found: the pullback is not a 3-Lie module (expected)"
                      : "no defect: counterexample NOT reproduced")
            << "\n";
    }
    return found ? kExitExpected : kExitUnexpected;
}

int cmd_check(const std::string& suite, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto probes = cfg.probe_keys();
    if (suite == "fi") {
        const auto r = check_fundamental(cfg.window_or({-2, 2}), bracket_basis, cfg.jobs);
        emit(out, cfg, r);
        return r.passed() ? kExitExpected : kExitUnexpected;
    }
    if (suite == "table") {
        const auto r = check_pqxz_table(cfg.window_or({-3, 3}), pqxz_bracket_table, cfg.jobs);
        emit(out, cfg, r);
        return r.passed() ? kExitExpected : kExitUnexpected;
    }
    if (suite == "module-t") {
        const auto t = TriAction::t_family(cfg.lambda_value(), cfg.mu_value());
        const auto v = module_verdict(t, cfg.window_or({-2, 2}), probes, cfg.jobs);
        emit(out, cfg, v.axiom1);
        emit(out, cfg, v.axiom2);
        if (!cfg.machine())
            out << t.name() << " is " << (v.is_module ? "" : "NOT ") << "a 3-Lie module"
                << (v.is_module && !(v.axiom1.passed() && v.axiom2.passed())
                        ? " for mu in {0, 1} (every defect divisible by mu^2 - mu)"
                        : "")
                << "\n";
        return v.is_module ? kExitExpected : kExitUnexpected;
    }
    if (suite == "lie-psi" || suite == "lie-phi") {
        const auto a = suite == "lie-psi" ? LieAction::psi(cfg.lambda_value(), cfg.mu_value())
                                          : LieAction::phi(cfg.mu_value());
        const auto r = check_lie_module(a, cfg.window_or({-3, 3}), probes, cfg.jobs);
        emit(out, cfg, r);
        return r.passed() ? kExitExpected : kExitUnexpected;
    }
    if (suite == "induced-psi") {
        const Scalar lambda = cfg.lambda_value(), mu = cfg.mu_value();
        const auto t = TriAction::t_family(lambda, mu);
        try {
            const auto r = check_induced(t, LieAction::psi(lambda, mu), cfg.window_or({-3, 3}), probes, cfg.jobs);
            emit(out, cfg, r);
            return r.passed() ? kExitExpected : kExitUnexpected;
        } catch (const NotAModule& e) {
            if (cfg.machine())
                out << nlohmann::json{{"summary", {{"check", "induced"}, {"passed", false}, {"reason", e.what()}}}}
                           .dump()
                    << "\n";
            else
                out << "induced: no induced module: " << e.what() << " -> FAIL\n";
            return kExitUnexpected;
        }
    }
    if (suite == "pullback-phi") return cmd_pullback_phi(cfg, out);
    err << "unknown suite " << suite << "\n";
    return kExitUsage;
}

int cmd_decompose(const std::string& expr, bool verify, const RunConfig& cfg, std::ostream& out) {
    const DerivInput in = parse_deriv(expr);
    PqxzElem coords = deriv_to_pqxz(in.generators);
    coords += in.basis;
    out << format(coords) << "\n";
    if (!verify) return kExitExpected;
    const Window w = cfg.window_or({-3, 3});
    DerivExpr original = in.generators;
    original += pqxz_to_deriv(in.basis);
    const bool ok = deriv_equal(pqxz_to_deriv(coords), original, w);
    out << (ok ? "verified: " : "MISMATCH: ") << "re-expansion " << (ok ? "acts as " : "differs from ")
        << "the input on window " << w.to_string() << "\n";
    return ok ? kExitExpected : kExitUnexpected;
}

Action family_action(const std::string& family, const RunConfig& cfg) {
    if (family == "T") return TriAction::t_family(cfg.lambda_value(), cfg.mu_value());
    if (family == "psi") return LieAction::psi(cfg.lambda_value(), cfg.mu_value());
    if (family == "phi") return LieAction::phi(cfg.mu_value());
    throw ConfigError("family must be T, psi or phi, got " + family);
}

int cmd_orbit(const std::string& family, const RunConfig& cfg, std::ostream& out) {
    if (!cfg.start) throw ConfigError("orbit needs --start");
    const Action a = family_action(family, cfg);
    const auto r = orbit_probe(a, parse_weight_key(*cfg.start), cfg.window_or({-3, 3}));
    const std::string name = std::visit([](const auto& x) { return x.name(); }, a);
    if (cfg.machine()) {
        auto strings = [](const std::vector<WeightKey>& ks) {
            std::vector<std::string> s;
            for (const auto& k : ks) s.push_back(k.to_string());
            return s;
        };
        nlohmann::json rec{{"family", name},
                           {"start", r.start.to_string()},
                           {"reached", strings(r.reached)},
                           {"missed", strings(r.missed)},
                           {"non_returning", strings(r.non_returning)},
                           {"annihilators", r.annihilators.size()},
                           {"generators", r.generator_count},
                           {"class", to_string(r.kind)},
                           {"summary", r.summary()}};
        out << rec.dump() << "\n";
    } else {
        out << "orbit of " << r.start.to_string() << " under " << name << "\n";
        out << "  reached:      " << keys_list(r.reached) << "\n";
        out << "  missed:       " << keys_list(r.missed) << "\n";
        out << "  annihilating: " << r.annihilators.size() << " of " << r.generator_count << " generators\n";
        if (!r.non_returning.empty()) out << "  one-way:      " << keys_list(r.non_returning) << "\n";
        out << r.summary() << "\n";
    }
    return kExitExpected;
}

int cmd_weights(const std::string& family, const RunConfig& cfg, std::ostream& out) {
    if (family != "T") throw ConfigError("weights supports the family T only, got " + family);
    const auto t = TriAction::t_family(cfg.lambda_value(), cfg.mu_value());
    const WeightKey start = parse_weight_key(cfg.start.value_or("a0"));
    std::vector<WeightKey> keys;
    for (auto m : cfg.window_or({-3, 3}).values()) keys.push_back(start.shifted(m));
    WeightReport r;
    try {
        r = weight_report(t, keys);
    } catch (const NotEigenvector& e) {
        out << "FAIL " << e.what() << "\n";
        return kExitUnexpected;
    }
    const bool ok = r.intermediate_series();
    if (cfg.machine()) {
        for (const auto& row : r.rows)
            out << nlohmann::json{{"key", row.key.to_string()},
                                  {"weight", row.weight.to_string()},
                                  {"multiplicity", row.multiplicity}}
                       .dump()
                << "\n";
        out << nlohmann::json{{"summary", {{"family", t.name()}, {"intermediate_series", ok}}}}.dump() << "\n";
    } else {
        out << "weights of " << t.name() << " under rho(L[0],M[0])\n";
        for (const auto& row : r.rows)
            out << "  " << row.key.to_string() << "  " << row.weight.to_string() << "  x" << row.multiplicity << "\n";
        out << (ok ? "all weight spaces one-dimensional -> PASS" : "repeated weights -> FAIL") << "\n";
    }
    return ok ? kExitExpected : kExitUnexpected;
}

void add_shared(CLI::App* app, RunConfig& cfg) {
    app->add_option("--window", cfg.window, "index window lo..hi");
    app->add_option("--lambda", cfg.lambda, "lambda as p/q or sym");
    app->add_option("--mu", cfg.mu, "mu as p/q or sym");
    app->add_option("--probes", cfg.probes, "comma-separated weight keys");
    app->add_option("--output", cfg.output, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app->add_option("--jobs", cfg.jobs, "worker threads (0 = auto)");
    app->add_option("--limit", cfg.limit, "defect lines shown in text output (0 = all)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the 3-Lie algebra A_omega^delta and its modules", "trilie"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::vector<std::string> exprs;
    bool oracle = false, verify = false;
    std::string suite, family, expr;

    auto* bracket_cmd = app.add_subcommand("bracket", "evaluate [X, Y, Z]");
    bracket_cmd->add_option("elements", exprs, "three element expressions")->required()->expected(3);
    bracket_cmd->add_flag("--oracle", oracle, "compare with the determinant formula");

    auto* check_cmd = app.add_subcommand("check", "run a verification suite");
    check_cmd->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"fi", "table", "module-t", "lie-psi", "lie-phi", "induced-psi", "pullback-phi"}));
    add_shared(check_cmd, cfg);

    auto* decompose_cmd = app.add_subcommand("decompose", "coordinates in the p/q/x/z basis");
    decompose_cmd->add_option("expr", expr)->required();
    decompose_cmd->add_flag("--verify", verify, "re-expand and compare actions");
    add_shared(decompose_cmd, cfg);

    auto* orbit_cmd = app.add_subcommand("orbit", "reachability of weight vectors");
    orbit_cmd->add_option("family", family)->required()->check(CLI::IsMember({"T", "psi", "phi"}));
    orbit_cmd->add_option("--start", cfg.start, "start weight key");
    add_shared(orbit_cmd, cfg);

    auto* weights_cmd = app.add_subcommand("weights", "weights under the Cartan element");
    weights_cmd->add_option("family", family)->required();
    weights_cmd->add_option("--start", cfg.start, "first weight key (default a0)");
    add_shared(weights_cmd, cfg);

    std::vector<std::string> reversed = glue_negative_values(args);
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitExpected;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitExpected;
    } catch (const CLI::ParseError& e) {
        err << "trilie: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*bracket_cmd) return cmd_bracket(exprs, oracle, out);
        if (*check_cmd) return cmd_check(suite, cfg, out, err);
        if (*decompose_cmd) return cmd_decompose(expr, verify, cfg, out);
        if (*orbit_cmd) return cmd_orbit(family, cfg, out);
        if (*weights_cmd) return cmd_weights(family, cfg, out);
    } catch (const NotAModule& e) {
        err << "trilie: " << e.what() << "\n";
        return kExitUnexpected;
    } catch (const Error& e) {
        err << "trilie: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace trilie
